// test_exponent_ring.cpp
// ----------------------
// Unit tests for the generalized Laurent ring: arithmetic, the term order,
// exact division (including the Weyl-sum quotient checked against independent
// numeric evaluation), evaluation, ring membership, the canonical text form,
// and fractions.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <superlink/errors.hpp>
#include <superlink/exponent_ring.hpp>

#include <random>

using namespace superlink;

namespace {

const int kA = 1;  // symbol indices used throughout
const int kB = 2;

ExponentForm ef(long c) { return ExponentForm(c); }

LaurentElement q_int(long e) { return LaurentElement::q_power(ef(e)); }

// q^e - q^{-e}
LaurentElement bracket_of(const ExponentForm& e) {
  return LaurentElement::q_power(e) - LaurentElement::q_power(-e);
}

Rational rnd_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  Rational out(num(rng), den(rng));
  out.canonicalize();
  return out;
}

// Random element with small integer exponents in q, a1, a2 and a1a2, so that
// integer-point evaluation is always valid.
LaurentElement rnd_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(0, 4);
  std::uniform_int_distribution<int> e(-3, 3);
  LaurentElement out;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    ExponentForm exponent(e(rng));
    exponent += ExponentForm::symbol(kA, Rational(e(rng)));
    exponent += ExponentForm::symbol(kB, Rational(e(rng)));
    exponent += ExponentForm::pair_term(kA, kB, Rational(e(rng)));
    Rational c = rnd_rational(rng);
    out += LaurentElement::monomial(c, exponent);
  }
  return out;
}

}  // namespace

TEST_CASE("exponent form order and arithmetic") {
  ExponentForm zero;
  CHECK(zero.is_zero());
  CHECK(ef(1).compare(ef(0)) > 0);
  CHECK(ef(-1) < zero);

  // constant dominates, then linear read in ascending symbol order
  ExponentForm a1 = ExponentForm::symbol(kA);
  CHECK(zero < a1);                       // a1 coefficient 1 beats 0
  CHECK(-a1 < zero);
  CHECK(a1 < ef(1));                      // constants differ first
  ExponentForm two_a2 = ExponentForm::symbol(kB, Rational(2));
  CHECK(two_a2 < a1);                     // first difference is at a1
  ExponentForm mixed = a1 + two_a2;
  CHECK(a1 < mixed);                      // tie on a1, decided at a2

  // quadratic decides last
  ExponentForm sq = ExponentForm::pair_term(kA, kA);
  CHECK(sq < a1);
  CHECK(zero < sq);

  CHECK((a1 + a1) == ExponentForm::symbol(kA, Rational(2)));
  CHECK((a1 - a1).is_zero());
  CHECK((Rational(3) * a1) == ExponentForm::symbol(kA, Rational(3)));
}

TEST_CASE("affine products stay in the quadratic span") {
  // (2a+1)(b-1) = 2ab - 2a + b - 1
  ExponentForm x = ExponentForm::symbol(kA, Rational(2)) + ef(1);
  ExponentForm y = ExponentForm::symbol(kB) - ef(1);
  ExponentForm p = ExponentForm::affine_product(x, y);
  CHECK(p.constant_part() == -1);
  CHECK(p.linear_coeff(kA) == -2);
  CHECK(p.linear_coeff(kB) == 1);
  CHECK(p.quadratic().at({kA, kB}) == 2);

  // squares land on the diagonal pair
  ExponentForm s = ExponentForm::affine_product(ExponentForm::symbol(kA), ExponentForm::symbol(kA));
  CHECK(s.quadratic().at({kA, kA}) == 1);

  CHECK_THROWS_AS(ExponentForm::affine_product(p, y), Error);
}

TEST_CASE("ring operations on named examples") {
  // q^a * q^b = q^{a+b}
  LaurentElement qa = LaurentElement::q_power(ExponentForm::symbol(kA));
  LaurentElement qb = LaurentElement::q_power(ExponentForm::symbol(kB));
  LaurentElement prod = qa * qb;
  CHECK(prod.is_monomial());
  CHECK(prod.leading_term().first == ExponentForm::symbol(kA) + ExponentForm::symbol(kB));

  // q^a * q^{ab} = q^{a+ab}
  LaurentElement qab = LaurentElement::q_power(ExponentForm::pair_term(kA, kB));
  CHECK((qa * qab).leading_term().first ==
        ExponentForm::symbol(kA) + ExponentForm::pair_term(kA, kB));

  // (q - q^{-1})(q + q^{-1}) = q^2 - q^{-2}
  LaurentElement diff = q_int(1) - q_int(-1);
  LaurentElement sum = q_int(1) + q_int(-1);
  CHECK(diff * sum == q_int(2) - q_int(-2));

  // cancellation produces the empty term map
  CHECK((diff - diff).is_zero());
  CHECK(diff.pow(0).is_one());
  CHECK(diff.pow(2) == q_int(2) - LaurentElement::constant(Rational(2)) + q_int(-2));
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(20240816u);
  for (int trial = 0; trial < 25; ++trial) {
    LaurentElement x = rnd_element(rng);
    LaurentElement y = rnd_element(rng);
    LaurentElement z = rnd_element(rng);
    CHECK((x + y) * z == x * z + y * z);
    CHECK(x * (y * z) == (x * y) * z);
    CHECK(x * y == y * x);
    CHECK(x + y == y + x);
    CHECK((x - x).is_zero());
  }
}

TEST_CASE("exact division basics") {
  // [2] = (q^2 - q^{-2})/(q - q^{-1}) = q + q^{-1}
  CHECK(exact_div(q_int(2) - q_int(-2), q_int(1) - q_int(-1)) == q_int(1) + q_int(-1));

  // x/x = 1 with a symbolic exponent
  LaurentElement x = bracket_of(ExponentForm::symbol(kA) + ef(1));
  CHECK(exact_div(x, x).is_one());

  // division by zero and true failures
  CHECK_THROWS_AS(exact_div(q_int(1), LaurentElement::zero()), Error);
  CHECK(!try_exact_div(LaurentElement::one(), q_int(1) - q_int(-1)).has_value());
  CHECK(!try_exact_div(q_int(1), q_int(1) + LaurentElement::one()).has_value());
  CHECK(try_exact_div(LaurentElement::zero(), x).has_value());
}

TEST_CASE("division round-trips on random pairs") {
  std::mt19937_64 rng(777u);
  int checked = 0;
  while (checked < 25) {
    LaurentElement a = rnd_element(rng);
    LaurentElement b = rnd_element(rng);
    if (b.is_zero()) continue;
    CHECK(exact_div(a * b, b) == a);
    ++checked;
  }
}

TEST_CASE("Weyl-sum quotient matches independent numeric evaluation") {
  // The alternating sum over S_2 for sl(2|1), both labels c = 0, divided by
  // the Weyl denominator q - q^{-1}.  Exponents computed by hand from the
  // supertrace-projected pairing: the two summands are
  //   q^{-4ab - 2a - 2b}  and  -q^{-4ab - 2a - 2b - 2}.
  ExponentForm top = ExponentForm::pair_term(kA, kB, Rational(-4)) +
                     ExponentForm::symbol(kA, Rational(-2)) +
                     ExponentForm::symbol(kB, Rational(-2));
  LaurentElement weyl_sum =
      LaurentElement::q_power(top) - LaurentElement::q_power(top - ef(2));
  LaurentElement den = q_int(1) - q_int(-1);
  LaurentElement quotient = exact_div(weyl_sum, den);

  // closed form: a single monomial q^{-4ab-2a-2b-1}
  CHECK(quotient == LaurentElement::q_power(top - ef(1)));

  // independent oracle: numeric evaluation at 10 random points with integer
  // parameter values (so every exponent is an integer) and rational q
  std::mt19937_64 rng(424242u);
  std::uniform_int_distribution<int> ab(-6, 6);
  std::uniform_int_distribution<int> qnum(2, 9);
  std::uniform_int_distribution<int> qden(1, 5);
  for (int trial = 0; trial < 10; ++trial) {
    std::map<int, Rational> at{{kA, Rational(ab(rng))}, {kB, Rational(ab(rng))}};
    Rational q(qnum(rng), qden(rng));
    q.canonicalize();
    if (q == 1) q += 1;
    Rational lhs = eval_at(quotient, at, q) * eval_at(den, at, q);
    CHECK(lhs == eval_at(weyl_sum, at, q));
  }
}

TEST_CASE("evaluation") {
  std::map<int, Rational> at{{kA, Rational(1)}, {kB, Rational(3)}};
  // q^{2a} at a=1, q=3
  LaurentElement x = LaurentElement::q_power(ExponentForm::symbol(kA, Rational(2)));
  CHECK(eval_at(x, at, Rational(3)) == 9);

  // q^a - q^{-a} at a=0
  std::map<int, Rational> zero{{kA, Rational(0)}};
  LaurentElement y = bracket_of(ExponentForm::symbol(kA));
  CHECK(eval_at(y, zero, Rational(7)) == 0);

  // q^{ab} at a=2, b=3, q=2
  std::map<int, Rational> at23{{kA, Rational(2)}, {kB, Rational(3)}};
  LaurentElement z = LaurentElement::q_power(ExponentForm::pair_term(kA, kB));
  CHECK(eval_at(z, at23, Rational(2)) == 64);

  // rational exponents need q presented as an exact power
  LaurentElement half = LaurentElement::q_power(ExponentForm(Rational(1, 2)));
  CHECK_THROWS_AS(eval_at(half, {}, Rational(5)), Error);
  CHECK(eval_at(half, {}, Rational(5), 2) == 5);  // q = 5^2, q^{1/2} = 5

  // evaluation is a ring homomorphism
  std::mt19937_64 rng(99u);
  for (int trial = 0; trial < 10; ++trial) {
    LaurentElement u = rnd_element(rng);
    LaurentElement v = rnd_element(rng);
    std::map<int, Rational> pt{{kA, Rational(2)}, {kB, Rational(-1)}};
    Rational q(3, 2);
    CHECK(eval_at(u * v, pt, q) == eval_at(u, pt, q) * eval_at(v, pt, q));
    CHECK(eval_at(u + v, pt, q) == eval_at(u, pt, q) + eval_at(v, pt, q));
  }
}

TEST_CASE("partial substitution") {
  // q^{2ab + a + 3} at b = 2 becomes q^{5a + 3}; at a = 0 becomes q^3
  ExponentForm e = ExponentForm::pair_term(kA, kB, Rational(2)) + ExponentForm::symbol(kA) + ef(3);
  LaurentElement x = LaurentElement::q_power(e);
  CHECK(substitute(x, {{kB, Rational(2)}}) ==
        LaurentElement::q_power(ExponentForm::symbol(kA, Rational(5)) + ef(3)));
  CHECK(substitute(x, {{kA, Rational(0)}}) == q_int(3));
  CHECK(substitute(x, {{kA, Rational(1)}, {kB, Rational(-1)}}) == q_int(2));

  // substitution can make terms collide and cancel
  LaurentElement y = LaurentElement::q_power(ExponentForm::symbol(kA)) - q_int(2);
  CHECK(substitute(y, {{kA, Rational(2)}}).is_zero());

  // unassigned symbols stay formal; substitution commutes with arithmetic
  std::mt19937_64 rng(88u);
  for (int trial = 0; trial < 10; ++trial) {
    LaurentElement u = rnd_element(rng);
    LaurentElement v = rnd_element(rng);
    std::map<int, Rational> sub{{kA, frac(3, 2)}};
    CHECK(substitute(u * v, sub) == substitute(u, sub) * substitute(v, sub));
    CHECK(substitute(u + v, sub) == substitute(u, sub) + substitute(v, sub));
  }
}

TEST_CASE("polynomial ring membership") {
  std::set<int> allowed{kA};
  // q^2 - 3 q^{-1} q^{a1}
  LaurentElement good =
      q_int(2) - LaurentElement::monomial(Rational(3), ef(-1) + ExponentForm::symbol(kA));
  CHECK(check_polynomial_ring(good, allowed).pass);

  LaurentElement quad = LaurentElement::q_power(ExponentForm::pair_term(kA, kB));
  auto r1 = check_polynomial_ring(quad, allowed);
  CHECK(!r1.pass);
  CHECK(r1.failures.size() == 1);  // the quadratic part is flagged wholesale

  LaurentElement half = LaurentElement::q_power(ExponentForm(Rational(1, 2)));
  CHECK(!check_polynomial_ring(half, allowed).pass);

  LaurentElement frac_coeff = LaurentElement::constant(Rational(1, 3));
  CHECK(!check_polynomial_ring(frac_coeff, allowed).pass);

  LaurentElement wrong_symbol = LaurentElement::q_power(ExponentForm::symbol(kB));
  CHECK(!check_polynomial_ring(wrong_symbol, allowed).pass);
}

TEST_CASE("canonical text form") {
  CHECK(to_canonical_string(LaurentElement::zero()) == "0");
  CHECK(to_canonical_string(LaurentElement::one()) == "1");
  CHECK(to_canonical_string(LaurentElement::constant(Rational(-5, 3))) == "-5/3");
  CHECK(to_canonical_string(q_int(1) - q_int(-1)) == "q^(1) - q^(-1)");

  // q^a prints as a factor of the symbol generator
  LaurentElement qa = LaurentElement::q_power(ExponentForm::symbol(kA));
  CHECK(to_canonical_string(qa) == "a1^(1)");

  // descending term order, coefficient placement, quadratic factor naming
  LaurentElement x = LaurentElement::monomial(Rational(-3, 2),
                                              ef(2) + ExponentForm::symbol(kA, Rational(1, 2))) +
                     LaurentElement::q_power(ExponentForm::pair_term(kA, kB, Rational(-1))) +
                     LaurentElement::constant(Rational(7));
  CHECK(to_canonical_string(x) == "-3/2*q^(2)*a1^(1/2) + 7 + a1a2^(-1)");

  // parser round-trips the canonical form
  for (const auto& text :
       {"0", "1", "-5/3", "q^(1) - q^(-1)", "a1^(1)", "-3/2*q^(2)*a1^(1/2) + 7 + a1a2^(-1)",
        "q^(2)*a1a1^(-2) - 1/2*a2^(3)"}) {
    LaurentElement parsed = parse_element(text);
    CHECK(to_canonical_string(parsed) == text);
  }

  // round trip on random elements
  std::mt19937_64 rng(5150u);
  for (int trial = 0; trial < 30; ++trial) {
    LaurentElement x2 = rnd_element(rng);
    CHECK(parse_element(to_canonical_string(x2)) == x2);
  }

  CHECK_THROWS_AS(parse_element(""), Error);
  CHECK_THROWS_AS(parse_element("q^2"), Error);       // missing parentheses
  CHECK_THROWS_AS(parse_element("w^(1)"), Error);     // unknown name
  CHECK_THROWS_AS(parse_element("q^(1) +"), Error);   // dangling operator
}

TEST_CASE("fractions") {
  LaurentElement bracket1 = q_int(1) - q_int(-1);
  LaurentFraction inv(LaurentElement::one(), bracket1);
  CHECK(!inv.is_element());
  CHECK((inv * LaurentFraction(bracket1)).is_element());
  CHECK((inv * LaurentFraction(bracket1)).as_element().is_one());

  // cross-multiplied equality identifies equivalent presentations
  LaurentFraction half_a(q_int(2) - q_int(-2), bracket1 * (q_int(1) + q_int(-1)));
  CHECK(half_a.equals(LaurentFraction::one()));

  // 1/(q-q^{-1}) + 1/(q+q^{-1}) = 2q/(q^2 - q^{-2})
  LaurentFraction sum = inv + LaurentFraction(LaurentElement::one(), q_int(1) + q_int(-1));
  LaurentFraction expected(LaurentElement::monomial(Rational(2), ef(1)), q_int(2) - q_int(-2));
  CHECK(sum.equals(expected));

  // monomial denominators clear automatically
  LaurentFraction mono(q_int(2) + q_int(1), q_int(1));
  CHECK(mono.is_element());
  CHECK(mono.as_element() == q_int(1) + LaurentElement::one());

  CHECK_THROWS_AS(inv.as_element(), Error);
  CHECK(inv.inverse().is_element());
  CHECK(inv.pow(-1).as_element() == bracket1);
}
