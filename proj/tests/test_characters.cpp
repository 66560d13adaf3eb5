// test_characters.cpp
// -------------------
// Oracle tests for the character-level layer: vanishing of the super
// evaluation at rho, agreement of the two evaluation routes, the hand-expanded
// S' for sl(2|1), symmetry and closed form of the normalized Hopf pairing,
// the factored fake dimension, and twist exponents.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <superlink/characters.hpp>

#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <vector>

using namespace superlink;

namespace {

constexpr int kA = 1;  // parameter of the first label, prints as a1
constexpr int kB = 2;  // parameter of the second label, prints as a2

std::shared_ptr<const RootData> algebra(Family family, int m, int n) {
  return std::make_shared<RootData>(build_root_data(AlgebraSpec{family, m, n}));
}

TypicalLabel sym_label(std::shared_ptr<const RootData> rd, std::vector<long> c, int symbol = kA,
                       bool odd = false) {
  return make_label(std::move(rd), std::move(c), ExponentForm::symbol(symbol), odd);
}

TypicalLabel num_label(std::shared_ptr<const RootData> rd, std::vector<long> c, Rational value) {
  return make_label(std::move(rd), std::move(c), ExponentForm(std::move(value)));
}

ExponentForm ef(long k) { return ExponentForm(Rational(k)); }

// q^e - q^{-e} for a constant exponent
LaurentElement bracket_int(long k) {
  LaurentElement out = LaurentElement::q_power(ef(k));
  out -= LaurentElement::q_power(ef(-k));
  return out;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& err) {
    return err.code();
  }
  return Errc::internal_error;
}

Weight numeric_weight(const std::vector<Rational>& coords) {
  Weight w(static_cast<int>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) w.coords[i] = ExponentForm(coords[i]);
  return w;
}

bool even_pairings_nonzero(const RootData& rd, const Weight& beta) {
  for (const Root& root : rd.positive_roots) {
    if (root.odd) continue;
    if (pair_weights(rd, root.weight, beta).constant_part() == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("label validation and typicality") {
  auto sl21 = algebra(Family::sl, 2, 1);

  CHECK(sym_label(sl21, {0}).symbol() == kA);
  CHECK(sym_label(sl21, {0}).symbolic());
  CHECK(sym_label(sl21, {0}).typical());
  CHECK_FALSE(num_label(sl21, {0}, Rational(5)).symbolic());
  CHECK(num_label(sl21, {0}, Rational(5)).typical());
  // c = (0): the label is atypical exactly at a = 0 and a = -1.
  CHECK_FALSE(num_label(sl21, {0}, Rational(0)).typical());
  CHECK_FALSE(num_label(sl21, {0}, Rational(-1)).typical());
  CHECK(num_label(sl21, {0}, Rational(1, 2)).typical());

  // Parameter must be a bare symbol or a constant.
  CHECK(code_of([&] { make_label(sl21, {0}, ExponentForm::symbol(kA, Rational(2))); }) ==
        Errc::invalid_spec);
  ExponentForm shifted = ExponentForm::symbol(kA);
  shifted += ef(1);
  CHECK(code_of([&] { make_label(sl21, {0}, shifted); }) == Errc::invalid_spec);
  CHECK(code_of([&] { make_label(sl21, {0}, ExponentForm::pair_term(kA, kB)); }) ==
        Errc::invalid_spec);
  // The c part is validated on construction.
  CHECK(code_of([&] { make_label(sl21, {0, 1}, ExponentForm::symbol(kA)); }) == Errc::invalid_spec);
  CHECK(code_of([&] { make_label(sl21, {-2}, ExponentForm::symbol(kA)); }) == Errc::negative_label);
}

TEST_CASE("super evaluation at rho vanishes, ordinary one does not") {
  struct Case {
    Family family;
    int m, n;
    std::vector<long> c;
  };
  const std::vector<Case> cases = {
      {Family::sl, 2, 1, {0}},  {Family::sl, 2, 1, {2}},    {Family::sl, 3, 1, {1, 0}},
      {Family::osp, 2, 1, {1}}, {Family::osp, 2, 2, {0, 2}},
  };
  for (const Case& c : cases) {
    auto rd = algebra(c.family, c.m, c.n);
    TypicalLabel label = sym_label(rd, c.c);
    const std::string algebra_name = rd->spec.name();
    CAPTURE(algebra_name);
    CHECK(phi_char(label, rd->rho, CharVariant::super_char, CharRoute::factored).is_zero());
    CHECK(phi_char(label, rd->rho, CharVariant::super_char, CharRoute::weyl_sum).is_zero());
  }

  auto sl21 = algebra(Family::sl, 2, 1);
  CHECK_FALSE(
      phi_char(sym_label(sl21, {0}), sl21->rho, CharVariant::ordinary_char).is_zero());
}

TEST_CASE("the two evaluation routes agree on symbolic weights") {
  struct Case {
    Family family;
    int m, n;
    std::vector<long> c_first, c_second;
  };
  const std::vector<Case> cases = {
      {Family::sl, 2, 1, {0}, {0}},
      {Family::sl, 2, 1, {1}, {2}},
      {Family::sl, 2, 1, {2}, {0}},
      {Family::osp, 2, 2, {0, 0}, {1, 0}},
      {Family::osp, 2, 1, {1}, {3}},
  };
  for (const Case& c : cases) {
    auto rd = algebra(c.family, c.m, c.n);
    TypicalLabel label = sym_label(rd, c.c_first, kA);
    Weight beta = weight_from_label(*rd, c.c_second, ExponentForm::symbol(kB));
    beta += rd->rho;
    const std::string algebra_name = rd->spec.name();
    CAPTURE(algebra_name);
    for (CharVariant variant : {CharVariant::super_char, CharVariant::ordinary_char}) {
      LaurentElement factored = phi_char(label, beta, variant, CharRoute::factored);
      LaurentElement summed = phi_char(label, beta, variant, CharRoute::weyl_sum);
      CHECK(factored == summed);
      CHECK_FALSE(factored.is_zero());
    }
  }
}

TEST_CASE("the two evaluation routes agree at random numeric weights") {
  auto sl32 = algebra(Family::sl, 3, 2);
  TypicalLabel label = sym_label(sl32, {1, 0, 0});
  std::mt19937 rng(20260816);
  std::uniform_int_distribution<int> coord(-4, 4);
  std::uniform_int_distribution<int> denom(1, 3);
  int done = 0;
  while (done < 10) {
    std::vector<Rational> coords;
    for (int i = 0; i < sl32->spec.basis_dim(); ++i) {
      coords.push_back(frac(coord(rng), denom(rng)));
    }
    Weight beta = numeric_weight(coords);
    if (!even_pairings_nonzero(*sl32, beta)) continue;
    ++done;
    CharVariant variant = done % 2 == 0 ? CharVariant::super_char : CharVariant::ordinary_char;
    LaurentElement factored = phi_char(label, beta, variant, CharRoute::factored);
    LaurentElement summed = phi_char(label, beta, variant, CharRoute::weyl_sum);
    CHECK(factored == summed);
  }
}

TEST_CASE("S' for sl(2|1) matches its four-term expansion") {
  auto sl21 = algebra(Family::sl, 2, 1);
  TypicalLabel lambda = sym_label(sl21, {0}, kA);
  TypicalLabel mu = sym_label(sl21, {0}, kB);

  // phi_{mu+rho}(sch V(lambda)) expanded by hand over the four weights
  // lambda, lambda - alpha_2, lambda - alpha_1 - alpha_2,
  // lambda - alpha_1 - 2 alpha_2:
  //   q^{-4ab-2a} - q^{-4ab-2a-2b} - q^{-4ab-2a-2b-2} + q^{-4ab-2a-4b-2}
  ExponentForm top = ExponentForm::pair_term(kA, kB, Rational(-4));
  top += ExponentForm::symbol(kA, Rational(-2));
  ExponentForm second = top;
  second += ExponentForm::symbol(kB, Rational(-2));
  ExponentForm third = second;
  third += ef(-2);
  ExponentForm fourth = third;
  fourth += ExponentForm::symbol(kB, Rational(-2));

  LaurentElement expected;
  expected.add_term(top, Rational(1));
  expected.add_term(second, Rational(-1));
  expected.add_term(third, Rational(-1));
  expected.add_term(fourth, Rational(1));

  LaurentElement got = sprime(lambda, mu);
  CHECK(got == expected);

  // Vanishes when the second label is pinned to an atypical value...
  for (long b : {0L, -1L}) {
    CHECK(substitute(got, {{kB, Rational(b)}}).is_zero());
    CHECK(sprime(lambda, num_label(sl21, {0}, Rational(b))).is_zero());
  }
  // ...and nowhere else.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-8, 8);
  std::uniform_int_distribution<int> den(1, 4);
  int done = 0;
  while (done < 10) {
    Rational b = frac(num(rng), den(rng));
    if (b == 0 || b == -1) continue;
    ++done;
    LaurentElement pinned = substitute(got, {{kB, b}});
    CHECK_FALSE(pinned.is_zero());
    CHECK(pinned == sprime(lambda, num_label(sl21, {0}, b)));
  }

  // The first label must be typical.
  CHECK(code_of([&] { sprime(num_label(sl21, {0}, Rational(0)), mu); }) == Errc::atypical_label);
  // Labels must live in the same algebra.
  auto osp22 = algebra(Family::osp, 2, 1);
  CHECK(code_of([&] { sprime(lambda, sym_label(osp22, {0}, kB)); }) == Errc::color_mismatch);
}

TEST_CASE("normalized Hopf pairing: closed form, symmetry, parity signs") {
  auto sl21 = algebra(Family::sl, 2, 1);
  TypicalLabel lambda = sym_label(sl21, {0}, kA);
  TypicalLabel mu = sym_label(sl21, {0}, kB);

  ExponentForm e = ExponentForm::pair_term(kA, kB, Rational(-4));
  e += ExponentForm::symbol(kA, Rational(-2));
  e += ExponentForm::symbol(kB, Rational(-2));
  e += ef(-1);
  CHECK(normalized_hopf(lambda, mu) == LaurentElement::q_power(e));

  struct Case {
    Family family;
    int m, n;
    std::vector<long> c_first, c_second;
  };
  const std::vector<Case> cases = {
      {Family::sl, 2, 1, {0}, {0}},     {Family::sl, 2, 1, {1}, {2}},
      {Family::sl, 2, 1, {2}, {5}},     {Family::sl, 3, 1, {1, 0}, {0, 2}},
      {Family::osp, 2, 1, {0}, {1}},    {Family::osp, 2, 2, {2, 0}, {0, 3}},
  };
  for (const Case& c : cases) {
    auto rd = algebra(c.family, c.m, c.n);
    TypicalLabel x = sym_label(rd, c.c_first, kA);
    TypicalLabel y = sym_label(rd, c.c_second, kB);
    const std::string algebra_name = rd->spec.name();
    CAPTURE(algebra_name);
    LaurentElement forward = normalized_hopf(x, y);
    CHECK(forward == normalized_hopf(y, x));
    CHECK_FALSE(forward.is_zero());
  }

  // Parity-shifted labels flip the sign once per shifted argument.
  TypicalLabel lambda_odd = sym_label(sl21, {0}, kA, true);
  TypicalLabel mu_odd = sym_label(sl21, {0}, kB, true);
  LaurentElement base = normalized_hopf(lambda, mu);
  CHECK(normalized_hopf(lambda_odd, mu) == -base);
  CHECK(normalized_hopf(lambda, mu_odd) == -base);
  CHECK(normalized_hopf(lambda_odd, mu_odd) == base);
  // S' only sees the parity of its first argument.
  CHECK(sprime(lambda_odd, mu) == -sprime(lambda, mu));
  CHECK(sprime(lambda, mu_odd) == sprime(lambda, mu));
}

TEST_CASE("normalized Hopf pairing ties S' and the fake dimension together") {
  struct Case {
    Family family;
    int m, n;
    std::vector<long> c_first, c_second;
  };
  const std::vector<Case> cases = {
      {Family::sl, 2, 1, {1}, {2}},
      {Family::sl, 2, 1, {0}, {0}},
      {Family::osp, 2, 1, {0}, {1}},
  };
  for (const Case& c : cases) {
    auto rd = algebra(c.family, c.m, c.n);
    TypicalLabel lambda = sym_label(rd, c.c_first, kA);
    TypicalLabel mu = sym_label(rd, c.c_second, kB);
    const std::string algebra_name = rd->spec.name();
    CAPTURE(algebra_name);
    DhatParts parts = dhat(mu);
    // normalized_hopf = dhat(mu) * S'(lambda, mu), cleared of denominators.
    LaurentElement lhs = normalized_hopf(lambda, mu) * parts.m1;
    LaurentElement rhs = parts.m0 * sprime(lambda, mu);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("fake quantum dimension in factored form") {
  auto sl21 = algebra(Family::sl, 2, 1);

  SUBCASE("sl(2|1), c = (0)") {
    DhatParts parts = dhat(sym_label(sl21, {0}));
    CHECK(parts.m0.is_one());

    LaurentElement m1;  // (q^{a+1} - q^{-a-1})(q^a - q^{-a})
    ExponentForm two_a_plus_1 = ExponentForm::symbol(kA, Rational(2));
    two_a_plus_1 += ef(1);
    ExponentForm neg = ExponentForm::symbol(kA, Rational(-2));
    neg += ef(-1);
    m1.add_term(two_a_plus_1, Rational(1));
    m1.add_term(ef(1), Rational(-1));
    m1.add_term(ef(-1), Rational(-1));
    m1.add_term(neg, Rational(1));
    CHECK(parts.m1 == m1);
    CHECK(to_canonical_string(parts.m1) == "q^(1)*a1^(2) - q^(1) - q^(-1) + q^(-1)*a1^(-2)");

    LaurentFraction expected(LaurentElement::one());
    expected *= LaurentFraction(m1).inverse();
    CHECK(parts.value.equals(expected));

    // Parity shift negates the value but not the factors.
    DhatParts shifted = dhat(sym_label(sl21, {0}, kA, true));
    CHECK(shifted.m0 == parts.m0);
    CHECK(shifted.m1 == parts.m1);
    CHECK(shifted.value.equals(-parts.value));
  }

  SUBCASE("sl(2|1), growing even factor") {
    for (long c1 : {1L, 2L, 3L}) {
      DhatParts parts = dhat(sym_label(sl21, {c1}));
      LaurentElement balanced;  // [c1 + 1] = sum_j q^{c1 - 2j}
      for (long j = 0; j <= c1; ++j) balanced.add_term(ef(c1 - 2 * j), Rational(1));
      CHECK(parts.m0 == balanced);
      CHECK(check_polynomial_ring(parts.m0, {}).pass);
      CHECK(check_polynomial_ring(parts.m1, {kA}).pass);
    }
  }

  SUBCASE("osp(2|2), c = (0)") {
    auto osp22 = algebra(Family::osp, 2, 1);
    DhatParts parts = dhat(sym_label(osp22, {0}));
    CHECK(parts.m0.is_one());
    // (q^a - q^{-a})(q^{a-2} - q^{2-a})
    LaurentElement expected;
    ExponentForm lead = ExponentForm::symbol(kA, Rational(2));
    lead += ef(-2);
    ExponentForm tail = ExponentForm::symbol(kA, Rational(-2));
    tail += ef(2);
    expected.add_term(lead, Rational(1));
    expected.add_term(ef(2), Rational(-1));
    expected.add_term(ef(-2), Rational(-1));
    expected.add_term(tail, Rational(1));
    CHECK(parts.m1 == expected);
  }

  SUBCASE("numeric labels") {
    CHECK(code_of([&] { dhat(num_label(sl21, {0}, Rational(0))); }) == Errc::atypical_label);
    CHECK(code_of([&] { dhat(num_label(sl21, {0}, Rational(-1))); }) == Errc::atypical_label);
    DhatParts parts = dhat(num_label(sl21, {0}, Rational(3)));
    CHECK(parts.m0.is_one());
    CHECK(parts.m1 == bracket_int(4) * bracket_int(3));
  }
}

TEST_CASE("twist exponents") {
  auto sl21 = algebra(Family::sl, 2, 1);
  ExponentForm expected = ExponentForm::pair_term(kA, kA, Rational(-2));
  expected += ExponentForm::symbol(kA, Rational(-2));
  CHECK(twist_exponent(sym_label(sl21, {0})) == expected);

  ExponentForm with_c = ExponentForm::pair_term(kA, kA, Rational(-2));
  with_c += ExponentForm::symbol(kA, Rational(-4));
  CHECK(twist_exponent(sym_label(sl21, {1})) == with_c);

  ExponentForm numeric = twist_exponent(num_label(sl21, {0}, Rational(3)));
  CHECK(numeric.is_constant());
  CHECK(numeric.constant_part() == Rational(-24));

  auto osp22 = algebra(Family::osp, 2, 1);
  ExponentForm osp_expected = ExponentForm::pair_term(kA, kA);
  osp_expected += ExponentForm::symbol(kA, Rational(-2));
  CHECK(twist_exponent(sym_label(osp22, {0})) == osp_expected);

  // Independent check against the raw signed coordinate pairing for osp,
  // where no supertrace projection is involved: c = (1) gives a^2 - 4.
  ExponentForm osp_c1 = ExponentForm::pair_term(kA, kA);
  osp_c1 += ef(-4);
  CHECK(twist_exponent(sym_label(osp22, {1})) == osp_c1);
}

TEST_CASE("degenerate numeric evaluation points raise a typed error") {
  auto sl21 = algebra(Family::sl, 2, 1);
  TypicalLabel lambda = sym_label(sl21, {0});
  // beta with equal epsilon coordinates zeroes the even Weyl denominator.
  Weight beta = numeric_weight({Rational(1), Rational(1), Rational(0)});
  CHECK(code_of([&] { phi_char(lambda, beta, CharVariant::super_char); }) ==
        Errc::degenerate_evaluation);
  CHECK(code_of([&] {
          phi_char(lambda, beta, CharVariant::super_char, CharRoute::weyl_sum);
        }) == Errc::degenerate_evaluation);
}
