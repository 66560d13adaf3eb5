// test_tangle.cpp
// ---------------
// Tests for the braid-closure pipeline: word parsing, components and linking
// matrices, bracket oracles (unknot, curl, Hopf link against the character
// formulas), cut-independence, Markov moves and framing shifts, the
// Laurent-membership guarantee, and specialization to numeric colors.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <superlink/tangle.hpp>

#include <functional>
#include <map>
#include <memory>
#include <utility>
#include <vector>

using namespace superlink;

namespace {

constexpr int kA = 1;
constexpr int kB = 2;

std::shared_ptr<const RootData> sl21() {
  return std::make_shared<RootData>(build_root_data(AlgebraSpec{Family::sl, 2, 1}));
}

TypicalLabel sym_label(std::shared_ptr<const RootData> rd, long c1, int symbol = kA) {
  return make_label(std::move(rd), {c1}, ExponentForm::symbol(symbol));
}

TypicalLabel num_label(std::shared_ptr<const RootData> rd, long c1, Rational value) {
  return make_label(std::move(rd), {c1}, ExponentForm(std::move(value)));
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& err) {
    return err.code();
  }
  return Errc::internal_error;
}

ColoredBraid braid(std::shared_ptr<const RootData> rd, int strands, const std::string& word,
                   std::map<int, TypicalLabel> colors) {
  return make_braid(strands, parse_braid_word(word), std::move(colors));
}

}  // namespace

TEST_CASE("braid words parse with exponents and reject malformed input") {
  CHECK(parse_braid_word("").empty());
  CHECK(parse_braid_word("s1 s1") ==
        std::vector<BraidLetter>{BraidLetter{1, 1}, BraidLetter{1, 1}});
  CHECK(parse_braid_word("s2^-1") == std::vector<BraidLetter>{BraidLetter{2, -1}});
  CHECK(parse_braid_word("s1^3") ==
        std::vector<BraidLetter>{BraidLetter{1, 1}, BraidLetter{1, 1}, BraidLetter{1, 1}});
  CHECK(parse_braid_word("s1^-2") ==
        std::vector<BraidLetter>{BraidLetter{1, -1}, BraidLetter{1, -1}});
  CHECK(parse_braid_word("s1^0").empty());

  for (const char* bad : {"x1", "s", "s^2", "s1^", "s1^-", "s1x", "s1^2-3"})
    CHECK(code_of([&] { parse_braid_word(bad); }) == Errc::syntax_error);
}

TEST_CASE("closure components and linking matrices") {
  auto rd = sl21();

  ColoredBraid hopf = braid(rd, 2, "s1 s1", {{1, sym_label(rd, 0, kA)}, {2, sym_label(rd, 0, kB)}});
  CHECK(hopf.strand_component == std::vector<int>{1, 2});
  LinkingData lk = closure_components(hopf);
  CHECK(lk.components == std::vector<int>{1, 2});
  CHECK(lk.lk[0][1] == Rational(1));
  CHECK(lk.lk[1][0] == Rational(1));
  CHECK(lk.lk[0][0] == Rational(0));
  CHECK(lk.lk[1][1] == Rational(0));

  ColoredBraid trefoil = braid(rd, 2, "s1 s1 s1", {{1, sym_label(rd, 0, kA)}});
  CHECK(trefoil.strand_component == std::vector<int>{1, 1});
  LinkingData tlk = closure_components(trefoil);
  CHECK(tlk.components == std::vector<int>{1});
  CHECK(tlk.lk[0][0] == Rational(3));

  ColoredBraid unlink =
      braid(rd, 2, "s1^-1 s1", {{1, sym_label(rd, 0, kA)}, {2, sym_label(rd, 0, kB)}});
  LinkingData ulk = closure_components(unlink);
  CHECK(ulk.lk[0][1] == Rational(0));
  CHECK(ulk.lk[0][0] == Rational(0));

  // Stabilized Hopf link: the extra positive kink frames component 2.
  ColoredBraid stab =
      braid(rd, 3, "s1 s1 s2", {{1, sym_label(rd, 0, kA)}, {2, sym_label(rd, 0, kB)}});
  CHECK(stab.strand_component == std::vector<int>{1, 2, 2});
  LinkingData slk = closure_components(stab);
  CHECK(slk.lk[0][1] == Rational(1));
  CHECK(slk.lk[1][1] == Rational(1));
}

TEST_CASE("braid validation rejects bad indices, colors, and atypical input") {
  auto rd = sl21();
  CHECK(code_of([&] { braid(rd, 2, "s2", {{1, sym_label(rd, 0)}}); }) ==
        Errc::index_out_of_range);
  CHECK(code_of([&] { braid(rd, 0, "", {{1, sym_label(rd, 0)}}); }) == Errc::index_out_of_range);

  // Trefoil has one component; keys {1,2} do not match.
  CHECK(code_of([&] {
          braid(rd, 2, "s1 s1 s1", {{1, sym_label(rd, 0, kA)}, {2, sym_label(rd, 0, kB)}});
        }) == Errc::color_mismatch);

  // Mixed algebras.
  auto osp = std::make_shared<RootData>(build_root_data(AlgebraSpec{Family::osp, 2, 2}));
  CHECK(code_of([&] {
          braid(rd, 2, "s1 s1",
                {{1, sym_label(rd, 0, kA)}, {2, make_label(osp, {0, 0}, ExponentForm::symbol(kB))}});
        }) == Errc::color_mismatch);

  // Every color atypical: a = 0 and a = -1 are the c = 0 atypical values.
  CHECK(code_of([&] {
          braid(rd, 2, "s1 s1",
                {{1, num_label(rd, 0, Rational(0))}, {2, num_label(rd, 0, Rational(-1))}});
        }) == Errc::no_typical_color);

  // One typical color is enough to pass validation.
  ColoredBraid ok = braid(rd, 2, "s1 s1",
                          {{1, num_label(rd, 0, Rational(0))}, {2, sym_label(rd, 0, kB)}});
  CHECK(ok.component_colors.size() == 2);
}

TEST_CASE("bracket of the cut-open unknot is 1 and f' is dhat") {
  auto rd = sl21();
  for (long c1 : {0L, 1L}) {
    ColoredBraid unknot = braid(rd, 1, "", {{1, sym_label(rd, c1)}});
    CHECK(evaluate_bracket(unknot, 1) == LaurentElement::one());
    CHECK(f_prime(unknot, 1).equals(dhat(sym_label(rd, c1)).value));
  }
}

TEST_CASE("curl bracket equals the twist scalar") {
  auto rd = sl21();
  for (long c1 : {0L, 1L}) {
    TypicalLabel color = sym_label(rd, c1);
    ColoredBraid curl = braid(rd, 2, "s1", {{1, color}});
    CHECK(evaluate_bracket(curl, 1) == LaurentElement::q_power(twist_exponent(color)));

    ColoredBraid negative = braid(rd, 2, "s1^-1", {{1, color}});
    CHECK(evaluate_bracket(negative, 1) == LaurentElement::q_power(-twist_exponent(color)));
  }
}

TEST_CASE("Hopf link bracket matches the character-module oracle") {
  auto rd = sl21();
  TypicalLabel la = sym_label(rd, 0, kA);
  TypicalLabel lb = sym_label(rd, 0, kB);
  ColoredBraid hopf = braid(rd, 2, "s1 s1", {{1, la}, {2, lb}});

  // Cutting component 1 traces out component 2: bracket = S'(mu_b, lambda_a).
  CHECK(evaluate_bracket(hopf, 1) == sprime(lb, la));
  CHECK(evaluate_bracket(hopf, 2) == sprime(la, lb));

  // f' = dhat(cut) * bracket equals the symmetric normalized Hopf pairing.
  CHECK(f_prime(hopf, 1).equals(LaurentFraction(normalized_hopf(lb, la))));
  CHECK(f_prime(hopf, 2).equals(LaurentFraction(normalized_hopf(la, lb))));

  // Cut-independence, which is the symmetry lemma in this presentation.
  CHECK(f_prime(hopf, 1).equals(f_prime(hopf, 2)));

  // Mixed highest weights across the two components.
  ColoredBraid mixed = braid(rd, 2, "s1 s1", {{1, sym_label(rd, 1, kA)}, {2, lb}});
  CHECK(f_prime(mixed, 1).equals(f_prime(mixed, 2)));
}

TEST_CASE("cut-independence on the (2,4) torus link") {
  auto rd = sl21();
  ColoredBraid torus =
      braid(rd, 2, "s1 s1 s1 s1", {{1, sym_label(rd, 0, kA)}, {2, sym_label(rd, 0, kB)}});
  CHECK(f_prime(torus, 1).equals(f_prime(torus, 2)));
}

TEST_CASE("normalized invariant is Markov invariant and framing-corrected") {
  auto rd = sl21();
  std::map<int, TypicalLabel> colors{{1, sym_label(rd, 0, kA)}, {2, sym_label(rd, 0, kB)}};

  InvariantResult base = normalize_invariant(braid(rd, 2, "s1 s1", colors));
  InvariantResult conj = normalize_invariant(braid(rd, 2, "s1 s1 s1 s1^-1", colors));
  InvariantResult stab = normalize_invariant(braid(rd, 3, "s1 s1 s2", colors));

  CHECK(base.normalized.equals(conj.normalized));
  CHECK(base.normalized.equals(stab.normalized));
  CHECK(base.framed_value.equals(conj.framed_value));

  // The stabilization kink frames component 2: framed values differ by the
  // twist monomial of color b, normalized values agree.
  LaurentFraction shifted = base.framed_value;
  shifted *= LaurentFraction(LaurentElement::q_power(twist_exponent(colors.at(2))));
  CHECK(stab.framed_value.equals(shifted));
  CHECK(base.normalized_cleared == stab.normalized_cleared);

  // framed_value = q^(correction) * normalized, exactly.
  LaurentFraction recomposed = stab.normalized;
  recomposed *= LaurentFraction(LaurentElement::q_power(stab.correction));
  CHECK(stab.framed_value.equals(recomposed));
}

TEST_CASE("framing shifts move framed_value by the twist monomial on a knot") {
  auto rd = sl21();
  TypicalLabel color = sym_label(rd, 0, kA);
  InvariantResult trefoil = normalize_invariant(braid(rd, 2, "s1 s1 s1", {{1, color}}));
  InvariantResult framed = normalize_invariant(braid(rd, 3, "s1 s1 s1 s2", {{1, color}}));

  CHECK(trefoil.normalized.equals(framed.normalized));
  LaurentFraction shifted = trefoil.framed_value;
  shifted *= LaurentFraction(LaurentElement::q_power(twist_exponent(color)));
  CHECK(framed.framed_value.equals(shifted));
}

TEST_CASE("normalized two-component invariants live in the Laurent ring") {
  auto rd = sl21();
  for (const char* word : {"s1 s1", "s1 s1 s1 s1"}) {
    InvariantResult res = normalize_invariant(
        braid(rd, 2, word, {{1, sym_label(rd, 0, kA)}, {2, sym_label(rd, 0, kB)}}));
    CHECK(res.ring_check_applicable);
    CHECK(res.ring_report.pass);
    CHECK(res.m1_factor == LaurentElement::one());
    // The cleared element reproduces the stored fraction.
    CHECK(res.normalized.equals(LaurentFraction(res.normalized_cleared)));
  }
}

TEST_CASE("knot invariants clear against the M1 factor") {
  auto rd = sl21();
  TypicalLabel color = sym_label(rd, 0, kA);
  InvariantResult res = normalize_invariant(braid(rd, 2, "s1 s1 s1", {{1, color}}));
  CHECK(res.ring_check_applicable);
  CHECK(res.ring_report.pass);
  CHECK(res.m1_factor == dhat(color).m1);

  // normalized_cleared = M1 * normalized as fractions.
  LaurentFraction recomposed = res.normalized;
  recomposed *= LaurentFraction(res.m1_factor);
  CHECK(recomposed.equals(LaurentFraction(res.normalized_cleared)));

  // 0-framed unknot: normalized is the dhat fraction itself.
  InvariantResult unknot = normalize_invariant(braid(rd, 1, "", {{1, color}}));
  CHECK(unknot.normalized.equals(dhat(color).value));
  CHECK(unknot.normalized_cleared == dhat(color).m0);
}

TEST_CASE("symbolic invariants specialize to the numeric pipeline") {
  auto rd = sl21();
  const Rational base_q(7, 5);
  const std::vector<std::pair<Rational, Rational>> draws = {
      {Rational(3), Rational(-4)}, {Rational(2), Rational(5)}, {Rational(-5), Rational(1)}};

  for (const auto& [av, bv] : draws) {
    InvariantResult sym = normalize_invariant(
        braid(rd, 2, "s1 s1", {{1, sym_label(rd, 0, kA)}, {2, sym_label(rd, 1, kB)}}));
    InvariantResult num = normalize_invariant(
        braid(rd, 2, "s1 s1", {{1, num_label(rd, 0, av)}, {2, num_label(rd, 1, bv)}}));
    CHECK_FALSE(num.ring_check_applicable);

    std::map<int, Rational> point{{kA, av}, {kB, bv}};
    std::map<int, Rational> empty;
    Rational sym_num = eval_at(sym.normalized.numerator(), point, base_q);
    Rational sym_den = eval_at(sym.normalized.denominator(), point, base_q);
    Rational num_num = eval_at(num.normalized.numerator(), empty, base_q);
    Rational num_den = eval_at(num.normalized.denominator(), empty, base_q);
    REQUIRE(sym_den != 0);
    REQUIRE(num_den != 0);
    CHECK(sym_num * num_den == num_num * sym_den);
  }
}

TEST_CASE("bracket failure paths raise typed errors") {
  auto rd = sl21();
  ColoredBraid hopf =
      braid(rd, 2, "s1 s1", {{1, sym_label(rd, 0, kA)}, {2, sym_label(rd, 0, kB)}});
  CHECK(code_of([&] { evaluate_bracket(hopf, 3); }) == Errc::index_out_of_range);
  CHECK(code_of([&] { f_prime(hopf, 3); }) == Errc::index_out_of_range);

  // A braid whose only typical color sits on component 2 still evaluates, but
  // cutting the atypical component fails at module construction.
  ColoredBraid half = braid(rd, 2, "s1 s1",
                            {{1, num_label(rd, 0, Rational(0))}, {2, sym_label(rd, 0, kB)}});
  CHECK(code_of([&] { evaluate_bracket(half, 1); }) == Errc::atypical_label);
}
