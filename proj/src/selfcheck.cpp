// selfcheck.cpp
// -------------
// The acceptance suite: thirteen numbered end-to-end checks covering the
// character layer, the module and R-matrix layer, and the braid-closure
// invariant pipeline.  Every comparison is exact in the symbolic ring (or in
// exact rational arithmetic at random sample points); there are no numeric
// tolerances anywhere.

#include <superlink/selfcheck.hpp>

#include <superlink/characters.hpp>
#include <superlink/errors.hpp>
#include <superlink/tangle.hpp>
#include <superlink/uq_engine.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace superlink {

namespace {

[[noreturn]] void fail(const std::string& message) { throw std::runtime_error(message); }

void require(bool ok, const std::string& message) {
  if (!ok) fail(message);
}

std::shared_ptr<const RootData> algebra(Family family, int m, int n) {
  return std::make_shared<const RootData>(build_root_data(AlgebraSpec{family, m, n}));
}

std::string spec_name(Family family, int m, int n) {
  std::ostringstream s;
  if (family == Family::sl)
    s << "sl(" << m << "|" << n << ")";
  else
    s << "osp(" << m << "|" << 2 * n << ")";
  return s.str();
}

TypicalLabel symbolic_label(std::shared_ptr<const RootData> rd, std::vector<long> c,
                            SymbolTable& table, const std::string& name) {
  return make_label(std::move(rd), std::move(c), ExponentForm::symbol(table.intern(name)));
}

TypicalLabel numeric_label(std::shared_ptr<const RootData> rd, std::vector<long> c,
                           const Rational& a) {
  return make_label(std::move(rd), std::move(c), ExponentForm(a));
}

// ---------------------------------------------------------------------------
// 1. The quantum superdimension of every deformed typical module vanishes:
//    specializing the supercharacter at beta = rho gives exactly zero.

void superdimension_vanishes() {
  struct Case {
    Family family;
    int m, n;
    std::vector<long> c;
  };
  const std::vector<Case> cases = {
      {Family::sl, 2, 1, {0}},   {Family::sl, 3, 1, {0, 1}}, {Family::sl, 3, 2, {0, 1, 2}},
      {Family::osp, 2, 1, {0}},  {Family::osp, 2, 2, {0, 1}},
  };
  for (const Case& cs : cases) {
    auto rd = algebra(cs.family, cs.m, cs.n);
    SymbolTable table = SymbolTable::defaults();
    TypicalLabel label = symbolic_label(rd, cs.c, table, "a1");
    LaurentElement value = phi_char(label, rd->rho, CharVariant::super_char);
    require(value.is_zero(),
            "superdimension is nonzero for " + spec_name(cs.family, cs.m, cs.n));
  }
}

// ---------------------------------------------------------------------------
// 2. The atypical parameter set of w_a^c over sl(2|1) is {0, -1-c1}, and the
//    library's set agrees with an independent brute-force scan: for each odd
//    positive root alpha, <w_a^c + rho, alpha> is affine in a, and its root is
//    recovered from evaluations at a = 0 and a = 1.

void typicality_sets() {
  auto rd = algebra(Family::sl, 2, 1);
  for (long c1 : {0L, 1L, 2L, 5L}) {
    std::vector<Rational> reported = atypical_values(*rd, {c1});
    std::vector<Rational> expected = {Rational(0), Rational(-1 - c1)};
    std::sort(reported.begin(), reported.end());
    std::sort(expected.begin(), expected.end());
    require(reported == expected, "atypical set differs from {0, -1-c1} at c1 = " +
                                      std::to_string(c1));

    SymbolTable table = SymbolTable::defaults();
    const int sym = table.intern("a1");
    Weight shifted = weight_from_label(*rd, {c1}, ExponentForm::symbol(sym)) + rd->rho;
    std::set<Rational> brute;
    for (const Root& alpha : rd->positive_roots) {
      if (!alpha.odd) continue;
      ExponentForm pairing = pair_weights(*rd, shifted, alpha.weight);
      const Rational f0 = pairing.evaluate({{sym, Rational(0)}});
      const Rational f1 = pairing.evaluate({{sym, Rational(1)}});
      const Rational slope = f1 - f0;
      if (slope == 0) {
        require(f0 != 0, "pairing vanishes identically on an odd root at c1 = " +
                             std::to_string(c1));
        continue;
      }
      brute.insert(-f0 / slope);
    }
    std::vector<Rational> scanned(brute.begin(), brute.end());
    std::sort(scanned.begin(), scanned.end());
    require(scanned == reported,
            "brute-force atypical scan disagrees at c1 = " + std::to_string(c1));
  }
}

// ---------------------------------------------------------------------------
// 3. The normalized Hopf pairing is symmetric in its two colors.

void hopf_symmetry() {
  std::mt19937 rng(20260811);
  std::uniform_int_distribution<long> entry(0, 3);
  struct Alg {
    Family family;
    int m, n;
  };
  for (const Alg& alg : {Alg{Family::sl, 2, 1}, Alg{Family::sl, 3, 1}, Alg{Family::osp, 2, 1}}) {
    auto rd = algebra(alg.family, alg.m, alg.n);
    const int clen = rd->rank() - 1;
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<long> c1(clen), c2(clen);
      for (long& x : c1) x = entry(rng);
      for (long& x : c2) x = entry(rng);
      SymbolTable table = SymbolTable::defaults();
      TypicalLabel lambda = symbolic_label(rd, c1, table, "a1");
      TypicalLabel mu = symbolic_label(rd, c2, table, "a2");
      require(normalized_hopf(lambda, mu) == normalized_hopf(mu, lambda),
              "Hopf pairing asymmetric for " + spec_name(alg.family, alg.m, alg.n) +
                  " trial " + std::to_string(trial));
    }
  }
}

// ---------------------------------------------------------------------------
// 4. S'(lambda, mu) vanishes exactly when mu is atypical: substituting each
//    atypical value of mu's parameter gives zero, and random typical rational
//    values give a nonzero element.

void sprime_vanishing() {
  auto rd = algebra(Family::sl, 2, 1);
  std::mt19937 rng(20260812);
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 6);
  const std::vector<std::pair<long, long>> pairs = {{0, 1}, {2, 0}};
  for (const auto& [cl, cm] : pairs) {
    SymbolTable table = SymbolTable::defaults();
    const int sym_mu = table.intern("a2");
    TypicalLabel lambda = symbolic_label(rd, {cl}, table, "a1");
    TypicalLabel mu = make_label(rd, {cm}, ExponentForm::symbol(sym_mu));
    LaurentElement s = sprime(lambda, mu);
    const std::vector<Rational> atypical = atypical_values(*rd, {cm});
    for (const Rational& bad : atypical) {
      require(substitute(s, {{sym_mu, bad}}).is_zero(),
              "S' does not vanish at an atypical value with c = (" + std::to_string(cl) +
                  ", " + std::to_string(cm) + ")");
    }
    int done = 0;
    while (done < 10) {
      const Rational b = frac(num(rng), den(rng));
      if (std::find(atypical.begin(), atypical.end(), b) != atypical.end()) continue;
      require(!substitute(s, {{sym_mu, b}}).is_zero(),
              "S' vanishes at the typical value " + rational_to_string(b));
      ++done;
    }
  }
}

// ---------------------------------------------------------------------------
// 5. The two character-evaluation routes agree: the factored route (odd
//    product times even Weyl character) equals the direct alternating-sum
//    route, symbolically for sl(2|1) and osp(2|2), and at random numeric
//    evaluation points for sl(3|2).

void route_agreement() {
  struct Alg {
    Family family;
    int m, n;
    std::vector<long> c_lambda;
    std::vector<long> c_beta;
  };
  for (const Alg& alg : {Alg{Family::sl, 2, 1, {1}, {0}}, Alg{Family::osp, 2, 1, {2}, {1}}}) {
    auto rd = algebra(alg.family, alg.m, alg.n);
    SymbolTable table = SymbolTable::defaults();
    TypicalLabel label = symbolic_label(rd, alg.c_lambda, table, "a1");
    Weight beta =
        weight_from_label(*rd, alg.c_beta, ExponentForm::symbol(table.intern("a2"))) + rd->rho;
    for (CharVariant variant : {CharVariant::super_char, CharVariant::ordinary_char}) {
      LaurentElement factored = phi_char(label, beta, variant, CharRoute::factored);
      LaurentElement direct = phi_char(label, beta, variant, CharRoute::weyl_sum);
      require(factored == direct, "character routes disagree symbolically for " +
                                      spec_name(alg.family, alg.m, alg.n));
    }
  }

  auto rd = algebra(Family::sl, 3, 2);
  SymbolTable table = SymbolTable::defaults();
  TypicalLabel label = symbolic_label(rd, {0, 1, 2}, table, "a1");
  std::mt19937 rng(20260813);
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  int done = 0;
  int attempts = 0;
  while (done < 10) {
    require(++attempts <= 300, "too many degenerate numeric evaluation points");
    Weight beta(rd->rho.dim());
    for (const Weight& w : rd->fundamental_weights) beta += frac(num(rng), den(rng)) * w;
    beta += rd->rho;
    try {
      LaurentElement factored = phi_char(label, beta, CharVariant::super_char, CharRoute::factored);
      LaurentElement direct = phi_char(label, beta, CharVariant::super_char, CharRoute::weyl_sum);
      require(factored == direct, "character routes disagree at a numeric point for sl(3|2)");
      ++done;
    } catch (const Error& e) {
      if (e.code() != Errc::degenerate_evaluation) throw;
    }
  }
}

// ---------------------------------------------------------------------------
// 6. Module construction: the deformed typical sl(2|1) modules for c in
//    {0,1,2}, in both parity avatars, pass their defining-relation validation,
//    and the key identities re-verify directly on the returned matrices.

void module_validity() {
  auto rd = algebra(Family::sl, 2, 1);
  for (long c : {0L, 1L, 2L}) {
    for (bool odd : {false, true}) {
      SymbolTable table = SymbolTable::defaults();
      TypicalLabel label =
          make_label(rd, {c}, ExponentForm::symbol(table.intern("a1")), odd);
      ModuleRep mod = build_module(label);
      require(mod.dim() == static_cast<int>(4 * (c + 1)),
              "wrong module dimension at c = " + std::to_string(c));
      const ElementMatrix& e1 = mod.e_action[0];
      const ElementMatrix& f1 = mod.f_action[0];
      require(e1 * f1 - f1 * e1 == mod.k_action[0] - mod.k_inverse[0],
              "sl(2) pair relation fails at c = " + std::to_string(c));
      const ElementMatrix& e2 = mod.e_action[1];
      const ElementMatrix& f2 = mod.f_action[1];
      require(e2 * f2 + f2 * e2 == mod.k_action[1] - mod.k_inverse[1],
              "odd pair relation fails at c = " + std::to_string(c));
      require((e2 * e2).is_zero() && (f2 * f2).is_zero(),
              "odd generators do not square to zero at c = " + std::to_string(c));
      require(mod.k_action[0] * mod.k_inverse[0] == ElementMatrix::identity(mod.dim()),
              "K1 is not invertible at c = " + std::to_string(c));
    }
  }
}

// ---------------------------------------------------------------------------
// 7. R-matrix validity: the braiding satisfies the braid relation (the
//    Yang-Baxter equation in braiding form) on triple products, and R
//    intertwines the coproduct with its opposite.  Symbolic at c-labels 0;
//    verified at random exact rational points at c-labels 1.

std::vector<int> tensor_parities(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() * b.size());
  for (int x : a)
    for (int y : b) out.push_back((x + y) % 2);
  return out;
}

// Embeds the braiding of the two modules at `pos` (1-based) of a three-factor
// product whose current order is seq[0] (x) seq[1] (x) seq[2].
ElementMatrix embed_braiding(const ElementMatrix& braid,
                             const std::vector<const ModuleRep*>& seq, int pos) {
  if (pos == 1) {
    const ElementMatrix id3 = ElementMatrix::identity(seq[2]->dim());
    return op_tensor(braid, id3, 0, tensor_parities(seq[0]->parities(), seq[1]->parities()));
  }
  const ElementMatrix id1 = ElementMatrix::identity(seq[0]->dim());
  return op_tensor(id1, braid, 0, seq[0]->parities());
}

void check_intertwining(const RMatrixData& r) {
  const ModuleRep& lm = *r.left;
  const ModuleRep& rm = *r.right;
  for (int i = 0; i < 2; ++i) {
    require(r.matrix * coproduct_e(lm, rm, i) == coproduct_e_op(lm, rm, i) * r.matrix,
            "R does not intertwine Delta(E) for generator " + std::to_string(i + 1));
    require(r.matrix * coproduct_f(lm, rm, i) == coproduct_f_op(lm, rm, i) * r.matrix,
            "R does not intertwine Delta(F) for generator " + std::to_string(i + 1));
    ElementMatrix kk = op_tensor(lm.k_action[i], rm.k_action[i], 0, lm.parities());
    require(r.matrix * kk == kk * r.matrix,
            "R does not commute with K (x) K for generator " + std::to_string(i + 1));
  }
}

// Walks one side of the braid relation, multiplying embedded braidings while
// tracking the colored factor order; returns the total matrix.
ElementMatrix braid_side(std::vector<const ModuleRep*> seq, const std::vector<int>& positions,
                         const std::map<std::pair<const ModuleRep*, const ModuleRep*>,
                                        ElementMatrix>& braidings) {
  int dim = seq[0]->dim() * seq[1]->dim() * seq[2]->dim();
  ElementMatrix total = ElementMatrix::identity(dim);
  for (int pos : positions) {
    const ModuleRep* v = seq[pos - 1];
    const ModuleRep* w = seq[pos];
    total = embed_braiding(braidings.at({v, w}), seq, pos) * total;
    std::swap(seq[pos - 1], seq[pos]);
  }
  return total;
}

void rmatrix_validity() {
  auto rd = algebra(Family::sl, 2, 1);

  // Symbolic: three distinct symbolic colors with c = 0 (dimension 4 each).
  {
    SymbolTable table = SymbolTable::defaults();
    auto ma = std::make_shared<const ModuleRep>(
        build_module(symbolic_label(rd, {0}, table, "a1")));
    auto mb = std::make_shared<const ModuleRep>(
        build_module(symbolic_label(rd, {0}, table, "a2")));
    auto mc = std::make_shared<const ModuleRep>(
        build_module(symbolic_label(rd, {0}, table, "a3")));

    std::map<std::pair<const ModuleRep*, const ModuleRep*>, ElementMatrix> braidings;
    const std::vector<std::pair<std::shared_ptr<const ModuleRep>, std::shared_ptr<const ModuleRep>>>
        module_pairs = {{ma, mb}, {ma, mc}, {mb, mc}, {mb, ma}, {mc, ma}, {mc, mb}};
    for (const auto& [v, w] : module_pairs) {
      RMatrixData r = build_rmatrix(v, w);
      if (v == ma && w == mb) check_intertwining(r);
      braidings.emplace(std::make_pair(v.get(), w.get()), braiding_matrix(r));
    }

    std::vector<const ModuleRep*> seq = {ma.get(), mb.get(), mc.get()};
    ElementMatrix lhs = braid_side(seq, {1, 2, 1}, braidings);
    ElementMatrix rhs = braid_side(seq, {2, 1, 2}, braidings);
    require(lhs == rhs, "braid relation fails symbolically at c-labels 0");
  }

  // Numeric: c = 1 colors (dimension 8 each, triple product 512) at random
  // exact rational points, q specialized to an exact rational as well.
  std::mt19937 rng(20260814);
  std::uniform_int_distribution<long> value_num(-9, 9);
  std::uniform_int_distribution<long> value_den(1, 2);
  std::uniform_int_distribution<long> base_num(2, 9);
  std::uniform_int_distribution<long> base_den(1, 4);
  const std::vector<Rational> atypical = atypical_values(*rd, {1});
  auto draw_color = [&]() {
    while (true) {
      Rational a = frac(value_num(rng), value_den(rng));
      if (std::find(atypical.begin(), atypical.end(), a) == atypical.end()) return a;
    }
  };
  for (int trial = 0; trial < 5; ++trial) {
    auto ma = std::make_shared<const ModuleRep>(build_module(numeric_label(rd, {1}, draw_color())));
    auto mb = std::make_shared<const ModuleRep>(build_module(numeric_label(rd, {1}, draw_color())));
    auto mc = std::make_shared<const ModuleRep>(build_module(numeric_label(rd, {1}, draw_color())));

    Rational base = frac(base_num(rng), base_den(rng));
    while (base == 1) base = frac(base_num(rng), base_den(rng));
    // Color parameters have denominator at most 2, so pairings have
    // denominator at most 4; q = base^4 keeps every exponent integral.
    const long power = 4;

    std::map<std::pair<const ModuleRep*, const ModuleRep*>, ElementMatrix> braidings;
    for (const auto& [v, w] :
         std::vector<std::pair<const ModuleRep*, const ModuleRep*>>{{ma.get(), mb.get()},
                                                                    {ma.get(), mc.get()},
                                                                    {mb.get(), mc.get()},
                                                                    {mb.get(), ma.get()},
                                                                    {mc.get(), ma.get()},
                                                                    {mc.get(), mb.get()}}) {
      auto vp = (v == ma.get()) ? ma : (v == mb.get()) ? mb : mc;
      auto wp = (w == ma.get()) ? ma : (w == mb.get()) ? mb : mc;
      braidings.emplace(std::make_pair(v, w), braiding_matrix(build_rmatrix(vp, wp)));
    }

    auto numeric_side = [&](const std::vector<int>& positions) {
      std::vector<const ModuleRep*> seq = {ma.get(), mb.get(), mc.get()};
      const int dim = 512;
      std::vector<std::vector<Rational>> total(dim, std::vector<Rational>(dim, Rational(0)));
      for (int i = 0; i < dim; ++i) total[i][i] = Rational(1);
      for (int pos : positions) {
        const ModuleRep* v = seq[pos - 1];
        const ModuleRep* w = seq[pos];
        ElementMatrix embedded = embed_braiding(braidings.at({v, w}), seq, pos);
        total = rational_product(eval_matrix(embedded, {}, base, power), total);
        std::swap(seq[pos - 1], seq[pos]);
      }
      return total;
    };
    require(numeric_side({1, 2, 1}) == numeric_side({2, 1, 2}),
            "braid relation fails at numeric point " + std::to_string(trial));
  }
}

// ---------------------------------------------------------------------------
// 8. The curl (a single crossing on two strands, closed to an unknot with
//    framing +-1) evaluates to q^{+-<lambda, lambda + 2 rho>}.

void twist_value() {
  auto rd = algebra(Family::sl, 2, 1);
  for (long c : {0L, 1L}) {
    SymbolTable table = SymbolTable::defaults();
    TypicalLabel label = symbolic_label(rd, {c}, table, "a1");
    const ExponentForm t = twist_exponent(label);

    ColoredBraid positive = make_braid(2, parse_braid_word("s1"), {{1, label}});
    require(evaluate_bracket(positive, 1) == LaurentElement::q_power(t),
            "positive curl does not equal the twist at c = " + std::to_string(c));

    ColoredBraid negative = make_braid(2, parse_braid_word("s1^-1"), {{1, label}});
    require(evaluate_bracket(negative, 1) == LaurentElement::q_power(ExponentForm() - t),
            "negative curl does not equal the inverse twist at c = " + std::to_string(c));
  }
}

// ---------------------------------------------------------------------------
// 9. Dual-path Hopf link: the tensor-engine value d(cut color) * <bracket> of
//    the closure of s1 s1 equals the character-layer normalized Hopf pairing.

void hopf_dual_path() {
  auto rd = algebra(Family::sl, 2, 1);
  SymbolTable table = SymbolTable::defaults();
  TypicalLabel la = symbolic_label(rd, {0}, table, "a1");
  TypicalLabel lb = symbolic_label(rd, {0}, table, "a2");
  ColoredBraid hopf = make_braid(2, parse_braid_word("s1 s1"), {{1, la}, {2, lb}});

  LaurentFraction engine = f_prime(hopf, 1);
  LaurentFraction oracle{normalized_hopf(lb, la)};
  require(engine.equals(oracle), "engine f' differs from the character-layer Hopf pairing");
  require(f_prime(hopf, 2).equals(LaurentFraction{normalized_hopf(la, lb)}),
          "engine f' differs from the character-layer Hopf pairing at the other cut");
}

// ---------------------------------------------------------------------------
// 10. Cut-independence: f' does not depend on which typical component the
//     link is cut open along.

void cut_independence() {
  auto rd = algebra(Family::sl, 2, 1);
  for (const char* word : {"s1 s1", "s1 s1 s1 s1"}) {
    SymbolTable table = SymbolTable::defaults();
    TypicalLabel la = symbolic_label(rd, {0}, table, "a1");
    TypicalLabel lb = symbolic_label(rd, {0}, table, "a2");
    ColoredBraid b = make_braid(2, parse_braid_word(word), {{1, la}, {2, lb}});
    require(f_prime(b, 1).equals(f_prime(b, 2)),
            std::string("f' depends on the cut for the closure of \"") + word + "\"");
  }
}

// ---------------------------------------------------------------------------
// 11. Markov moves: the normalized invariant is unchanged under conjugation
//     and stabilization of the braid word; the framed value is unchanged
//     under conjugation and shifts by exactly one twist monomial under
//     stabilization.

void markov_moves() {
  auto rd = algebra(Family::sl, 2, 1);
  SymbolTable table = SymbolTable::defaults();
  TypicalLabel la = symbolic_label(rd, {0}, table, "a1");
  TypicalLabel lb = symbolic_label(rd, {0}, table, "a2");

  ColoredBraid base = make_braid(2, parse_braid_word("s1 s1"), {{1, la}, {2, lb}});
  ColoredBraid conjugated =
      make_braid(2, parse_braid_word("s1 s1 s1 s1^-1"), {{1, la}, {2, lb}});
  ColoredBraid stabilized = make_braid(3, parse_braid_word("s1 s1 s2"), {{1, la}, {2, lb}});

  InvariantResult r_base = normalize_invariant(base);
  InvariantResult r_conj = normalize_invariant(conjugated);
  InvariantResult r_stab = normalize_invariant(stabilized);

  require(r_conj.normalized.equals(r_base.normalized),
          "normalized invariant changes under conjugation");
  require(r_stab.normalized.equals(r_base.normalized),
          "normalized invariant changes under stabilization");
  require(r_conj.framed_value.equals(r_base.framed_value),
          "framed value changes under conjugation");

  // The stabilizing crossing adds one positive kink on the component of the
  // new strand (component 2 here).
  LaurentFraction shifted =
      r_base.framed_value * LaurentFraction{LaurentElement::q_power(twist_exponent(lb))};
  require(r_stab.framed_value.equals(shifted),
          "framed value does not shift by the twist monomial under stabilization");

  require(r_base.framed_value.equals(
              r_base.normalized * LaurentFraction{LaurentElement::q_power(r_base.correction)}),
          "framed value is not q^correction times the normalized invariant");
}

// ---------------------------------------------------------------------------
// 12. Laurent ring membership: for 2-component links the normalized invariant
//     clears to an element of Z[q^{+-1}, q_1^{+-1}, q_2^{+-1}]; for a knot the
//     single clearing factor M1 times the normalized invariant is again a
//     plain Laurent element over its color symbol.

void laurent_membership() {
  auto rd = algebra(Family::sl, 2, 1);
  {
    struct LinkCase {
      int strands;
      const char* word;
    };
    for (const LinkCase& lc : {LinkCase{2, "s1 s1"}, LinkCase{2, "s1 s1 s1 s1"},
                               LinkCase{3, "s1 s1 s2"}}) {
      SymbolTable table = SymbolTable::defaults();
      TypicalLabel la = symbolic_label(rd, {0}, table, "a1");
      TypicalLabel lb = symbolic_label(rd, {0}, table, "a2");
      ColoredBraid b = make_braid(lc.strands, parse_braid_word(lc.word), {{1, la}, {2, lb}});
      InvariantResult r = normalize_invariant(b);
      require(r.ring_check_applicable, std::string("ring check skipped for \"") + lc.word + "\"");
      require(r.ring_report.pass,
              std::string("normalized invariant leaves the Laurent ring for \"") + lc.word +
                  "\"");
      require(r.m1_factor == LaurentElement::one(),
              std::string("unexpected clearing factor on the 2-component link \"") + lc.word +
                  "\"");
      require(r.normalized.equals(LaurentFraction{r.normalized_cleared}),
              std::string("cleared value differs from the normalized fraction for \"") +
                  lc.word + "\"");
    }
  }
  {
    SymbolTable table = SymbolTable::defaults();
    TypicalLabel la = symbolic_label(rd, {0}, table, "a1");
    ColoredBraid trefoil = make_braid(2, parse_braid_word("s1 s1 s1"), {{1, la}});
    InvariantResult r = normalize_invariant(trefoil);
    require(r.ring_check_applicable && r.ring_report.pass,
            "M1 times the trefoil invariant leaves the Laurent ring");
    require(r.m1_factor == dhat(la).m1, "knot clearing factor is not M1");
    require(LaurentFraction{r.normalized_cleared}.equals(
                r.normalized * LaurentFraction{r.m1_factor}),
            "cleared trefoil value is not M1 times the normalized fraction");
  }
}

// ---------------------------------------------------------------------------
// 13. Specialization consistency: evaluating the symbolic invariant at random
//     rational color parameters and a random rational q equals running the
//     whole pipeline with numeric colors from the start.

void specialization_consistency() {
  auto rd = algebra(Family::sl, 2, 1);
  std::mt19937 rng(20260815);
  std::uniform_int_distribution<long> value(-5, 5);
  std::uniform_int_distribution<long> base_num(2, 9);
  std::uniform_int_distribution<long> base_den(1, 4);
  const std::vector<Rational> atypical = atypical_values(*rd, {0});
  auto draw_color = [&]() {
    while (true) {
      Rational a{value(rng)};
      if (std::find(atypical.begin(), atypical.end(), a) == atypical.end()) return a;
    }
  };
  auto draw_base = [&]() {
    while (true) {
      Rational b = frac(base_num(rng), base_den(rng));
      if (b != 1) return b;
    }
  };

  struct Draw {
    int strands;
    const char* word;
    int colors;  // 1 = knot, 2 = two components
  };
  const std::vector<Draw> draws = {{2, "s1 s1", 2}, {2, "s1 s1", 2}, {2, "s1 s1", 2},
                                   {2, "s1 s1", 2}, {2, "s1 s1", 2}, {2, "s1 s1 s1", 1},
                                   {2, "s1 s1 s1", 1}, {2, "s1 s1 s1", 1},
                                   {2, "s1 s1 s1", 1}, {2, "s1 s1 s1", 1}};
  int trial = 0;
  for (const Draw& d : draws) {
    ++trial;
    const Rational av = draw_color();
    const Rational bv = draw_color();
    const Rational qv = draw_base();

    SymbolTable table = SymbolTable::defaults();
    const int s1 = table.intern("a1");
    const int s2 = table.intern("a2");
    std::map<int, TypicalLabel> sym_colors;
    std::map<int, TypicalLabel> num_colors;
    std::map<int, Rational> assignment = {{s1, av}};
    sym_colors.emplace(1, make_label(rd, {0}, ExponentForm::symbol(s1)));
    num_colors.emplace(1, numeric_label(rd, {0}, av));
    if (d.colors == 2) {
      sym_colors.emplace(2, make_label(rd, {0}, ExponentForm::symbol(s2)));
      num_colors.emplace(2, numeric_label(rd, {0}, bv));
      assignment.emplace(s2, bv);
    }

    InvariantResult sym_result = normalize_invariant(
        make_braid(d.strands, parse_braid_word(d.word), std::move(sym_colors)));
    InvariantResult num_result = normalize_invariant(
        make_braid(d.strands, parse_braid_word(d.word), std::move(num_colors)));

    const Rational sym_num = eval_at(sym_result.normalized.numerator(), assignment, qv);
    const Rational sym_den = eval_at(sym_result.normalized.denominator(), assignment, qv);
    const Rational num_num = eval_at(num_result.normalized.numerator(), {}, qv);
    const Rational num_den = eval_at(num_result.normalized.denominator(), {}, qv);
    require(sym_den != 0 && num_den != 0,
            "denominator vanished at specialization trial " + std::to_string(trial));
    require(sym_num * num_den == num_num * sym_den,
            "symbolic and numeric pipelines disagree at trial " + std::to_string(trial));
  }
}

}  // namespace

int run_selfcheck(std::ostream& out) {
  struct Criterion {
    int id;
    const char* label;
    void (*body)();
  };
  const std::vector<Criterion> criteria = {
      {1, "quantum superdimension vanishes on typical modules", superdimension_vanishes},
      {2, "atypical parameter sets match a brute-force scan", typicality_sets},
      {3, "normalized Hopf pairing is symmetric", hopf_symmetry},
      {4, "S' vanishes exactly at atypical colors", sprime_vanishing},
      {5, "character evaluation routes agree", route_agreement},
      {6, "module matrices satisfy the defining relations", module_validity},
      {7, "braidings satisfy Yang-Baxter and intertwining", rmatrix_validity},
      {8, "curl evaluates to the twist monomial", twist_value},
      {9, "Hopf link agrees across both computation paths", hopf_dual_path},
      {10, "f' is independent of the cut component", cut_independence},
      {11, "Markov moves preserve the normalized invariant", markov_moves},
      {12, "normalized invariants lie in the Laurent ring", laurent_membership},
      {13, "numeric specialization matches the symbolic pipeline", specialization_consistency},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
      c.body();
    } catch (const std::exception& e) {
      reason = e.what();
    } catch (...) {
      reason = "unknown exception";
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    out << (reason.empty() ? "PASS" : "FAIL") << "  [" << std::setw(2) << c.id << "] "
        << c.label << "  (" << elapsed << " ms)";
    if (!reason.empty()) {
      out << "  -- " << reason;
      ++failed;
    }
    out << "\n";
  }
  if (failed == 0) {
    out << "all 13 criteria passed\n";
  } else {
    out << failed << " of 13 criteria failed\n";
  }
  return failed;
}

}  // namespace superlink
