// tangle.cpp
// ----------
// Braid-word parsing, closure bookkeeping (components and linking matrix),
// bracket evaluation by composing embedded braidings and partial traces, and
// the framing-corrected invariant with its Laurent-membership check.

#include <superlink/tangle.hpp>

#include <superlink/errors.hpp>

#include <algorithm>
#include <cctype>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

namespace superlink {

namespace {

// strand -> component id (smallest strand on the closure cycle through it).
std::vector<int> component_of_strand(int strands, const std::vector<BraidLetter>& word) {
  // pos_to_strand[p] = strand currently occupying position p (0-based).
  std::vector<int> pos_to_strand(strands);
  std::iota(pos_to_strand.begin(), pos_to_strand.end(), 1);
  for (const BraidLetter& g : word) std::swap(pos_to_strand[g.index - 1], pos_to_strand[g.index]);

  // The closure glues the strand ending at top position p to the strand
  // starting at bottom position p, so successor(strand at top p) = p.
  std::vector<int> successor(strands + 1, 0);
  for (int p = 0; p < strands; ++p) successor[pos_to_strand[p]] = p + 1;

  std::vector<int> component(strands + 1, 0);
  for (int s = 1; s <= strands; ++s) {
    if (component[s] != 0) continue;
    int least = s;
    for (int t = successor[s]; t != s; t = successor[t]) least = std::min(least, t);
    component[s] = least;
    for (int t = successor[s]; t != s; t = successor[t]) component[t] = least;
  }
  component.erase(component.begin());
  return component;
}

LaurentElement q_power_of(const ExponentForm& e) { return LaurentElement::q_power(e); }

}  // namespace

std::vector<BraidLetter> parse_braid_word(const std::string& text) {
  std::vector<BraidLetter> out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token.size() < 2 || token[0] != 's')
      raise(Errc::syntax_error, "braid generator must look like s<k> or s<k>^<e>: '" + token + "'");
    std::size_t pos = 1;
    while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) ++pos;
    if (pos == 1)
      raise(Errc::syntax_error, "missing strand index in braid generator '" + token + "'");
    long index = 0;
    try {
      index = std::stol(token.substr(1, pos - 1));
    } catch (const std::exception&) {
      raise(Errc::syntax_error, "unreadable strand index in '" + token + "'");
    }
    long exponent = 1;
    if (pos != token.size()) {
      if (token[pos] != '^')
        raise(Errc::syntax_error, "unexpected character in braid generator '" + token + "'");
      const std::string tail = token.substr(pos + 1);
      if (tail.empty() || tail.find_first_not_of("-0123456789") != std::string::npos ||
          (tail[0] == '-' && tail.size() == 1) || tail.find('-', 1) != std::string::npos)
        raise(Errc::syntax_error, "unreadable exponent in braid generator '" + token + "'");
      exponent = std::stol(tail);
    }
    const int sign = exponent >= 0 ? 1 : -1;
    for (long t = 0; t < (exponent >= 0 ? exponent : -exponent); ++t)
      out.push_back(BraidLetter{static_cast<int>(index), sign});
  }
  return out;
}

ColoredBraid make_braid(int strands, std::vector<BraidLetter> word,
                        std::map<int, TypicalLabel> component_colors) {
  if (strands < 1) raise(Errc::index_out_of_range, "a braid needs at least one strand");
  for (const BraidLetter& g : word) {
    if (g.index < 1 || g.index >= strands)
      raise(Errc::index_out_of_range,
            "generator s" + std::to_string(g.index) + " needs strand " +
                std::to_string(g.index + 1) + " of " + std::to_string(strands));
    if (g.sign != 1 && g.sign != -1) raise(Errc::index_out_of_range, "crossing sign must be +-1");
  }

  ColoredBraid braid;
  braid.strands = strands;
  braid.word = std::move(word);
  braid.strand_component = component_of_strand(strands, braid.word);

  std::set<int> ids(braid.strand_component.begin(), braid.strand_component.end());
  std::set<int> keys;
  for (const auto& [id, color] : component_colors) keys.insert(id);
  if (keys != ids) {
    std::ostringstream msg;
    msg << "colors must be keyed by the component ids {";
    for (int id : ids) msg << ' ' << id;
    msg << " }";
    raise(Errc::color_mismatch, msg.str());
  }

  const AlgebraSpec& spec = component_colors.begin()->second.rd->spec;
  bool any_typical = false;
  for (const auto& [id, color] : component_colors) {
    if (!(color.rd->spec == spec))
      raise(Errc::color_mismatch, "all components must be colored over the same algebra");
    if (color.typical()) any_typical = true;
  }
  if (!any_typical)
    raise(Errc::no_typical_color, "at least one component must carry a typical color");

  braid.component_colors = std::move(component_colors);
  return braid;
}

LinkingData closure_components(const ColoredBraid& b) {
  LinkingData out;
  std::set<int> ids(b.strand_component.begin(), b.strand_component.end());
  out.components.assign(ids.begin(), ids.end());
  const int k = static_cast<int>(out.components.size());
  std::map<int, int> slot;
  for (int i = 0; i < k; ++i) slot[out.components[i]] = i;

  // Raw signed crossing counts; off-diagonal pairs are halved afterwards.
  std::vector<std::vector<long>> raw(k, std::vector<long>(k, 0));
  std::vector<int> pos_to_strand(b.strands);
  std::iota(pos_to_strand.begin(), pos_to_strand.end(), 1);
  for (const BraidLetter& g : b.word) {
    const int u = pos_to_strand[g.index - 1];
    const int v = pos_to_strand[g.index];
    const int cu = slot[b.strand_component[u - 1]];
    const int cv = slot[b.strand_component[v - 1]];
    raw[cu][cv] += g.sign;
    if (cu != cv) raw[cv][cu] += g.sign;
    std::swap(pos_to_strand[g.index - 1], pos_to_strand[g.index]);
  }

  out.lk.assign(k, std::vector<Rational>(k, Rational(0)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) {
        out.lk[i][j] = Rational(raw[i][j]);
      } else {
        if (raw[i][j] % 2 != 0)
          raise(Errc::internal_error, "odd inter-component crossing count in a closed braid");
        out.lk[i][j] = Rational(raw[i][j] / 2);
      }
    }
  return out;
}

namespace {

// Modules, conjugated word, and the bottom module sequence for one cut.
struct CutPresentation {
  std::vector<BraidLetter> word;
  std::vector<std::shared_ptr<const ModuleRep>> seq;
};

CutPresentation present_cut(const ColoredBraid& b, int cut_component) {
  bool known = false;
  for (int c : b.strand_component) known = known || c == cut_component;
  if (!known)
    raise(Errc::index_out_of_range,
          "no component " + std::to_string(cut_component) + " in this closure");

  std::map<int, std::shared_ptr<const ModuleRep>> modules;
  for (const auto& [id, color] : b.component_colors)
    modules[id] = std::make_shared<const ModuleRep>(build_module(color));

  // Conjugate by g = s_1 ... s_{cut-1} so the smallest strand of the cut
  // component enters the word at position 1: w -> g w g^{-1}.
  const int sstar = cut_component;  // component ids are least strand indices
  CutPresentation out;
  for (int j = 1; j < sstar; ++j) out.word.push_back(BraidLetter{j, 1});
  out.word.insert(out.word.end(), b.word.begin(), b.word.end());
  for (int j = sstar - 1; j >= 1; --j) out.word.push_back(BraidLetter{j, -1});

  // Bottom strand j of the conjugated word follows strand pg(j) of the
  // original braid through the middle block.
  out.seq.reserve(b.strands);
  for (int j = 1; j <= b.strands; ++j) {
    const int original = j == 1 ? sstar : (j <= sstar ? j - 1 : j);
    out.seq.push_back(modules.at(b.strand_component[original - 1]));
  }
  return out;
}

std::vector<int> tensor_parities(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() * b.size());
  for (int x : a)
    for (int y : b) out.push_back((x + y) % 2);
  return out;
}

// Id^(pos-1) (x) op (x) Id^(rest) for op acting on factors pos, pos+1.
ElementMatrix embed_pair_operator(const ElementMatrix& op,
                                  const std::vector<std::shared_ptr<const ModuleRep>>& seq,
                                  int pos) {
  const int n = static_cast<int>(seq.size());
  std::vector<int> pre{0};  // parities of the prefix tensor factor, row-major
  for (int t = 0; t < pos - 1; ++t) pre = tensor_parities(pre, seq[t]->parities());
  ElementMatrix out = op;
  if (pre.size() > 1)
    out = op_tensor(ElementMatrix::identity(static_cast<int>(pre.size())), op, 0, pre);
  if (pos + 1 < n) {
    int post_dim = 1;
    for (int t = pos + 1; t < n; ++t) post_dim *= seq[t]->dim();
    std::vector<int> domain =
        tensor_parities(pre, tensor_parities(seq[pos - 1]->parities(), seq[pos]->parities()));
    out = op_tensor(out, ElementMatrix::identity(post_dim), 0, domain);
  }
  return out;
}

}  // namespace

LaurentElement evaluate_bracket(const ColoredBraid& b, int cut_component) {
  CutPresentation cut = present_cut(b, cut_component);
  std::vector<std::shared_ptr<const ModuleRep>> seq = cut.seq;

  int total_dim = 1;
  for (const auto& m : seq) total_dim *= m->dim();
  ElementMatrix total = ElementMatrix::identity(total_dim);

  // Braidings are cached per ordered module pair and crossing sign.
  std::map<std::tuple<const ModuleRep*, const ModuleRep*, int>, ElementMatrix> cache;
  auto braiding_for = [&](const std::shared_ptr<const ModuleRep>& v,
                          const std::shared_ptr<const ModuleRep>& w, int sign) -> const ElementMatrix& {
    auto key = std::make_tuple(v.get(), w.get(), sign);
    auto it = cache.find(key);
    if (it == cache.end()) {
      ElementMatrix m = sign > 0 ? braiding_matrix(build_rmatrix(v, w))
                                 : braiding_inverse(build_rmatrix(w, v));
      it = cache.emplace(key, std::move(m)).first;
    }
    return it->second;
  };

  for (const BraidLetter& g : cut.word) {
    const auto& v = seq[g.index - 1];
    const auto& w = seq[g.index];
    const ElementMatrix& op = braiding_for(v, w, g.sign);
    total = embed_pair_operator(op, seq, g.index) * total;
    std::swap(seq[g.index - 1], seq[g.index]);
  }

  for (int p = 0; p < b.strands; ++p)
    if (seq[p] != cut.seq[p])
      raise(Errc::internal_error, "closure does not return each strand to its own color");

  for (int p = b.strands; p >= 2; --p) total = quantum_partial_trace(total, *cut.seq[p - 1]);

  LaurentElement scalar;
  if (!total.is_scalar(&scalar))
    raise(Errc::not_scalar, "cut-open braid did not act as a scalar on the cut strand");
  return scalar;
}

LaurentFraction f_prime(const ColoredBraid& b, int cut_component) {
  auto color = b.component_colors.find(cut_component);
  if (color == b.component_colors.end())
    raise(Errc::index_out_of_range,
          "no component " + std::to_string(cut_component) + " in this closure");
  LaurentFraction out = dhat(color->second).value;
  out *= LaurentFraction(evaluate_bracket(b, cut_component));
  return out;
}

InvariantResult normalize_invariant(const ColoredBraid& b) {
  InvariantResult out;
  out.linking = closure_components(b);

  // Deterministic cut: the smallest component id with a typical color.
  out.cut_component = 0;
  for (int id : out.linking.components) {
    if (b.component_colors.at(id).typical()) {
      out.cut_component = id;
      break;
    }
  }
  if (out.cut_component == 0)
    raise(Errc::no_typical_color, "no typical component to cut");

  out.framed_value = f_prime(b, out.cut_component);

  const RootData& rd = *b.component_colors.begin()->second.rd;
  const int k = static_cast<int>(out.linking.components.size());
  std::vector<Weight> weights;
  weights.reserve(k);
  for (int id : out.linking.components) weights.push_back(b.component_colors.at(id).weight());

  ExponentForm correction;
  for (int i = 0; i < k; ++i) {
    if (out.linking.lk[i][i] != 0)
      correction += out.linking.lk[i][i] *
                    twist_exponent(b.component_colors.at(out.linking.components[i]));
    for (int j = i + 1; j < k; ++j) {
      if (out.linking.lk[i][j] != 0)
        correction += (Rational(2) * out.linking.lk[i][j]) * pair_weights(rd, weights[i], weights[j]);
    }
  }
  out.correction = correction;

  out.normalized = out.framed_value;
  out.normalized *= LaurentFraction(q_power_of(-correction));

  bool all_symbolic = true;
  for (const auto& [id, color] : b.component_colors) all_symbolic = all_symbolic && color.symbolic();
  out.ring_check_applicable = all_symbolic;
  out.m1_factor = LaurentElement::one();
  if (k == 1) out.m1_factor = dhat(b.component_colors.at(out.cut_component)).m1;

  if (!all_symbolic) return out;

  LaurentFraction cleared = out.normalized;
  cleared *= LaurentFraction(out.m1_factor);
  try {
    out.normalized_cleared = cleared.as_element();
  } catch (const Error& err) {
    if (err.code() != Errc::not_divisible) throw;
    raise(Errc::ring_check_failure,
          "normalized invariant did not clear to a ring element: " + std::string(err.what()));
  }

  std::set<int> allowed;
  for (const auto& [id, color] : b.component_colors) allowed.insert(color.symbol());
  out.ring_report = check_polynomial_ring(out.normalized_cleared, allowed);
  if (!out.ring_report.pass) {
    std::string detail = out.ring_report.failures.empty() ? "" : out.ring_report.failures.front();
    raise(Errc::ring_check_failure, "normalized invariant left the Laurent ring: " + detail);
  }
  return out;
}

}  // namespace superlink
