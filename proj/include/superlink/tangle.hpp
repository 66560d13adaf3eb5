// tangle.hpp
// ----------
// Colored braid closures and the renormalized link invariant pipeline.
//
// A link is presented as the closure of a braid word on n strands; the
// closure's components are the cycles of the underlying permutation, each
// carrying one highest-weight color.  The bracket of a braid cut open along
// one component is computed by composing embedded braiding matrices and
// closing all strands but the first with quantum partial traces; the result
// must be a scalar multiple of the identity on the cut strand.  The invariant
// is f' = dhat(cut color) * bracket, made framing-independent by the
// correction exponent assembled from the linking matrix.

#pragma once

#include <superlink/characters.hpp>
#include <superlink/uq_engine.hpp>

#include <map>
#include <string>
#include <vector>

namespace superlink {

// One crossing sigma_{index}^{sign} between strand positions index, index+1.
struct BraidLetter {
  int index = 1;  // 1-based, valid range [1, strands)
  int sign = 1;   // +1 positive crossing, -1 negative
  bool operator==(const BraidLetter&) const = default;
};

// Parses "s1 s2^-1 s1^3" into letters; an exponent expands to |e| copies.
// Errors: Errc::syntax_error.
std::vector<BraidLetter> parse_braid_word(const std::string& text);

struct ColoredBraid {
  int strands = 1;
  std::vector<BraidLetter> word;
  // strand (1-based, stored at index-1) -> component id; a component id is
  // the smallest strand index on its cycle of the closure permutation.
  std::vector<int> strand_component;
  std::map<int, TypicalLabel> component_colors;
};

// Validates and assembles a colored braid.
// Errors: Errc::index_out_of_range (strand count or letter index),
// Errc::color_mismatch (color keys differ from the component ids, or colors
// live over different algebras), Errc::no_typical_color (every component
// color is atypical).
ColoredBraid make_braid(int strands, std::vector<BraidLetter> word,
                        std::map<int, TypicalLabel> component_colors);

struct LinkingData {
  std::vector<int> components;             // sorted component ids
  std::vector<std::vector<Rational>> lk;   // symmetric; diagonal = framing
};

// Components of the closure and the linking matrix of the blackboard-framed
// diagram: diagonal entries are self-crossing sign sums, off-diagonal entries
// half the signed count of crossings between the two components.
LinkingData closure_components(const ColoredBraid& b);

// The scalar x with F(T) = x Id on the cut-open strand.  The braid is first
// conjugated so the smallest strand of cut_component sits at position 1.
// Errors: Errc::index_out_of_range (unknown component id), Errc::not_scalar,
// plus anything module construction raises (atypical colors, unsupported
// algebras).
LaurentElement evaluate_bracket(const ColoredBraid& b, int cut_component);

// f'(L) = dhat(cut color) * bracket; independent of the cut choice.
LaurentFraction f_prime(const ColoredBraid& b, int cut_component);

struct InvariantResult {
  LinkingData linking;
  int cut_component = 0;
  // dhat(cut) * bracket, tied to the blackboard framing of the diagram.
  LaurentFraction framed_value;
  // Sum of lk_ii <w_i, w_i + 2 rho> plus 2 lk_ij <w_i, w_j> over i < j;
  // framed_value = q^(correction) * normalized.
  ExponentForm correction;
  LaurentFraction normalized;
  // For a knot (one component) the containment guarantee is for
  // M1 * normalized, so m1_factor = M1(cut color); otherwise 1.
  LaurentElement m1_factor;
  // m1_factor * normalized cleared to a ring element (fully symbolic
  // colorings only; zero when the clearing was skipped).
  LaurentElement normalized_cleared;
  // True when every color is symbolic, so the Laurent-membership guarantee
  // applies and normalized_cleared / ring_report are meaningful.
  bool ring_check_applicable = false;
  RingReport ring_report;
};

// Full pipeline: linking data, f' at a deterministic cut (smallest typical
// component id), framing correction, and the Laurent-membership check.
// Errors: as evaluate_bracket, plus Errc::ring_check_failure when the
// guaranteed membership fails (which would indicate an engine bug).
InvariantResult normalize_invariant(const ColoredBraid& b);

}  // namespace superlink
