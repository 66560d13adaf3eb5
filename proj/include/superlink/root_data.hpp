// root_data.hpp
// -------------
// Combinatorial data of the two algebra families sl(m|n) (m != n) and
// osp(2|2n): positive roots with parity, the rho vectors, fundamental
// weights, Cartan matrix, the invariant bilinear form, labeled highest
// weights w_a^c, typicality, and the Weyl group of the even part.
//
// Weights are coordinate vectors over the epsilon/delta basis; coordinates
// are ExponentForms so a single formal parameter can ride along linearly.
// For sl(m|n) the form only descends to classes modulo the supertrace
// str = sum(eps) - sum(delta), so the pairing always projects its first
// argument onto the orthogonal complement of str, which makes it total and
// representative-independent in the second argument.

#pragma once

#include <superlink/exponent_ring.hpp>

#include <string>
#include <vector>

namespace superlink {

enum class Family { sl, osp };

struct AlgebraSpec {
  Family family = Family::sl;
  int m = 2;
  int n = 1;

  // Number of simple roots.
  int rank() const { return family == Family::sl ? m + n - 1 : n + 1; }
  // Index (1-based) of the distinguished odd simple root.
  int odd_index() const { return family == Family::sl ? m : 1; }
  // Length of a weight coordinate vector.
  int basis_dim() const { return family == Family::sl ? m + n : 1 + n; }
  std::string name() const;

  bool operator==(const AlgebraSpec&) const = default;
};

struct Weight {
  std::vector<ExponentForm> coords;

  Weight() = default;
  explicit Weight(int dim) : coords(dim) {}

  int dim() const { return static_cast<int>(coords.size()); }
  bool is_constant() const;

  Weight& operator+=(const Weight& rhs);
  Weight& operator-=(const Weight& rhs);
  Weight& operator*=(const Rational& scale);
  friend Weight operator+(Weight lhs, const Weight& rhs) { return lhs += rhs; }
  friend Weight operator-(Weight lhs, const Weight& rhs) { return lhs -= rhs; }
  friend Weight operator*(const Rational& scale, Weight rhs) { return rhs *= scale; }
  Weight operator-() const;

  // Coordinatewise product with an affine form (used for a * w_s).
  Weight scaled_by(const ExponentForm& factor) const;

  bool operator==(const Weight& rhs) const { return coords == rhs.coords; }
};

struct Root {
  Weight weight;
  bool odd = false;
};

// An even-Weyl-group element: basis vector i maps to sign[i] * basis vector
// target[i]; det is the sign character epsilon(w).
struct WeylElement {
  std::vector<int> target;
  std::vector<int> sign;
  int det = 1;

  Weight apply(const Weight& x) const;
};

struct RootData {
  AlgebraSpec spec;
  // Diagonal of the raw bilinear form: +1 on epsilon coordinates, -1 on delta.
  std::vector<int> metric;
  std::vector<std::string> basis_names;
  std::vector<Root> positive_roots;  // even block first, then odd
  std::vector<Weight> simple_roots;  // alpha_1 .. alpha_r
  Weight rho0, rho1, rho;
  std::vector<Weight> fundamental_weights;  // w_1 .. w_r
  std::vector<std::vector<long>> cartan;    // a_ij = <alpha_i, alpha_j> / d_i
  std::vector<long> d;                      // d_1 .. d_r
  std::vector<Weight> h_basis;              // h_i realized as alpha_i / d_i

  int rank() const { return spec.rank(); }
  int odd_root_count() const;
};

// Populates every field from the closed-form descriptions of the family.
// Errors: Errc::invalid_spec (sl with m == n, non-positive sizes, osp with
// first argument != 2).
RootData build_root_data(const AlgebraSpec& spec);

// w_a^c = a * w_s + sum_i c_i * w_(other indices in ascending order).
// `a` may be a symbol, a constant, or any affine form.
// Errors: Errc::negative_label, Errc::invalid_spec (wrong label length).
Weight weight_from_label(const RootData& rd, const std::vector<long>& c, const ExponentForm& a);

// The invariant form <x, y>.  For sl the first argument is projected onto
// str-perp; for osp it is the signed coordinate pairing directly.
ExponentForm pair_weights(const RootData& rd, const Weight& x, const Weight& y);

// Values of the parameter a for which w_a^c is atypical: the roots of
// <w_a^c + rho, alpha> = 0 over odd positive roots alpha (sorted, distinct).
std::vector<Rational> atypical_values(const RootData& rd, const std::vector<long>& c);

bool is_typical(const RootData& rd, const std::vector<long>& c, const Rational& a);

// Exhaustive enumeration: S_m x S_n for sl (signs sgn*sgn), signed
// permutations of the deltas for osp (order 2^n n!, sign = determinant).
std::vector<WeylElement> weyl_elements(const RootData& rd);

// JSON description (roots, rho vectors, Cartan data) for the CLI.
std::string root_data_json(const RootData& rd);

}  // namespace superlink
