// uq_engine.hpp
// -------------
// Matrix realization of the quantized enveloping superalgebra of sl(2|1)
// acting on its deformed typical highest-weight modules: generator matrices,
// q-analogs of the Cartan-Weyl root vectors, the R-matrix R = Rhat * K, the
// braiding morphisms and their inverses, pivotal (cap) data, and the right
// quantum partial trace.  Everything downstream of the braid evaluator builds
// on the operators defined here.
//
// Normalization: the stored raising matrices carry an absorbed factor
// (q - q^{-1}), i.e. e_action[i] is the matrix of (q - q^{-1}) E_i.  With the
// bare generator the pair E_s, F_s attached to the isotropic odd root forces
// a matrix entry (q^{a+k} - q^{-a-k})/(q - q^{-1}) somewhere, which is not a
// Laurent element for a symbolic parameter a; absorbing the bracket into the
// raising side keeps every stored entry in the ring.  The scaling commutes
// with the coproduct and with all homogeneous relations, so the defining
// relations are checked in the equivalent form
//     E_i F_j - (-1)^{p_i p_j} F_j E_i = delta_ij (K_i - K_i^{-1}).
//
// Sign bookkeeping is centralized: operator tensor products apply the Koszul
// rule (A (x) B)(v (x) w) = (-1)^{|B| |v|} Av (x) Bw through op_tensor only,
// and the super flip carries (-1)^{|v| |w|}.

#pragma once

#include <superlink/characters.hpp>

#include <map>
#include <memory>
#include <vector>

namespace superlink {

// Dense row-major matrix over the Laurent ring.  Dimensions stay small (the
// largest required object is 64 x 64), so no sparse storage; the product
// skips zero entries, which is where the actual sparsity lives.
class ElementMatrix {
public:
  ElementMatrix() = default;
  ElementMatrix(int rows, int cols);

  static ElementMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const LaurentElement& at(int r, int c) const;
  LaurentElement& at(int r, int c);

  bool is_zero() const;
  bool is_identity() const;
  // True when the matrix is x * Id; requires rows == cols > 0.  On success
  // stores the scalar in `scalar`.
  bool is_scalar(LaurentElement* scalar = nullptr) const;

  ElementMatrix& operator+=(const ElementMatrix& rhs);
  ElementMatrix& operator-=(const ElementMatrix& rhs);
  friend ElementMatrix operator+(ElementMatrix lhs, const ElementMatrix& rhs) { return lhs += rhs; }
  friend ElementMatrix operator-(ElementMatrix lhs, const ElementMatrix& rhs) { return lhs -= rhs; }
  friend ElementMatrix operator*(const ElementMatrix& lhs, const ElementMatrix& rhs);

  ElementMatrix scaled(const LaurentElement& factor) const;
  // Entrywise exact division; throws Errc::not_divisible.
  ElementMatrix divided_by(const LaurentElement& divisor) const;

  bool operator==(const ElementMatrix& rhs) const;
  bool operator!=(const ElementMatrix& rhs) const { return !(*this == rhs); }

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<LaurentElement> data_;
};

// Entrywise numeric evaluation at q = base^power with the given symbol
// assignment (see eval_at).
std::vector<std::vector<Rational>> eval_matrix(const ElementMatrix& m,
                                               const std::map<int, Rational>& assignment,
                                               const Rational& base, long power = 1);

// Exact product of numeric matrices (used by the random-point identities).
std::vector<std::vector<Rational>> rational_product(const std::vector<std::vector<Rational>>& a,
                                                    const std::vector<std::vector<Rational>>& b);

// ---------------------------------------------------------------------------
// Modules

struct BasisVector {
  // b(k, e3, e2) = F_3^{e3} F_2^{e2} F_1^k v_0 in PBW order, 0 <= k <= c_1,
  // e3, e2 in {0, 1}; index = 4k + 2 e3 + e2.
  int k = 0;
  int e3 = 0;
  int e2 = 0;
  Weight weight;
  int parity = 0;  // 0 even, 1 odd
};

struct ModuleRep {
  TypicalLabel label;
  std::vector<BasisVector> basis;
  // Indexed by simple root (0 -> alpha_1 even, 1 -> alpha_2 odd).
  // e_action[i] is the matrix of (q - q^{-1}) E_i; see the header comment.
  std::vector<ElementMatrix> e_action;
  std::vector<ElementMatrix> f_action;
  std::vector<ElementMatrix> k_action;
  std::vector<ElementMatrix> k_inverse;

  int dim() const { return static_cast<int>(basis.size()); }
  std::vector<int> parities() const;
};

// Builds the deformed typical module of highest weight w_a^c over sl(2|1)
// and validates every defining relation, the Serre relations, the diagonal
// K-action, and the character weight multiset before returning.
// Errors: Errc::unsupported_algebra (anything but sl(2|1)),
// Errc::atypical_label (numeric parameter on an atypical value),
// Errc::construction_failure (a validation identity failed).
ModuleRep build_module(const TypicalLabel& label);

// ---------------------------------------------------------------------------
// Cartan-Weyl root vectors

struct RootVectorPair {
  Weight root;
  bool odd = false;
  // Raising matrix carries the absorbed (q - q^{-1}), like e_action.
  ElementMatrix e;
  ElementMatrix f;
};

// Root vectors for every positive root in the fixed normal order
// alpha_1 < alpha_1 + alpha_2 < alpha_2.  The composite pair is
// E_13 = E_1 E_2 - q^{-1} E_2 E_1, F_13 = F_2 F_1 - q F_1 F_2; the returned
// operators satisfy [E_alpha, F_alpha] = K_alpha - K_alpha^{-1} exactly
// (coupling constant 1); Errc::normalization_failure otherwise.
std::vector<RootVectorPair> cartan_weyl_ops(const ModuleRep& mod);

// ---------------------------------------------------------------------------
// R-matrix and braiding

struct RMatrixData {
  std::shared_ptr<const ModuleRep> left;
  std::shared_ptr<const ModuleRep> right;
  ElementMatrix matrix;   // R = Rhat * K on left (x) right
  ElementMatrix inverse;  // R^{-1} = K^{-1} * Rhat^{-1}
};

// Assembles R = Rhat * K: K acts diagonally by q^{<eta, eta'>} on weight
// pairs; Rhat is the ordered product of per-root factors, an exponential
// series truncated by nilpotency for the even root and 1 - X for the two odd
// roots.  Checked at build time: R * R^{-1} = Id and the highest-line scalar
// R(v0 (x) v0') = q^{<lambda, mu>} v0 (x) v0'.
// Errors: Errc::color_mismatch (different algebras), propagated build errors.
RMatrixData build_rmatrix(std::shared_ptr<const ModuleRep> left,
                          std::shared_ptr<const ModuleRep> right);

// Braiding c_{V,W} = super_flip . R : V (x) W -> W (x) V.
ElementMatrix braiding_matrix(const RMatrixData& r);
// c_{V,W}^{-1} = R^{-1} . super_flip_{W,V} : W (x) V -> V (x) W.
ElementMatrix braiding_inverse(const RMatrixData& r);

// ---------------------------------------------------------------------------
// Duality data and partial trace

struct PivotData {
  // Per basis vector of the module: the cap weight q^{2<eta, rho>} and the
  // super sign (-1)^{parity}.
  std::vector<LaurentElement> cap_scalar;
  std::vector<int> sign;
};

PivotData pivot_data(const ModuleRep& mod);

// Right partial trace over the rightmost tensor factor: for an operator F on
// (rest) (x) V with V = last_factor,
//   ptr(F)[i', i] = sum_t (-1)^{|t|} q^{2<eta_t, rho>} F[(i', t), (i, t)].
// Composing with the coevaluation and the pivotal evaluation on the right is
// exactly this weighted trace.
ElementMatrix quantum_partial_trace(const ElementMatrix& op, const ModuleRep& last_factor);

// ---------------------------------------------------------------------------
// Tensor utilities (shared with the braid evaluator)

// Matrix of A (x) B on V (x) W: entry[(i,j),(i',j')] =
// (-1)^{parity_b * |v_{i'}|} A[i,i'] B[j,j'].  parity_b is the parity of the
// operator B; v_parities lists the parities of the V basis.
ElementMatrix op_tensor(const ElementMatrix& a, const ElementMatrix& b, int parity_b,
                        const std::vector<int>& v_parities);

// Super flip V (x) W -> W (x) V, v (x) w -> (-1)^{|v||w|} w (x) v.
ElementMatrix super_flip(const std::vector<int>& v_parities, const std::vector<int>& w_parities);

// Coproduct matrices on left (x) right for generator i (0-based), using the
// stored scaled raising generators:
//   Delta(E_i) = E_i (x) 1 + K_i^{-1} (x) E_i,
//   Delta(F_i) = F_i (x) K_i + 1 (x) F_i,
// and their opposites (the super flip applied to the element):
//   Delta_op(E_i) = 1 (x) E_i + E_i (x) K_i^{-1},
//   Delta_op(F_i) = K_i (x) F_i + F_i (x) 1.
ElementMatrix coproduct_e(const ModuleRep& left, const ModuleRep& right, int i);
ElementMatrix coproduct_f(const ModuleRep& left, const ModuleRep& right, int i);
ElementMatrix coproduct_e_op(const ModuleRep& left, const ModuleRep& right, int i);
ElementMatrix coproduct_f_op(const ModuleRep& left, const ModuleRep& right, int i);

}  // namespace superlink
