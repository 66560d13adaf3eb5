// exponent_ring.hpp
// -----------------
// Generalized Laurent polynomials: finite Q-linear combinations of formal
// powers q^e where the exponent e lives in the Q-span of 1, the parameter
// symbols a_i, and their unordered products a_i*a_j (squares included).
// Multiplication adds exponents, so the terms form a group ring over an
// ordered abelian group; that order is what makes exact division by
// leading-term elimination well defined.
//
// The pieces:
//   SymbolTable     -- display names for parameter symbols (index >= 1)
//   ExponentForm    -- one exponent: constant + linear + quadratic part
//   LaurentElement  -- finite sum of rational multiples of q^e
//   LaurentFraction -- quotient of two elements, compared by cross-multiplying
// plus exact division, evaluation at numeric points, a Laurent-ring membership
// check, and a canonical text form with a round-tripping parser.

#pragma once

#include <superlink/rational.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace superlink {

// Maps symbol indices (1-based) to display names.  Unregistered indices fall
// back to "a<i>", which is also the spelling the parser accepts by default.
class SymbolTable {
public:
  // Returns the index for `name`, registering it if new.  Names of the form
  // a<digits> are pinned to their numeric index.
  int intern(const std::string& name);

  // Index for a known (or default-pattern) name; 0 when unrecognized.
  int lookup(const std::string& name) const;

  std::string name(int index) const;

  static const SymbolTable& defaults();

private:
  std::map<int, std::string> names_;
  std::map<std::string, int> by_name_;
};

// Exponent of a single q-power.  Kept trimmed: no zero coefficients are
// stored, and quadratic keys always satisfy first <= second.
class ExponentForm {
public:
  ExponentForm() = default;
  explicit ExponentForm(const Rational& constant);
  explicit ExponentForm(long constant);

  static ExponentForm symbol(int index, const Rational& coeff = Rational(1));
  static ExponentForm pair_term(int i, int j, const Rational& coeff = Rational(1));

  const Rational& constant_part() const { return constant_; }
  const std::map<int, Rational>& linear() const { return linear_; }
  const std::map<std::pair<int, int>, Rational>& quadratic() const { return quadratic_; }

  bool is_zero() const;
  bool is_constant() const;
  bool is_affine() const { return quadratic_.empty(); }
  Rational linear_coeff(int index) const;
  void collect_symbols(std::set<int>& out) const;

  ExponentForm& operator+=(const ExponentForm& rhs);
  ExponentForm& operator-=(const ExponentForm& rhs);
  ExponentForm& operator*=(const Rational& scale);
  friend ExponentForm operator+(ExponentForm lhs, const ExponentForm& rhs) { return lhs += rhs; }
  friend ExponentForm operator-(ExponentForm lhs, const ExponentForm& rhs) { return lhs -= rhs; }
  friend ExponentForm operator*(const Rational& scale, ExponentForm rhs) { return rhs *= scale; }
  ExponentForm operator-() const;

  // Product of two quadratic-free forms; anything that would leave the
  // quadratic span is an internal error (weights are affine in the symbols,
  // so their pairings stay inside the span by construction).
  static ExponentForm affine_product(const ExponentForm& a, const ExponentForm& b);

  // Substitutes numeric values for every symbol that occurs.
  Rational evaluate(const std::map<int, Rational>& assignment) const;

  // Substitutes values for the assigned symbols only; others stay formal.
  ExponentForm substitute(const std::map<int, Rational>& assignment) const;

  // Total group order: constant part first, then linear coefficients read in
  // ascending symbol order, then quadratic coefficients in ascending key
  // order; at the first differing coefficient the larger one wins.
  int compare(const ExponentForm& rhs) const;
  bool operator==(const ExponentForm& rhs) const { return compare(rhs) == 0; }
  bool operator!=(const ExponentForm& rhs) const { return compare(rhs) != 0; }
  bool operator<(const ExponentForm& rhs) const { return compare(rhs) < 0; }

  // Human-readable linear combination, e.g. "-2*a1a1 - 2*a1 + 3".
  std::string to_string(const SymbolTable& table = SymbolTable::defaults()) const;

private:
  Rational constant_ = Rational(0);
  std::map<int, Rational> linear_;
  std::map<std::pair<int, int>, Rational> quadratic_;

  void trim();
};

class LaurentElement {
public:
  LaurentElement() = default;  // zero

  static LaurentElement zero() { return LaurentElement(); }
  static LaurentElement one();
  static LaurentElement constant(const Rational& value);
  static LaurentElement q_power(const ExponentForm& exponent);
  static LaurentElement monomial(const Rational& coeff, const ExponentForm& exponent);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  // Requires is_constant(); zero yields 0.
  Rational constant_value() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<ExponentForm, Rational>& terms() const { return terms_; }

  // Largest / smallest exponent with its coefficient; element must be nonzero.
  std::pair<ExponentForm, Rational> leading_term() const;
  std::pair<ExponentForm, Rational> trailing_term() const;

  void add_term(const ExponentForm& exponent, const Rational& coeff);

  LaurentElement& operator+=(const LaurentElement& rhs);
  LaurentElement& operator-=(const LaurentElement& rhs);
  LaurentElement& operator*=(const LaurentElement& rhs);
  friend LaurentElement operator+(LaurentElement lhs, const LaurentElement& rhs) { return lhs += rhs; }
  friend LaurentElement operator-(LaurentElement lhs, const LaurentElement& rhs) { return lhs -= rhs; }
  friend LaurentElement operator*(const LaurentElement& lhs, const LaurentElement& rhs);
  LaurentElement operator-() const;
  LaurentElement& scale(const Rational& factor);

  // Nonnegative n for any element; negative n requires a monomial.
  LaurentElement pow(long n) const;
  // Requires is_monomial().
  LaurentElement monomial_inverse() const;

  void collect_symbols(std::set<int>& out) const;
  std::set<int> symbols() const;

  bool operator==(const LaurentElement& rhs) const { return terms_ == rhs.terms_; }
  bool operator!=(const LaurentElement& rhs) const { return !(*this == rhs); }

private:
  std::map<ExponentForm, Rational> terms_;
};

// Exact division in the group ring.  Returns std::nullopt when no quotient
// exists (including division by zero).  The algorithm eliminates leading
// terms; a candidate quotient exponent falling below trailing(num) -
// trailing(den) proves non-divisibility, and a generous step cap guards the
// corner of the order where that window is never crossed.
std::optional<LaurentElement> try_exact_div(const LaurentElement& num, const LaurentElement& den);

// Same, but throws Errc::not_divisible with a diagnostic message.
LaurentElement exact_div(const LaurentElement& num, const LaurentElement& den);

// Evaluates with q = base^power (power >= 1), substituting `assignment` into
// every exponent.  Each resulting exponent e must satisfy e * power integral;
// otherwise Errc::non_integral_exponent.  Unassigned symbols are an error.
Rational eval_at(const LaurentElement& x, const std::map<int, Rational>& assignment,
                 const Rational& base, long power = 1);

// Specializes the assigned symbols to numeric values, keeping q and the
// remaining symbols formal.  Terms whose exponents collide after substitution
// are merged (and may cancel).
LaurentElement substitute(const LaurentElement& x, const std::map<int, Rational>& assignment);

struct RingReport {
  bool pass = true;
  std::vector<std::string> failures;
};

// Checks membership in Z[q^{+-1}, q_i^{+-1} : i in allowed_symbols] up to the
// identification q_i = q^{a_i}: every exponent must have an integer constant
// part, integer linear coefficients supported on allowed_symbols, and no
// quadratic part.  (Coefficients of the terms themselves may be any integer;
// non-integer rational coefficients are reported too.)
RingReport check_polynomial_ring(const LaurentElement& x, const std::set<int>& allowed_symbols,
                                 const SymbolTable& table = SymbolTable::defaults());

// Canonical text form.  Terms are sorted by descending exponent; each term is
// rendered "c*q^(e0)*a1^(e1)*a1a2^(e12)" with zero-exponent factors dropped,
// a unit coefficient elided when at least one factor remains, and rationals
// written "p/r".  The zero element renders "0".
std::string to_canonical_string(const LaurentElement& x,
                                const SymbolTable& table = SymbolTable::defaults());

// Inverse of to_canonical_string (tolerant of extra whitespace).  Throws
// Errc::syntax_error on malformed input.
LaurentElement parse_element(const std::string& text,
                             const SymbolTable& table = SymbolTable::defaults());

class LaurentFraction {
public:
  LaurentFraction();  // 0/1
  LaurentFraction(LaurentElement numerator);  // NOLINT(google-explicit-constructor)
  LaurentFraction(LaurentElement numerator, LaurentElement denominator);

  static LaurentFraction zero() { return LaurentFraction(); }
  static LaurentFraction one() { return LaurentFraction(LaurentElement::one()); }

  const LaurentElement& numerator() const { return num_; }
  const LaurentElement& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  // True when the denominator has been cleared to 1.
  bool is_element() const { return den_.is_one(); }
  // Clears the denominator by exact division; throws Errc::not_divisible.
  LaurentElement as_element() const;

  // Equality of the represented quotients (cross-multiplication).
  bool equals(const LaurentFraction& rhs) const;

  LaurentFraction& operator+=(const LaurentFraction& rhs);
  LaurentFraction& operator-=(const LaurentFraction& rhs);
  LaurentFraction& operator*=(const LaurentFraction& rhs);
  friend LaurentFraction operator+(LaurentFraction lhs, const LaurentFraction& rhs) { return lhs += rhs; }
  friend LaurentFraction operator-(LaurentFraction lhs, const LaurentFraction& rhs) { return lhs -= rhs; }
  friend LaurentFraction operator*(LaurentFraction lhs, const LaurentFraction& rhs) { return lhs *= rhs; }
  LaurentFraction operator-() const;

  // Requires a nonzero numerator.
  LaurentFraction inverse() const;
  LaurentFraction pow(long n) const;

private:
  LaurentElement num_;
  LaurentElement den_;

  void normalize();
};

}  // namespace superlink
