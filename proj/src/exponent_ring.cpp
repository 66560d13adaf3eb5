// exponent_ring.cpp
// -----------------
// Group-ring arithmetic over exponent forms, exact division, evaluation,
// ring-membership checking, and the canonical text form with its parser.

#include <superlink/exponent_ring.hpp>

#include <superlink/errors.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace superlink {

// ---------------------------------------------------------------------------
// errors (small enough to live here rather than in a dedicated TU)

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_spec: return "invalid_spec";
    case Errc::negative_label: return "negative_label";
    case Errc::atypical_label: return "atypical_label";
    case Errc::syntax_error: return "syntax_error";
    case Errc::index_out_of_range: return "index_out_of_range";
    case Errc::color_mismatch: return "color_mismatch";
    case Errc::no_typical_color: return "no_typical_color";
    case Errc::not_divisible: return "not_divisible";
    case Errc::non_integral_exponent: return "non_integral_exponent";
    case Errc::degenerate_evaluation: return "degenerate_evaluation";
    case Errc::construction_failure: return "construction_failure";
    case Errc::unsupported_algebra: return "unsupported_algebra";
    case Errc::normalization_failure: return "normalization_failure";
    case Errc::not_scalar: return "not_scalar";
    case Errc::ring_check_failure: return "ring_check_failure";
    case Errc::internal_error: return "internal_error";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void raise(Errc code, const std::string& message) { throw Error(code, message); }

// ---------------------------------------------------------------------------
// rational helpers

std::string rational_to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  std::size_t i = 0, n = text.size();
  auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  bool negative = false;
  if (i < n && (text[i] == '+' || text[i] == '-')) negative = (text[i++] == '-');
  auto read_digits = [&]() -> std::string {
    std::string out;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) out += text[i++];
    return out;
  };
  std::string num = read_digits();
  if (num.empty()) raise(Errc::syntax_error, "expected digits in rational '" + text + "'");
  std::string den = "1";
  if (i < n && text[i] == '/') {
    ++i;
    den = read_digits();
    if (den.empty()) raise(Errc::syntax_error, "expected denominator digits in '" + text + "'");
  }
  skip_ws();
  if (i != n) raise(Errc::syntax_error, "trailing characters in rational '" + text + "'");
  mpz_class num_z(num), den_z(den);
  if (den_z == 0) raise(Errc::syntax_error, "zero denominator in rational '" + text + "'");
  Rational value{num_z, den_z};
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

Rational rational_pow(const Rational& x, long e) {
  if (e == 0) return Rational(1);
  if (x == 0) {
    if (e < 0) raise(Errc::internal_error, "0 raised to a negative power");
    return Rational(0);
  }
  const unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num().get_mpz_t(), mag);
  mpz_pow_ui(den.get_mpz_t(), x.get_den().get_mpz_t(), mag);
  Rational out = (e > 0) ? Rational(num, den) : Rational(den, num);
  out.canonicalize();
  return out;
}

Rational frac(long num, long den) {
  if (den == 0) raise(Errc::internal_error, "frac with zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

long to_long(const Rational& x) {
  if (!is_integer(x)) raise(Errc::internal_error, "to_long on non-integer " + rational_to_string(x));
  if (!x.get_num().fits_slong_p()) raise(Errc::internal_error, "integer exceeds long range");
  return x.get_num().get_si();
}

// ---------------------------------------------------------------------------
// SymbolTable

namespace {

// Index encoded by a default-pattern name "a<digits>"; 0 if the name does not
// match the pattern.
int default_pattern_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 'a') return 0;
  if (name[1] == '0') return 0;
  long value = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return 0;
    value = value * 10 + (name[i] - '0');
    if (value > 1000000) return 0;
  }
  return static_cast<int>(value);
}

}  // namespace

int SymbolTable::intern(const std::string& name) {
  if (name.empty() || name == "q")
    raise(Errc::syntax_error, "'" + name + "' is not usable as a parameter symbol");
  if (auto it = by_name_.find(name); it != by_name_.end()) return it->second;
  int index = default_pattern_index(name);
  if (index == 0) {
    index = 1;
    while (names_.count(index) || by_name_.count("a" + std::to_string(index))) ++index;
  }
  names_[index] = name;
  by_name_[name] = index;
  return index;
}

int SymbolTable::lookup(const std::string& name) const {
  if (auto it = by_name_.find(name); it != by_name_.end()) return it->second;
  int index = default_pattern_index(name);
  // A default-pattern name only resolves when its index is not shadowed by a
  // registered name.
  if (index != 0 && !names_.count(index)) return index;
  return 0;
}

std::string SymbolTable::name(int index) const {
  if (auto it = names_.find(index); it != names_.end()) return it->second;
  return "a" + std::to_string(index);
}

const SymbolTable& SymbolTable::defaults() {
  static const SymbolTable table;
  return table;
}

// ---------------------------------------------------------------------------
// ExponentForm

ExponentForm::ExponentForm(const Rational& constant) : constant_(constant) {}
ExponentForm::ExponentForm(long constant) : constant_(constant) {}

ExponentForm ExponentForm::symbol(int index, const Rational& coeff) {
  if (index <= 0) raise(Errc::internal_error, "symbol index must be positive");
  ExponentForm out;
  if (coeff != 0) out.linear_[index] = coeff;
  return out;
}

ExponentForm ExponentForm::pair_term(int i, int j, const Rational& coeff) {
  if (i <= 0 || j <= 0) raise(Errc::internal_error, "symbol index must be positive");
  if (i > j) std::swap(i, j);
  ExponentForm out;
  if (coeff != 0) out.quadratic_[{i, j}] = coeff;
  return out;
}

bool ExponentForm::is_zero() const {
  return constant_ == 0 && linear_.empty() && quadratic_.empty();
}

bool ExponentForm::is_constant() const { return linear_.empty() && quadratic_.empty(); }

Rational ExponentForm::linear_coeff(int index) const {
  auto it = linear_.find(index);
  return it == linear_.end() ? Rational(0) : it->second;
}

void ExponentForm::collect_symbols(std::set<int>& out) const {
  for (const auto& [index, coeff] : linear_) out.insert(index);
  for (const auto& [key, coeff] : quadratic_) {
    out.insert(key.first);
    out.insert(key.second);
  }
}

void ExponentForm::trim() {
  std::erase_if(linear_, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(quadratic_, [](const auto& kv) { return kv.second == 0; });
}

ExponentForm& ExponentForm::operator+=(const ExponentForm& rhs) {
  constant_ += rhs.constant_;
  for (const auto& [index, coeff] : rhs.linear_) linear_[index] += coeff;
  for (const auto& [key, coeff] : rhs.quadratic_) quadratic_[key] += coeff;
  trim();
  return *this;
}

ExponentForm& ExponentForm::operator-=(const ExponentForm& rhs) {
  constant_ -= rhs.constant_;
  for (const auto& [index, coeff] : rhs.linear_) linear_[index] -= coeff;
  for (const auto& [key, coeff] : rhs.quadratic_) quadratic_[key] -= coeff;
  trim();
  return *this;
}

ExponentForm& ExponentForm::operator*=(const Rational& scale) {
  if (scale == 0) return *this = ExponentForm();
  constant_ *= scale;
  for (auto& [index, coeff] : linear_) coeff *= scale;
  for (auto& [key, coeff] : quadratic_) coeff *= scale;
  return *this;
}

ExponentForm ExponentForm::operator-() const {
  ExponentForm out = *this;
  out *= Rational(-1);
  return out;
}

ExponentForm ExponentForm::affine_product(const ExponentForm& a, const ExponentForm& b) {
  if (!a.is_affine() || !b.is_affine())
    raise(Errc::internal_error, "product of exponent forms requires affine factors");
  ExponentForm out;
  out.constant_ = a.constant_ * b.constant_;
  for (const auto& [index, coeff] : b.linear_) {
    Rational c = a.constant_ * coeff;
    if (c != 0) out.linear_[index] += c;
  }
  for (const auto& [index, coeff] : a.linear_) {
    Rational c = b.constant_ * coeff;
    if (c != 0) out.linear_[index] += c;
  }
  for (const auto& [i, ci] : a.linear_) {
    for (const auto& [j, cj] : b.linear_) {
      auto key = std::minmax(i, j);
      out.quadratic_[{key.first, key.second}] += ci * cj;
    }
  }
  out.trim();
  return out;
}

Rational ExponentForm::evaluate(const std::map<int, Rational>& assignment) const {
  auto value_of = [&](int index) -> const Rational& {
    auto it = assignment.find(index);
    if (it == assignment.end())
      raise(Errc::internal_error, "no value assigned to symbol index " + std::to_string(index));
    return it->second;
  };
  Rational out = constant_;
  for (const auto& [index, coeff] : linear_) out += coeff * value_of(index);
  for (const auto& [key, coeff] : quadratic_)
    out += coeff * value_of(key.first) * value_of(key.second);
  return out;
}

ExponentForm ExponentForm::substitute(const std::map<int, Rational>& assignment) const {
  auto lookup = [&](int index) -> const Rational* {
    auto it = assignment.find(index);
    return it == assignment.end() ? nullptr : &it->second;
  };
  ExponentForm out(constant_);
  for (const auto& [index, coeff] : linear_) {
    if (const Rational* v = lookup(index))
      out.constant_ += coeff * (*v);
    else
      out.linear_[index] += coeff;
  }
  for (const auto& [key, coeff] : quadratic_) {
    const Rational* vi = lookup(key.first);
    const Rational* vj = lookup(key.second);
    if (vi && vj)
      out.constant_ += coeff * (*vi) * (*vj);
    else if (vi)
      out.linear_[key.second] += coeff * (*vi);
    else if (vj)
      out.linear_[key.first] += coeff * (*vj);
    else
      out.quadratic_[key] += coeff;
  }
  out.trim();
  return out;
}

namespace {

int cmp_rational(const Rational& a, const Rational& b) {
  return a < b ? -1 : (b < a ? 1 : 0);
}

// Lexicographic comparison of two coefficient maps read in ascending key
// order, with absent keys contributing coefficient 0.
template <class Map>
int cmp_coefficient_maps(const Map& a, const Map& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  static const Rational kZero(0);
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      if (int c = cmp_rational(ia->second, kZero)) return c;
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      if (int c = cmp_rational(kZero, ib->second)) return c;
      ++ib;
    } else {
      if (int c = cmp_rational(ia->second, ib->second)) return c;
      ++ia;
      ++ib;
    }
  }
  return 0;
}

}  // namespace

int ExponentForm::compare(const ExponentForm& rhs) const {
  if (int c = cmp_rational(constant_, rhs.constant_)) return c;
  if (int c = cmp_coefficient_maps(linear_, rhs.linear_)) return c;
  return cmp_coefficient_maps(quadratic_, rhs.quadratic_);
}

std::string ExponentForm::to_string(const SymbolTable& table) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const Rational& coeff, const std::string& name) {
    Rational mag = abs(coeff);
    if (first) {
      if (coeff < 0) out << "-";
      first = false;
    } else {
      out << (coeff < 0 ? " - " : " + ");
    }
    if (name.empty()) {
      out << rational_to_string(mag);
    } else {
      if (mag != 1) out << rational_to_string(mag) << "*";
      out << name;
    }
  };
  for (const auto& [key, coeff] : quadratic_)
    emit(coeff, table.name(key.first) + table.name(key.second));
  for (const auto& [index, coeff] : linear_) emit(coeff, table.name(index));
  if (constant_ != 0) emit(constant_, "");
  return out.str();
}

// ---------------------------------------------------------------------------
// LaurentElement

LaurentElement LaurentElement::one() { return constant(Rational(1)); }

LaurentElement LaurentElement::constant(const Rational& value) {
  return monomial(value, ExponentForm());
}

LaurentElement LaurentElement::q_power(const ExponentForm& exponent) {
  return monomial(Rational(1), exponent);
}

LaurentElement LaurentElement::monomial(const Rational& coeff, const ExponentForm& exponent) {
  LaurentElement out;
  out.add_term(exponent, coeff);
  return out;
}

bool LaurentElement::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_zero() && terms_.begin()->second == 1;
}

bool LaurentElement::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

Rational LaurentElement::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) raise(Errc::internal_error, "constant_value on non-constant element");
  return terms_.begin()->second;
}

std::pair<ExponentForm, Rational> LaurentElement::leading_term() const {
  if (terms_.empty()) raise(Errc::internal_error, "leading_term of zero");
  return *terms_.rbegin();
}

std::pair<ExponentForm, Rational> LaurentElement::trailing_term() const {
  if (terms_.empty()) raise(Errc::internal_error, "trailing_term of zero");
  return *terms_.begin();
}

void LaurentElement::add_term(const ExponentForm& exponent, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentElement& LaurentElement::operator+=(const LaurentElement& rhs) {
  for (const auto& [exponent, coeff] : rhs.terms_) add_term(exponent, coeff);
  return *this;
}

LaurentElement& LaurentElement::operator-=(const LaurentElement& rhs) {
  for (const auto& [exponent, coeff] : rhs.terms_) add_term(exponent, -coeff);
  return *this;
}

LaurentElement operator*(const LaurentElement& lhs, const LaurentElement& rhs) {
  LaurentElement out;
  for (const auto& [ea, ca] : lhs.terms()) {
    for (const auto& [eb, cb] : rhs.terms()) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

LaurentElement& LaurentElement::operator*=(const LaurentElement& rhs) {
  return *this = *this * rhs;
}

LaurentElement LaurentElement::operator-() const {
  LaurentElement out = *this;
  for (auto& [exponent, coeff] : out.terms_) coeff = -coeff;
  return out;
}

LaurentElement& LaurentElement::scale(const Rational& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [exponent, coeff] : terms_) coeff *= factor;
  return *this;
}

LaurentElement LaurentElement::pow(long n) const {
  if (n < 0) return monomial_inverse().pow(-n);
  LaurentElement result = one();
  LaurentElement base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

LaurentElement LaurentElement::monomial_inverse() const {
  if (!is_monomial()) raise(Errc::internal_error, "monomial_inverse on non-monomial");
  const auto& [exponent, coeff] = *terms_.begin();
  return monomial(Rational(1) / coeff, -exponent);
}

void LaurentElement::collect_symbols(std::set<int>& out) const {
  for (const auto& [exponent, coeff] : terms_) exponent.collect_symbols(out);
}

std::set<int> LaurentElement::symbols() const {
  std::set<int> out;
  collect_symbols(out);
  return out;
}

// ---------------------------------------------------------------------------
// exact division

std::optional<LaurentElement> try_exact_div(const LaurentElement& num, const LaurentElement& den) {
  if (den.is_zero()) return std::nullopt;
  if (num.is_zero()) return LaurentElement::zero();
  const auto [den_lead_exp, den_lead_coeff] = den.leading_term();
  // Any exact quotient has trailing exponent trailing(num) - trailing(den);
  // a candidate quotient term below that window proves non-divisibility.
  const ExponentForm window = num.trailing_term().first - den.trailing_term().first;
  LaurentElement quotient;
  LaurentElement rem = num;
  // The candidate quotient exponents decrease strictly, but the order is not
  // Archimedean, so the window alone does not always terminate; the cap does.
  std::size_t cap = 10000 + 64 * (num.term_count() + den.term_count());
  for (std::size_t step = 0; !rem.is_zero(); ++step) {
    if (step > cap) return std::nullopt;
    const auto [lead_exp, lead_coeff] = rem.leading_term();
    ExponentForm q_exp = lead_exp - den_lead_exp;
    if (q_exp < window) return std::nullopt;
    Rational q_coeff = lead_coeff / den_lead_coeff;
    quotient.add_term(q_exp, q_coeff);
    rem -= LaurentElement::monomial(q_coeff, q_exp) * den;
  }
  return quotient;
}

LaurentElement exact_div(const LaurentElement& num, const LaurentElement& den) {
  if (den.is_zero()) raise(Errc::not_divisible, "division by the zero element");
  if (auto quotient = try_exact_div(num, den)) return *quotient;
  raise(Errc::not_divisible, "no exact quotient (" + std::to_string(num.term_count()) + " terms / " +
                                 std::to_string(den.term_count()) + " terms)");
}

// ---------------------------------------------------------------------------
// evaluation

Rational eval_at(const LaurentElement& x, const std::map<int, Rational>& assignment,
                 const Rational& base, long power) {
  if (power < 1) raise(Errc::internal_error, "eval_at requires power >= 1");
  if (base == 0) raise(Errc::internal_error, "eval_at requires a nonzero base");
  Rational out(0);
  for (const auto& [exponent, coeff] : x.terms()) {
    Rational e = exponent.evaluate(assignment) * Rational(power);
    if (!is_integer(e))
      raise(Errc::non_integral_exponent,
            "exponent " + rational_to_string(e / Rational(power)) + " is not integral for q = base^" +
                std::to_string(power));
    out += coeff * rational_pow(base, to_long(e));
  }
  return out;
}

LaurentElement substitute(const LaurentElement& x, const std::map<int, Rational>& assignment) {
  LaurentElement out;
  for (const auto& [exponent, coeff] : x.terms())
    out.add_term(exponent.substitute(assignment), coeff);
  return out;
}

// ---------------------------------------------------------------------------
// ring membership

namespace {

std::string term_to_string(const ExponentForm& exponent, const Rational& coeff,
                           const SymbolTable& table, bool leading);

}  // namespace

RingReport check_polynomial_ring(const LaurentElement& x, const std::set<int>& allowed_symbols,
                                 const SymbolTable& table) {
  RingReport report;
  for (const auto& [exponent, coeff] : x.terms()) {
    std::vector<std::string> problems;
    if (!is_integer(coeff)) problems.push_back("coefficient is not an integer");
    if (!is_integer(exponent.constant_part())) problems.push_back("q-exponent is not an integer");
    for (const auto& [index, c] : exponent.linear()) {
      if (!allowed_symbols.count(index))
        problems.push_back("symbol " + table.name(index) + " is not a declared parameter");
      else if (!is_integer(c))
        problems.push_back("exponent of " + table.name(index) + " is not an integer");
    }
    if (!exponent.quadratic().empty())
      problems.push_back("exponent has a quadratic part");
    for (const auto& problem : problems)
      report.failures.push_back("term " + term_to_string(exponent, coeff, table, true) + ": " + problem);
  }
  report.pass = report.failures.empty();
  return report;
}

// ---------------------------------------------------------------------------
// canonical text form

namespace {

std::string term_to_string(const ExponentForm& exponent, const Rational& coeff,
                           const SymbolTable& table, bool leading) {
  std::vector<std::string> factors;
  if (exponent.constant_part() != 0)
    factors.push_back("q^(" + rational_to_string(exponent.constant_part()) + ")");
  for (const auto& [index, c] : exponent.linear())
    factors.push_back(table.name(index) + "^(" + rational_to_string(c) + ")");
  for (const auto& [key, c] : exponent.quadratic())
    factors.push_back(table.name(key.first) + table.name(key.second) + "^(" +
                      rational_to_string(c) + ")");

  Rational magnitude = abs(coeff);
  std::string body;
  if (factors.empty()) {
    body = rational_to_string(magnitude);
  } else {
    if (magnitude != 1) body = rational_to_string(magnitude) + "*";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) body += "*";
      body += factors[i];
    }
  }
  if (leading) return (coeff < 0 ? "-" : "") + body;
  return (coeff < 0 ? " - " : " + ") + body;
}

}  // namespace

std::string to_canonical_string(const LaurentElement& x, const SymbolTable& table) {
  if (x.is_zero()) return "0";
  std::string out;
  bool leading = true;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    out += term_to_string(it->first, it->second, table, leading);
    leading = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// parser for the canonical form

namespace {

class ElementParser {
public:
  ElementParser(const std::string& text, const SymbolTable& table) : text_(text), table_(table) {}

  LaurentElement parse() {
    LaurentElement out;
    skip_ws();
    if (done()) fail("empty input");
    int sign = 1;
    if (peek() == '-' || peek() == '+') sign = (take() == '-') ? -1 : 1;
    parse_term(out, sign);
    skip_ws();
    while (!done()) {
      char op = take();
      if (op != '+' && op != '-') fail(std::string("expected '+' or '-', found '") + op + "'");
      parse_term(out, op == '-' ? -1 : 1);
      skip_ws();
    }
    return out;
  }

private:
  const std::string& text_;
  const SymbolTable& table_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) {
    raise(Errc::syntax_error, why + " at offset " + std::to_string(pos_) + " in '" + text_ + "'");
  }

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Rational read_rational() {
    skip_ws();
    std::size_t start = pos_;
    if (!done() && (peek() == '-' || peek() == '+')) ++pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!done() && peek() == '/') {
      ++pos_;
      while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    if (pos_ == start) fail("expected a rational number");
    return parse_rational(text_.substr(start, pos_ - start));
  }

  std::string read_name() {
    skip_ws();
    std::size_t start = pos_;
    while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    if (pos_ == start) fail("expected a factor name");
    return text_.substr(start, pos_ - start);
  }

  // Adds the exponent contribution of one named factor raised to `e`.
  void apply_factor(ExponentForm& exponent, const std::string& name, const Rational& e) {
    if (name == "q") {
      exponent += ExponentForm(e);
      return;
    }
    if (int index = table_.lookup(name)) {
      exponent += ExponentForm::symbol(index, e);
      return;
    }
    // Compound quadratic name: the concatenation of two symbol names.
    for (std::size_t cut = 1; cut < name.size(); ++cut) {
      int i = table_.lookup(name.substr(0, cut));
      int j = table_.lookup(name.substr(cut));
      if (i && j) {
        exponent += ExponentForm::pair_term(i, j, e);
        return;
      }
    }
    fail("unknown factor name '" + name + "'");
  }

  void parse_term(LaurentElement& out, int sign) {
    Rational coeff(sign);
    ExponentForm exponent;
    bool saw_factor = false;
    while (true) {
      skip_ws();
      if (done()) break;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= read_rational();
      } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
        std::string name = read_name();
        skip_ws();
        if (done() || peek() != '^') fail("factor '" + name + "' is missing '^(exponent)'");
        take();
        skip_ws();
        if (done() || peek() != '(') fail("expected '(' after '^'");
        take();
        Rational e = read_rational();
        skip_ws();
        if (done() || peek() != ')') fail("expected ')' after exponent");
        take();
        apply_factor(exponent, name, e);
      } else {
        fail(std::string("unexpected character '") + peek() + "'");
      }
      saw_factor = true;
      skip_ws();
      if (done() || peek() != '*') break;
      take();
    }
    if (!saw_factor) fail("empty term");
    out.add_term(exponent, coeff);
  }
};

}  // namespace

LaurentElement parse_element(const std::string& text, const SymbolTable& table) {
  return ElementParser(text, table).parse();
}

// ---------------------------------------------------------------------------
// LaurentFraction

LaurentFraction::LaurentFraction() : num_(), den_(LaurentElement::one()) {}

LaurentFraction::LaurentFraction(LaurentElement numerator)
    : num_(std::move(numerator)), den_(LaurentElement::one()) {}

LaurentFraction::LaurentFraction(LaurentElement numerator, LaurentElement denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  normalize();
}

void LaurentFraction::normalize() {
  if (den_.is_zero()) raise(Errc::internal_error, "fraction with zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentElement::one();
    return;
  }
  // Shift the denominator's leading monomial into the numerator so the
  // denominator leads with coefficient 1 at exponent 0; this alone clears
  // monomial denominators completely.
  const auto [lead_exp, lead_coeff] = den_.leading_term();
  if (!lead_exp.is_zero() || lead_coeff != 1) {
    LaurentElement shift = LaurentElement::monomial(Rational(1) / lead_coeff, -lead_exp);
    num_ *= shift;
    den_ *= shift;
  }
  if (den_.is_one()) return;
  if (auto quotient = try_exact_div(num_, den_)) {
    num_ = *quotient;
    den_ = LaurentElement::one();
  }
}

LaurentElement LaurentFraction::as_element() const {
  if (den_.is_one()) return num_;
  return exact_div(num_, den_);
}

bool LaurentFraction::equals(const LaurentFraction& rhs) const {
  return num_ * rhs.den_ == rhs.num_ * den_;
}

LaurentFraction& LaurentFraction::operator+=(const LaurentFraction& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

LaurentFraction& LaurentFraction::operator-=(const LaurentFraction& rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
  } else {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

LaurentFraction& LaurentFraction::operator*=(const LaurentFraction& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

LaurentFraction LaurentFraction::operator-() const {
  LaurentFraction out = *this;
  out.num_ = -out.num_;
  return out;
}

LaurentFraction LaurentFraction::inverse() const {
  if (num_.is_zero()) raise(Errc::internal_error, "inverse of the zero fraction");
  return LaurentFraction(den_, num_);
}

LaurentFraction LaurentFraction::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  LaurentFraction result = one();
  LaurentFraction base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

}  // namespace superlink
