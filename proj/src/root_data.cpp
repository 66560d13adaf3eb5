// root_data.cpp
// -------------
// Closed-form construction of the root systems, weights, and Weyl groups.

#include <superlink/root_data.hpp>

#include <superlink/errors.hpp>

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace superlink {

// ---------------------------------------------------------------------------
// AlgebraSpec / Weight / WeylElement

std::string AlgebraSpec::name() const {
  if (family == Family::sl)
    return "sl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
  return "osp(" + std::to_string(m) + "|" + std::to_string(2 * n) + ")";
}

bool Weight::is_constant() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const ExponentForm& c) { return c.is_constant(); });
}

Weight& Weight::operator+=(const Weight& rhs) {
  if (coords.size() != rhs.coords.size())
    raise(Errc::internal_error, "weight dimension mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += rhs.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& rhs) {
  if (coords.size() != rhs.coords.size())
    raise(Errc::internal_error, "weight dimension mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= rhs.coords[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& scale) {
  for (auto& c : coords) c *= scale;
  return *this;
}

Weight Weight::operator-() const {
  Weight out = *this;
  out *= Rational(-1);
  return out;
}

Weight Weight::scaled_by(const ExponentForm& factor) const {
  Weight out(dim());
  for (int i = 0; i < dim(); ++i)
    out.coords[i] = ExponentForm::affine_product(factor, coords[i]);
  return out;
}

Weight WeylElement::apply(const Weight& x) const {
  if (x.coords.size() != target.size())
    raise(Errc::internal_error, "weyl element applied to wrong dimension");
  Weight out(x.dim());
  for (std::size_t i = 0; i < target.size(); ++i)
    out.coords[target[i]] = Rational(sign[i]) * x.coords[i];
  return out;
}

int RootData::odd_root_count() const {
  return static_cast<int>(
      std::count_if(positive_roots.begin(), positive_roots.end(),
                    [](const Root& r) { return r.odd; }));
}

// ---------------------------------------------------------------------------
// construction

namespace {

Weight basis_vector(int dim, int index, const Rational& value = Rational(1)) {
  Weight w(dim);
  w.coords[index] = ExponentForm(value);
  return w;
}

void validate(const AlgebraSpec& spec) {
  if (spec.m < 1 || spec.n < 1)
    raise(Errc::invalid_spec, spec.name() + ": sizes must be positive");
  if (spec.family == Family::sl && spec.m == spec.n)
    raise(Errc::invalid_spec, spec.name() + ": sl(m|n) requires m != n");
  if (spec.family == Family::osp && spec.m != 2)
    raise(Errc::invalid_spec, spec.name() + ": only osp(2|2n) is supported");
}

void build_sl(RootData& rd) {
  const int m = rd.spec.m, n = rd.spec.n, N = m + n;
  rd.metric.assign(N, 1);
  for (int j = m; j < N; ++j) rd.metric[j] = -1;
  for (int i = 0; i < m; ++i) rd.basis_names.push_back("e" + std::to_string(i + 1));
  for (int j = 0; j < n; ++j) rd.basis_names.push_back("d" + std::to_string(j + 1));

  // even positive roots: eps_i - eps_j and delta_i - delta_j (i < j)
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      rd.positive_roots.push_back({basis_vector(N, i) - basis_vector(N, j), false});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      rd.positive_roots.push_back({basis_vector(N, m + i) - basis_vector(N, m + j), false});
  // odd positive roots: eps_i - delta_j
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      rd.positive_roots.push_back({basis_vector(N, i) - basis_vector(N, m + j), true});

  // 2*rho0 = sum_i (m+1-2i) eps_i + sum_j (n+1-2j) delta_j
  rd.rho0 = Weight(N);
  for (int i = 0; i < m; ++i) rd.rho0.coords[i] = ExponentForm(frac(m - 1 - 2 * i, 2));
  for (int j = 0; j < n; ++j) rd.rho0.coords[m + j] = ExponentForm(frac(n - 1 - 2 * j, 2));
  // rho1 = (n/2) sum eps_i - (m/2) sum delta_j
  rd.rho1 = Weight(N);
  for (int i = 0; i < m; ++i) rd.rho1.coords[i] = ExponentForm(frac(n, 2));
  for (int j = 0; j < n; ++j) rd.rho1.coords[m + j] = ExponentForm(frac(-m, 2));

  // simple roots alpha_i = b_i - b_{i+1} in the combined basis order
  for (int i = 0; i + 1 < N; ++i)
    rd.simple_roots.push_back(basis_vector(N, i) - basis_vector(N, i + 1));

  // fundamental weights: w_k = sum_{i<=k} eps_i (k <= m),
  // w_{m+k} = -sum_{j>k} delta_j (1 <= k <= n-1)
  for (int k = 1; k <= m; ++k) {
    Weight w(N);
    for (int i = 0; i < k; ++i) w.coords[i] = ExponentForm(1L);
    rd.fundamental_weights.push_back(w);
  }
  for (int k = 1; k <= n - 1; ++k) {
    Weight w(N);
    for (int j = k; j < n; ++j) w.coords[m + j] = ExponentForm(-1L);
    rd.fundamental_weights.push_back(w);
  }

  rd.d.assign(N - 1, 1);
  for (int i = m; i < N - 1; ++i) rd.d[i] = -1;
}

void build_osp(RootData& rd) {
  const int n = rd.spec.n, N = 1 + n;
  rd.metric.assign(N, -1);
  rd.metric[0] = 1;
  rd.basis_names.push_back("e1");
  for (int j = 0; j < n; ++j) rd.basis_names.push_back("d" + std::to_string(j + 1));

  // even: delta_i -+ delta_j (i < j) and 2 delta_i
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      rd.positive_roots.push_back({basis_vector(N, 1 + i) - basis_vector(N, 1 + j), false});
      rd.positive_roots.push_back({basis_vector(N, 1 + i) + basis_vector(N, 1 + j), false});
    }
  }
  for (int i = 0; i < n; ++i)
    rd.positive_roots.push_back({basis_vector(N, 1 + i, Rational(2)), false});
  // odd: eps -+ delta_i
  for (int i = 0; i < n; ++i) {
    rd.positive_roots.push_back({basis_vector(N, 0) - basis_vector(N, 1 + i), true});
    rd.positive_roots.push_back({basis_vector(N, 0) + basis_vector(N, 1 + i), true});
  }

  // rho0 = sum_i (n - i + 1) delta_i ; rho1 = n * eps
  rd.rho0 = Weight(N);
  for (int i = 0; i < n; ++i) rd.rho0.coords[1 + i] = ExponentForm(static_cast<long>(n - i));
  rd.rho1 = Weight(N);
  rd.rho1.coords[0] = ExponentForm(static_cast<long>(n));

  // simple roots: eps - delta_1, delta_{i-1} - delta_i, 2 delta_n
  rd.simple_roots.push_back(basis_vector(N, 0) - basis_vector(N, 1));
  for (int i = 2; i <= n; ++i)
    rd.simple_roots.push_back(basis_vector(N, i - 1) - basis_vector(N, i));
  rd.simple_roots.push_back(basis_vector(N, n, Rational(2)));

  // fundamental weights: w_1 = eps, w_{k+1} = eps + delta_1 + ... + delta_k
  for (int k = 0; k <= n; ++k) {
    Weight w(N);
    w.coords[0] = ExponentForm(1L);
    for (int i = 1; i <= k; ++i) w.coords[i] = ExponentForm(1L);
    rd.fundamental_weights.push_back(w);
  }

  rd.d.assign(n + 1, -1);
  rd.d[0] = 1;
  rd.d[n] = -2;
}

}  // namespace

RootData build_root_data(const AlgebraSpec& spec) {
  validate(spec);
  RootData rd;
  rd.spec = spec;
  if (spec.family == Family::sl)
    build_sl(rd);
  else
    build_osp(rd);
  rd.rho = rd.rho0 - rd.rho1;

  const int r = rd.rank();
  // Cartan matrix from the form: a_ij = <alpha_i, alpha_j> / d_i, and the
  // Cartan subalgebra realization h_i = alpha_i / d_i.
  rd.cartan.assign(r, std::vector<long>(r, 0));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      ExponentForm v = pair_weights(rd, rd.simple_roots[i], rd.simple_roots[j]);
      if (!v.is_constant())
        raise(Errc::internal_error, "non-constant Cartan entry");
      Rational a = v.constant_part() / Rational(rd.d[i]);
      rd.cartan[i][j] = to_long(a);
    }
    Weight h = rd.simple_roots[i];
    h *= frac(1, rd.d[i]);
    rd.h_basis.push_back(h);
  }
  return rd;
}

Weight weight_from_label(const RootData& rd, const std::vector<long>& c, const ExponentForm& a) {
  const int r = rd.rank();
  if (static_cast<int>(c.size()) != r - 1)
    raise(Errc::invalid_spec, "label needs " + std::to_string(r - 1) + " entries, got " +
                                  std::to_string(c.size()));
  for (long ci : c)
    if (ci < 0) raise(Errc::negative_label, "label entries must be nonnegative");
  const int s = rd.spec.odd_index();
  Weight w(rd.spec.basis_dim());
  std::size_t next = 0;
  for (int idx = 1; idx <= r; ++idx) {
    const Weight& fw = rd.fundamental_weights[idx - 1];
    if (idx == s) {
      w += fw.scaled_by(a);
    } else {
      Weight scaled = fw;
      scaled *= Rational(c[next++]);
      w += scaled;
    }
  }
  return w;
}

ExponentForm pair_weights(const RootData& rd, const Weight& x, const Weight& y) {
  const int N = rd.spec.basis_dim();
  if (x.dim() != N || y.dim() != N)
    raise(Errc::internal_error, "weight dimension mismatch in pairing");
  Weight first = x;
  if (rd.spec.family == Family::sl) {
    // <x, str> with str = sum(eps) - sum(delta) reduces to the plain
    // coordinate sum, and <str, str> = m - n.
    ExponentForm t;
    for (const auto& c : x.coords) t += c;
    t *= frac(1, rd.spec.m - rd.spec.n);
    for (int i = 0; i < N; ++i) {
      ExponentForm adj = t;
      adj *= Rational(rd.metric[i] == 1 ? 1 : -1);
      first.coords[i] -= adj;
    }
  }
  ExponentForm out;
  for (int i = 0; i < N; ++i) {
    ExponentForm term = ExponentForm::affine_product(first.coords[i], y.coords[i]);
    term *= Rational(rd.metric[i]);
    out += term;
  }
  return out;
}

std::vector<Rational> atypical_values(const RootData& rd, const std::vector<long>& c) {
  // Solve <w_a^c + rho, alpha> = 0 for a over the odd positive roots, with a
  // carried as a formal symbol.
  const int probe = 1;
  Weight shifted = weight_from_label(rd, c, ExponentForm::symbol(probe)) + rd.rho;
  std::set<Rational> values;
  for (const Root& root : rd.positive_roots) {
    if (!root.odd) continue;
    ExponentForm f = pair_weights(rd, shifted, root.weight);
    if (!f.is_affine() || !f.quadratic().empty())
      raise(Errc::internal_error, "odd pairing is not affine in the parameter");
    Rational slope = f.linear_coeff(probe);
    if (slope == 0)
      raise(Errc::internal_error, "odd pairing is independent of the parameter");
    values.insert(-f.constant_part() / slope);
  }
  return {values.begin(), values.end()};
}

bool is_typical(const RootData& rd, const std::vector<long>& c, const Rational& a) {
  auto values = atypical_values(rd, c);
  return std::find(values.begin(), values.end(), a) == values.end();
}

// ---------------------------------------------------------------------------
// Weyl group

namespace {

int permutation_sign(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace

std::vector<WeylElement> weyl_elements(const RootData& rd) {
  std::vector<WeylElement> out;
  const int N = rd.spec.basis_dim();
  if (rd.spec.family == Family::sl) {
    const int m = rd.spec.m, n = rd.spec.n;
    std::vector<int> pe(m), pd(n);
    std::iota(pe.begin(), pe.end(), 0);
    do {
      std::iota(pd.begin(), pd.end(), 0);
      do {
        WeylElement w;
        w.target.resize(N);
        w.sign.assign(N, 1);
        for (int i = 0; i < m; ++i) w.target[i] = pe[i];
        for (int j = 0; j < n; ++j) w.target[m + j] = m + pd[j];
        w.det = permutation_sign(pe) * permutation_sign(pd);
        out.push_back(std::move(w));
      } while (std::next_permutation(pd.begin(), pd.end()));
    } while (std::next_permutation(pe.begin(), pe.end()));
  } else {
    const int n = rd.spec.n;
    std::vector<int> pd(n);
    std::iota(pd.begin(), pd.end(), 0);
    do {
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        WeylElement w;
        w.target.resize(N);
        w.sign.assign(N, 1);
        w.target[0] = 0;
        int det = permutation_sign(pd);
        for (int j = 0; j < n; ++j) {
          w.target[1 + j] = 1 + pd[j];
          if (mask & (1u << j)) {
            w.sign[1 + j] = -1;
            det = -det;
          }
        }
        w.det = det;
        out.push_back(std::move(w));
      }
    } while (std::next_permutation(pd.begin(), pd.end()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON dump

namespace {

nlohmann::json weight_json(const Weight& w, const SymbolTable& table) {
  nlohmann::json coords = nlohmann::json::array();
  for (const auto& c : w.coords) {
    if (c.is_constant())
      coords.push_back(rational_to_string(c.constant_part()));
    else
      coords.push_back(c.to_string(table));
  }
  return coords;
}

}  // namespace

std::string root_data_json(const RootData& rd) {
  const SymbolTable& table = SymbolTable::defaults();
  nlohmann::json j;
  j["family"] = rd.spec.family == Family::sl ? "sl" : "osp";
  j["m"] = rd.spec.m;
  j["n"] = rd.spec.n;
  j["name"] = rd.spec.name();
  j["rank"] = rd.rank();
  j["odd_index"] = rd.spec.odd_index();
  j["basis"] = rd.basis_names;
  j["metric"] = rd.metric;
  nlohmann::json roots = nlohmann::json::array();
  for (const Root& r : rd.positive_roots)
    roots.push_back({{"coords", weight_json(r.weight, table)}, {"parity", r.odd ? 1 : 0}});
  j["positive_roots"] = roots;
  j["rho0"] = weight_json(rd.rho0, table);
  j["rho1"] = weight_json(rd.rho1, table);
  j["rho"] = weight_json(rd.rho, table);
  nlohmann::json fw = nlohmann::json::array();
  for (const Weight& w : rd.fundamental_weights) fw.push_back(weight_json(w, table));
  j["fundamental_weights"] = fw;
  j["cartan"] = rd.cartan;
  j["d"] = rd.d;
  return j.dump(2);
}

}  // namespace superlink
