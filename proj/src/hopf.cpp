#include "ncgkk/hopf.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <utility>

namespace ncgkk {

using NF = NormalFormElement;

IsometryColumn IsometryColumn::build(int n) {
  IsometryColumn col;
  col.n = n;
  const int m = std::abs(n);
  const int sign = n >= 0 ? 1 : -1;
  for (int k = 0; k <= m; ++k) {
    col.entries.push_back(NF::monomial({0, sign * (m - k), sign * k}));
    col.weights.push_back(binomial(m, k));
  }
  return col;
}

void SpinorSection::validate() const {
  auto check = [](const NF &u, int expected, const char *slot) {
    const auto w = u.homogeneous_weight();
    if (!w || (!u.is_zero() && *w != expected))
      throw std::invalid_argument(std::string("SpinorSection: ") + slot + " component must have weight " +
                                  std::to_string(expected));
  };
  check(plus, base_weight + 1, "plus");
  check(minus, base_weight - 1, "minus");
}

OneFormSection exterior_derivative(const NF &f, const DerivationTable &table) {
  return {apply_derivation(Derivation::raise, f, table), apply_derivation(Derivation::lower, f, table)};
}

OneFormSection left_act(const NF &f, const OneFormSection &w) {
  return {charge_twist(f, -1) * w.plus, charge_twist(f, 1) * w.minus};
}

OneFormSection right_act(const OneFormSection &w, const NF &g) {
  return {w.plus * charge_twist(g, 1), w.minus * charge_twist(g, -1)};
}

std::array<NF, 2> pair_forms(const OneFormSection &w, const OneFormSection &e) {
  return {charge_twist(adjoint(w.minus) * e.minus, 1), charge_twist(adjoint(w.plus) * e.plus, -1)};
}

namespace {

PhaseScalar integer_scalar(const Integer &v) { return PhaseScalar(Rational(v)); }

} // namespace

NF psi_gram(int n) {
  const auto col = IsometryColumn::build(n);
  NF sum;
  for (std::size_t k = 0; k < col.size(); ++k)
    sum += integer_scalar(col.weights[k]) * (adjoint(col.entries[k]) * col.entries[k]);
  return sum;
}

CommutatorColumn d0_commutator_column(int n, const DerivationTable &table) {
  if (n == 0)
    throw std::invalid_argument("d0_commutator_column: n must be nonzero");
  const auto col = IsometryColumn::build(n);
  std::vector<NF> plus, minus;
  for (const auto &e : col.entries) {
    const auto d = exterior_derivative(e, table);
    plus.push_back(d.plus);
    minus.push_back(d.minus);
  }
  return {AlgebraMatrix::column(std::move(plus)), AlgebraMatrix::column(std::move(minus))};
}

OneFormSection psi_d0_pairing(int n, const DerivationTable &table) {
  const auto col = IsometryColumn::build(n);
  OneFormSection sum;
  for (std::size_t k = 0; k < col.size(); ++k) {
    const auto term = left_act(adjoint(col.entries[k]), exterior_derivative(col.entries[k], table));
    const auto w = integer_scalar(col.weights[k]);
    sum = sum + OneFormSection{w * term.plus, w * term.minus};
  }
  return sum;
}

AlgebraMatrix d0_gram(int n, const DerivationTable &table) {
  const auto col = IsometryColumn::build(n);
  AlgebraMatrix gram(2, 2);
  for (std::size_t k = 0; k < col.size(); ++k) {
    const auto d = exterior_derivative(col.entries[k], table);
    const auto p = pair_forms(d, d);
    const auto w = integer_scalar(col.weights[k]);
    gram(0, 0) += w * p[0];
    gram(1, 1) += w * p[1];
  }
  return gram;
}

bool projection_idempotent(int n) {
  const auto col = IsometryColumn::build(n);
  const auto psi = AlgebraMatrix::column(col.entries);
  const auto p = psi * psi.adjoint();
  std::vector<NF> w;
  for (const auto &c : col.weights)
    w.emplace_back(integer_scalar(c));
  return p * AlgebraMatrix::diagonal(std::move(w)) * p == p;
}

namespace {

// Polynomials in X = |a|², Y = |b|².
using Bivariate = std::map<std::pair<int, int>, Integer>;
using Univariate = std::map<int, Integer>;

void add_term(Bivariate &p, int i, int j, const Integer &c) {
  if (c == 0)
    return;
  if (i < 0 || j < 0)
    throw std::logic_error("negative exponent with nonzero coefficient");
  auto &slot = p[{i, j}];
  slot += c;
  if (slot == 0)
    p.erase({i, j});
}

Bivariate operator+(Bivariate a, const Bivariate &b) {
  for (const auto &[e, c] : b)
    add_term(a, e.first, e.second, c);
  return a;
}

// Y = 1 - X.
Univariate on_sphere(const Bivariate &p) {
  Univariate out;
  for (const auto &[e, c] : p)
    for (int t = 0; t <= e.second; ++t) {
      Integer term = c * binomial(e.second, t);
      if (t % 2 == 1)
        term = -term;
      auto &slot = out[e.first + t];
      slot += term;
    }
  std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
  return out;
}

Univariate constant(long v) {
  Univariate out;
  if (v != 0)
    out[0] = v;
  return out;
}

Bivariate derivative_expression(long n) {
  Bivariate p;
  for (long k = 0; k <= n; ++k) {
    const Integer c = binomial(n, k);
    add_term(p, n - k - 1, k + 1, c * (n - k) * (n - k));
    add_term(p, n - k + 1, k - 1, c * k * k);
    add_term(p, n - k, k, -2 * c * k * (n - k));
  }
  return p;
}

Bivariate boundary_part(long n) {
  Bivariate p;
  add_term(p, 1, n - 1, n);
  add_term(p, n - 1, 1, n);
  return p;
}

Bivariate interior_part(long n) {
  Bivariate p;
  for (long k = 1; k <= n - 1; ++k) {
    add_term(p, n - k - 1, k + 1, n * binomial(n - 1, k));
    add_term(p, n - k + 1, k - 1, n * binomial(n - 1, k - 1));
  }
  return p;
}

Bivariate second_order_part(long n) {
  Bivariate p;
  for (long k = 0; k <= n; ++k) {
    const Integer c = binomial(n, k);
    add_term(p, n - k - 1, k + 1, c * ((n - k) * (n - k) - (n - k)));
    add_term(p, n - k + 1, k - 1, c * (k * k - k));
  }
  return p;
}

Bivariate cross_part(long n) {
  Bivariate p;
  for (long k = 1; k <= n - 1; ++k)
    add_term(p, n - k, k, -2 * k * (n - k) * binomial(n, k));
  return p;
}

} // namespace

BinomialReport binomial_identity_check(int nmax) {
  if (nmax < 2)
    throw std::invalid_argument("binomial_identity_check: nmax must be at least 2");
  BinomialReport report;
  report.nmax = nmax;
  auto expect = [&](bool ok, const std::string &what, long n, long k) {
    ++report.identities_checked;
    if (!ok)
      report.failures.push_back(what + " at n=" + std::to_string(n) + ", k=" + std::to_string(k));
  };
  for (long n = 0; n <= nmax; ++n)
    for (long k = 0; k <= n; ++k) {
      const Integer c = binomial(n, k);
      if (n >= 1 && k >= 1)
        expect(k * c == n * binomial(n - 1, k - 1), "k*C(n,k) = n*C(n-1,k-1)", n, k);
      if (n >= 1)
        expect((n - k) * c == n * binomial(n - 1, k), "(n-k)*C(n,k) = n*C(n-1,k)", n, k);
      if (n >= 2 && k >= 2)
        expect(k * (k - 1) * c == n * (n - 1) * binomial(n - 2, k - 2), "k(k-1)*C(n,k) = n(n-1)*C(n-2,k-2)", n, k);
      if (n >= 2 && k >= 1 && k <= n - 1)
        expect(k * (n - k) * c == n * (n - 1) * binomial(n - 2, k - 1), "k(n-k)*C(n,k) = n(n-1)*C(n-2,k-1)", n, k);
      if (n >= 2 && k <= n - 2)
        expect((n - k) * (n - k - 1) * c == n * (n - 1) * binomial(n - 2, k),
               "(n-k)(n-k-1)*C(n,k) = n(n-1)*C(n-2,k)", n, k);
    }
  auto aggregate = [&](bool ok, const std::string &what, long n) {
    ++report.aggregations_checked;
    if (!ok)
      report.failures.push_back(what + " at n=" + std::to_string(n));
  };
  for (long n = 2; n <= nmax; ++n) {
    const auto first = boundary_part(n) + interior_part(n);
    const auto rest = second_order_part(n) + cross_part(n);
    aggregate(first + rest == derivative_expression(n), "four parts sum to the derivative expression", n);
    aggregate(on_sphere(first) == constant(n), "boundary and interior parts add up to n", n);
    aggregate(on_sphere(rest).empty(), "second-order and cross parts add up to 0", n);
    aggregate(on_sphere(derivative_expression(n)) == constant(n), "derivative expression equals n", n);
  }
  return report;
}

OneFormSection grassmann_apply(int n, const NF &f, const DerivationTable &table) {
  const auto w = f.homogeneous_weight();
  if (!w || (!f.is_zero() && *w != -n))
    throw std::invalid_argument("grassmann_apply: f must be homogeneous of weight " + std::to_string(-n));
  const auto col = IsometryColumn::build(n);
  OneFormSection sum;
  for (std::size_t l = 0; l < col.size(); ++l) {
    const auto term = left_act(adjoint(col.entries[l]), exterior_derivative(col.entries[l] * f, table));
    const auto c = integer_scalar(col.weights[l]);
    sum = sum + OneFormSection{c * term.plus, c * term.minus};
  }
  return sum;
}

bool connection_agreement_check(int n, const NF &f, const DerivationTable &table) {
  return grassmann_apply(n, f, table) == exterior_derivative(f, table);
}

bool connection_leibniz_check(int n, const NF &f, const NF &g, const DerivationTable &table) {
  const auto wg = g.homogeneous_weight();
  if (!wg || (!g.is_zero() && *wg != 0))
    throw std::invalid_argument("connection_leibniz_check: g must have weight 0");
  const auto lhs = grassmann_apply(n, f * g, table);
  const auto rhs = right_act(grassmann_apply(n, f, table), g) + left_act(f, exterior_derivative(g, table));
  return lhs == rhs;
}

namespace {

int weight_of(const NF &f) {
  const auto w = f.homogeneous_weight();
  if (!w)
    throw std::invalid_argument("hopf_product_apply: f must be homogeneous");
  return *w;
}

PhaseScalar int_scalar(long v) { return PhaseScalar(v); }

} // namespace

SpinorSection vertical_apply(const NF &f, const SpinorSection &s) {
  s.validate();
  const int n = weight_of(f);
  return {int_scalar(n) * (f * s.plus), int_scalar(-n) * (f * s.minus), n + s.base_weight};
}

namespace {

// (∇f)s + f ⊗ (D₀ - 1/2)s in the slots of f·s.
SpinorSection horizontal_apply(const NF &f, int n, const SpinorSection &s, const DerivationTable &table) {
  const auto eta = grassmann_apply(-n, f, table);
  const auto conn_plus = right_act({eta.plus, NF()}, s.minus).plus;
  const auto conn_minus = right_act({NF(), eta.minus}, s.plus).minus;
  const OneFormSection ds{apply_derivation(Derivation::raise, s.minus, table),
                          apply_derivation(Derivation::lower, s.plus, table)};
  const auto fd = left_act(f, ds);
  return {conn_plus + fd.plus, conn_minus + fd.minus, n};
}

} // namespace

SpinorSection hopf_product_apply(const NF &f, const SpinorSection &s, const DerivationTable &table) {
  s.validate();
  if (s.base_weight != 0)
    throw std::invalid_argument("hopf_product_apply: s must have base weight 0");
  const int n = weight_of(f);
  const auto vert = vertical_apply(f, s);
  const auto hor = horizontal_apply(f, n, s, table);
  return {vert.plus + hor.plus, vert.minus + hor.minus, n};
}

SpinorSection dirac_apply(const SpinorSection &psi, long shift, const DerivationTable &table) {
  psi.validate();
  const int w = psi.base_weight;
  return {int_scalar(w + 1 + shift) * psi.plus + apply_derivation(Derivation::raise, psi.minus, table),
          int_scalar(-(w - 1) + shift) * psi.minus + apply_derivation(Derivation::lower, psi.plus, table), w};
}

std::vector<NF> monomials_up_to_degree(int max_degree) {
  std::vector<NF> out;
  for (int j = 0; 2 * j <= max_degree; ++j)
    for (int p = -max_degree; p <= max_degree; ++p)
      for (int r = -max_degree; r <= max_degree; ++r)
        if (2 * j + std::abs(p) + std::abs(r) <= max_degree)
          out.push_back(NF::monomial({j, p, r}));
  return out;
}

namespace {

std::string describe(const NF &f, const SpinorSection &s, const SpinorSection &residual) {
  return "f = " + f.to_string() + "; s = (" + s.plus.to_string() + ", " + s.minus.to_string() +
         "); residual = (" + residual.plus.to_string() + ", " + residual.minus.to_string() + ")";
}

SpinorSection difference(const SpinorSection &x, const SpinorSection &y) {
  return {x.plus - y.plus, x.minus - y.minus, x.base_weight};
}

bool is_zero(const SpinorSection &s) { return s.plus.is_zero() && s.minus.is_zero(); }

} // namespace

FactorizationReport factorization_check(int max_weight, int max_degree, const DerivationTable &table) {
  FactorizationReport report;
  const auto monomials = monomials_up_to_degree(max_degree);
  std::vector<SpinorSection> spinors;
  for (const auto &m : monomials) {
    const int w = *m.homogeneous_weight();
    if (w == 1)
      spinors.push_back({m, NF(), 0});
    else if (w == -1)
      spinors.push_back({NF(), m, 0});
  }
  for (const auto &f : monomials) {
    const int n = *f.homogeneous_weight();
    if (std::abs(n) > max_weight)
      continue;
    for (const auto &s : spinors) {
      ++report.samples;
      const SpinorSection psi{f * s.plus, f * s.minus, n};
      const auto product = hopf_product_apply(f, s, table);

      const auto shifted = difference(product, dirac_apply(psi, 1, table));
      if (!is_zero(shifted) && report.shifted_failures++ == 0)
        report.first_shifted_witness = describe(f, s, shifted);

      const auto corrected = difference(product, dirac_apply(psi, -1, table));
      if (!is_zero(corrected) && report.corrected_failures++ == 0)
        report.first_corrected_witness = describe(f, s, corrected);

      const auto hor = horizontal_apply(f, n, s, table);
      const SpinorSection direct{apply_derivation(Derivation::raise, psi.minus, table),
                                 apply_derivation(Derivation::lower, psi.plus, table), n};
      const auto hdiff = difference(hor, direct);
      if (!is_zero(hdiff) && report.horizontal_failures++ == 0)
        report.first_horizontal_witness = describe(f, s, hdiff);
    }
  }
  return report;
}

} // namespace ncgkk
