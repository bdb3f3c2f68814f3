#include "ncgkk/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace ncgkk {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto &row : rows) {
    if (row.size() != cols_)
      throw std::invalid_argument("ComplexMatrix: ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex> &diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i)
    m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      m(j, i) = std::conj((*this)(i, j));
  return m;
}

Complex ComplexMatrix::trace() const {
  if (!is_square())
    throw std::invalid_argument("trace: matrix is not square");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto &z : data_)
    m = std::max(m, std::abs(z));
  return m;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix difference: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex s) {
  for (auto &z : data_)
    z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product: shape mismatch");
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{0.0, 0.0})
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) += aik * b(k, j);
    }
  return c;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
  ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return c;
}

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) { return a * b - b * a; }

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) { return (a - b).max_abs(); }

double hermiticity_defect(const ComplexMatrix &m) {
  if (!m.is_square())
    throw std::invalid_argument("hermiticity_defect: matrix is not square");
  double d = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
  return d;
}

double unitarity_defect(const ComplexMatrix &u) {
  if (!u.is_square())
    throw std::invalid_argument("unitarity_defect: matrix is not square");
  const auto id = ComplexMatrix::identity(u.rows());
  return std::max(max_abs_diff(u * u.adjoint(), id), max_abs_diff(u.adjoint() * u, id));
}

std::size_t Spectrum::dimension() const {
  std::size_t d = 0;
  for (const auto &e : entries)
    d += e.multiplicity;
  return d;
}

std::vector<double> Spectrum::expanded() const {
  std::vector<double> v;
  v.reserve(dimension());
  for (const auto &e : entries)
    v.insert(v.end(), e.multiplicity, e.value);
  return v;
}

double default_merge_tolerance(const ComplexMatrix &m) { return 1e-9 * std::max(1.0, m.max_abs()); }

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> double & { return a[i * n + j]; };
  if (n == 1)
    return {a[0]};

  constexpr int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    double diag = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      diag += at(p, p) * at(p, p);
      for (std::size_t q = p + 1; q < n; ++q)
        off += at(p, q) * at(p, q);
    }
    if (off == 0.0 || off <= 1e-32 * diag)
      break;
    const double threshold = sweep < 3 ? 0.2 * std::sqrt(off) / static_cast<double>(n * n) : 0.0;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        const double g = 100.0 * std::abs(apq);
        if (sweep > 3 && std::abs(at(p, p)) + g == std::abs(at(p, p)) &&
            std::abs(at(q, q)) + g == std::abs(at(q, q))) {
          at(p, q) = 0.0;
          at(q, p) = 0.0;
          continue;
        }
        if (std::abs(apq) <= threshold || apq == 0.0)
          continue;

        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0)
          t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q)
            continue;
          const double akp = at(k, p);
          const double akq = at(k, q);
          const double nkp = akp - s * (akq + tau * akp);
          const double nkq = akq + s * (akp - tau * akq);
          at(k, p) = nkp;
          at(p, k) = nkp;
          at(k, q) = nkq;
          at(q, k) = nkq;
        }
      }
    }
  }

  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i)
    ev[i] = at(i, i);
  return ev;
}

namespace {

std::size_t find_root(std::vector<std::size_t> &parent, std::size_t i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

std::vector<std::vector<std::size_t>> connected_blocks(const ComplexMatrix &m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m(i, j) != Complex{0.0, 0.0} || m(j, i) != Complex{0.0, 0.0}) {
        const auto ri = find_root(parent, i);
        const auto rj = find_root(parent, j);
        if (ri != rj)
          parent[std::max(ri, rj)] = std::min(ri, rj);
      }
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::ptrdiff_t> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = find_root(parent, i);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::ptrdiff_t>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(slot[r])].push_back(i);
  }
  return blocks;
}

} // namespace

Spectrum make_spectrum(std::vector<double> values, double tol) {
  std::sort(values.begin(), values.end());
  Spectrum s;
  s.tolerance = tol;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i + 1;
    double sum = values[i];
    while (j < values.size() && values[j] - values[j - 1] <= tol) {
      sum += values[j];
      ++j;
    }
    s.entries.push_back({sum / static_cast<double>(j - i), j - i});
    i = j;
  }
  return s;
}

Spectrum hermitian_eigenvalues(const ComplexMatrix &m, std::optional<double> tol) {
  if (!m.is_square())
    throw std::invalid_argument("hermitian_eigenvalues: matrix is not square");
  const double merge_tol = tol.value_or(default_merge_tolerance(m));
  if (hermiticity_defect(m) > merge_tol)
    throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian within tolerance");

  std::vector<double> values;
  values.reserve(m.rows());
  for (const auto &block : connected_blocks(m)) {
    const std::size_t k = block.size();
    const std::size_t n2 = 2 * k;
    std::vector<double> emb(n2 * n2, 0.0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        // Symmetrize so the embedding is exactly symmetric.
        const Complex z = 0.5 * (m(block[i], block[j]) + std::conj(m(block[j], block[i])));
        emb[i * n2 + j] = z.real();
        emb[(i + k) * n2 + (j + k)] = z.real();
        emb[i * n2 + (j + k)] = -z.imag();
        emb[(i + k) * n2 + j] = z.imag();
      }
    auto ev = jacobi_eigenvalues(std::move(emb), n2);
    std::sort(ev.begin(), ev.end());
    // Every eigenvalue of the embedding appears twice.
    for (std::size_t i = 0; i < n2; i += 2)
      values.push_back(0.5 * (ev[i] + ev[i + 1]));
  }
  return make_spectrum(std::move(values), merge_tol);
}

bool spectrum_multiset_equal(const Spectrum &s1, const Spectrum &s2, double tol) {
  const auto a = s1.expanded();
  const auto b = s2.expanded();
  if (a.size() != b.size())
    return false;
  // Sorted order is an optimal matching on the real line.
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol)
      return false;
  return true;
}

std::string format_real(double v) {
  if (v == 0.0)
    v = 0.0; // drop negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string spectrum_to_csv(const Spectrum &s) {
  std::string out;
  for (const auto &e : s.entries)
    out += format_real(e.value) + "," + std::to_string(e.multiplicity) + "\n";
  return out;
}

std::string spectrum_to_json(const Spectrum &s) {
  auto arr = nlohmann::json::array();
  for (const auto &e : s.entries)
    arr.push_back({e.value, e.multiplicity});
  return arr.dump();
}

std::array<ComplexMatrix, 3> clifford_generators() {
  const Complex i{0.0, 1.0};
  return {ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}, ComplexMatrix{{0.0, -i}, {i, 0.0}},
          ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}};
}

ComplexMatrix sigma_plus() { return ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}; }
ComplexMatrix sigma_minus() { return ComplexMatrix{{0.0, 0.0}, {1.0, 0.0}}; }

ComplexMatrix random_unitary(std::size_t n, std::mt19937_64 &rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  auto u = ComplexMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Complex> v(n);
    double norm2 = 0.0;
    for (auto &z : v) {
      z = {gauss(rng), gauss(rng)};
      norm2 += std::norm(z);
    }
    // H = I - 2 v v* / |v|^2
    ComplexMatrix h = ComplexMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        h(i, j) -= 2.0 * v[i] * std::conj(v[j]) / norm2;
    u = h * u;
  }
  std::vector<Complex> phases(n);
  for (auto &z : phases)
    z = std::polar(1.0, angle(rng));
  return ComplexMatrix::diagonal(phases) * u;
}

ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64 &rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = gauss(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = {gauss(rng), gauss(rng)};
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

} // namespace ncgkk
