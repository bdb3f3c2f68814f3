#include "ncgkk/torus.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace ncgkk {

namespace {

constexpr double two_pi = 2.0 * M_PI;

std::size_t side(int N) { return static_cast<std::size_t>(2 * N + 1); }

std::size_t mode_index(int N, int m, int n) {
  return static_cast<std::size_t>(m + N) * side(N) + static_cast<std::size_t>(n + N);
}

bool in_box(int N, int m, int n) { return std::abs(m) <= N && std::abs(n) <= N; }

// Matrix on the two-dimensional mode grid: e_{m,n} ↦ f(m,n)·e_{m+a,n+b}.
template <class F> ComplexMatrix mode_operator(int N, int a, int b, F f) {
  const std::size_t d = side(N) * side(N);
  ComplexMatrix out(d, d);
  for (int m = -N; m <= N; ++m)
    for (int n = -N; n <= N; ++n)
      if (in_box(N, m + a, n + b))
        out(mode_index(N, m + a, n + b), mode_index(N, m, n)) = f(m, n);
  return out;
}

TruncatedOperator wrap(ComplexMatrix m, int box, int mode_dims, int spinor_rank, int margin) {
  return {std::move(m), box, mode_dims, spinor_rank, margin};
}

ComplexMatrix torus_gamma1() { return {{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}}; }
ComplexMatrix torus_gamma2() { return {{0.0, 1.0}, {1.0, 0.0}}; }

} // namespace

std::size_t torus_index(int N, int m, int n, int spinor) { return mode_index(N, m, n) * 2 + spinor; }

std::vector<std::size_t> TruncatedOperator::interior_indices() const {
  const int inner = box - margin;
  const std::size_t s = side(box);
  const std::size_t modes = mode_dims == 1 ? s : s * s;
  std::vector<std::size_t> out;
  for (std::size_t mi = 0; mi < modes; ++mi) {
    const int m = static_cast<int>(mi / s) - box;
    const int n = static_cast<int>(mi % s) - box;
    const bool inside = mode_dims == 1 ? std::abs(n) <= inner : (std::abs(m) <= inner && std::abs(n) <= inner);
    if (inside)
      for (int k = 0; k < spinor_rank; ++k)
        out.push_back(mi * static_cast<std::size_t>(spinor_rank) + static_cast<std::size_t>(k));
  }
  return out;
}

TorusModel build_nc_torus(int N, double theta, int margin) {
  if (N < 1)
    throw std::invalid_argument("build_nc_torus: box must be at least 1");
  if (margin < 0 || margin > N)
    throw std::invalid_argument("build_nc_torus: margin must lie in [0, box]");
  TorusModel model;
  model.box = N;
  model.theta = theta;
  model.margin = margin;
  const auto id2 = ComplexMatrix::identity(2);
  auto lift = [&](const ComplexMatrix &modes) { return wrap(kron(modes, id2), N, 2, 2, margin); };

  model.u1 = lift(mode_operator(N, 1, 0, [](int, int) { return Complex(1.0); }));
  model.u2 = lift(mode_operator(N, 0, 1, [&](int m, int) { return std::polar(1.0, -two_pi * theta * m); }));
  const auto d1 = mode_operator(N, 0, 0, [](int m, int) { return Complex(0.0, m); });
  const auto d2 = mode_operator(N, 0, 0, [](int, int n) { return Complex(0.0, n); });
  model.delta1 = lift(d1);
  model.delta2 = lift(d2);
  const Complex i(0.0, 1.0);
  model.dirac = wrap(kron(i * d1, torus_gamma1()) + kron(i * d2, torus_gamma2()), N, 2, 2, margin);
  return model;
}

ComplexMatrix twisted_monomial(const TorusModel &model, FourierMonomial x) {
  const double theta = model.theta;
  const auto modes =
      mode_operator(model.box, x.a, x.b, [&](int m, int) { return std::polar(1.0, -two_pi * theta * x.b * m); });
  return kron(modes, ComplexMatrix::identity(2));
}

Complex star_phase(FourierMonomial x, FourierMonomial y, double theta) {
  return std::polar(1.0, -two_pi * theta * y.a * x.b);
}

double interior_norm(const ComplexMatrix &m, const TruncatedOperator &op) {
  double worst = 0.0;
  for (std::size_t j : op.interior_indices())
    for (std::size_t i = 0; i < m.rows(); ++i)
      worst = std::max(worst, std::abs(m(i, j)));
  return worst;
}

bool star_product_check(FourierMonomial x, FourierMonomial y, const TorusModel &model, double tol) {
  if (std::abs(x.a) + std::abs(y.a) > model.margin || std::abs(x.b) + std::abs(y.b) > model.margin)
    throw std::invalid_argument("star_product_check: combined degree exceeds the margin");
  const auto lhs = twisted_monomial(model, x) * twisted_monomial(model, y);
  const auto rhs = star_phase(x, y, model.theta) * twisted_monomial(model, {x.a + y.a, x.b + y.b});
  return interior_norm(lhs - rhs, model.dirac) <= tol;
}

TruncatedOperator invariant_part_torus(const TorusModel &model) {
  const int N = model.box;
  const std::size_t d = 2 * side(N);
  ComplexMatrix out(d, d);
  for (int n = -N; n <= N; ++n)
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 2; ++t)
        out(static_cast<std::size_t>(n + N) * 2 + s, static_cast<std::size_t>(n + N) * 2 + t) =
            model.dirac.matrix(torus_index(N, 0, n, s), torus_index(N, 0, n, t));
  return wrap(std::move(out), N, 1, 2, model.margin);
}

TruncatedOperator build_circle(int N) {
  if (N < 1)
    throw std::invalid_argument("build_circle: box must be at least 1");
  std::vector<Complex> diag;
  for (int n = -N; n <= N; ++n)
    diag.emplace_back(n);
  return wrap(ComplexMatrix::diagonal(diag), N, 1, 1, 0);
}

TruncatedOperator doubled_circle(int N) {
  return wrap(kron(build_circle(N).matrix, torus_gamma2()), N, 1, 2, 0);
}

TruncatedOperator torus_product_operator(int N) {
  if (N < 1)
    throw std::invalid_argument("torus_product_operator: box must be at least 1");
  const auto number = mode_operator(N, 0, 0, [](int m, int) { return Complex(m); });
  const auto circle = mode_operator(N, 0, 0, [](int, int n) { return Complex(n); });
  const ComplexMatrix sx{{0.0, 1.0}, {1.0, 0.0}};
  const ComplexMatrix sy{{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}};
  return wrap(kron(number, sx) + kron(circle, sy), N, 2, 2, 0);
}

} // namespace ncgkk
