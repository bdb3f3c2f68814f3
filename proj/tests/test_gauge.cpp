#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "ncgkk/gauge.hpp"

using namespace ncgkk;

namespace {

FluctuationForm random_self_adjoint_form(const ComplexMatrix &dirac, std::mt19937_64 &rng) {
  const auto a = random_hermitian(dirac.rows(), rng), b = random_hermitian(dirac.rows(), rng);
  // w + w* for w = a[D,b]
  const auto op = a * commutator(dirac, b) + (a * commutator(dirac, b)).adjoint();
  return FluctuationForm::from_operator(op);
}

} // namespace

TEST_CASE("self-adjointness is enforced at construction") {
  const ComplexMatrix bad{{0, 1}, {0, 0}};
  CHECK_THROWS_AS(FluctuationForm::from_operator(bad), std::invalid_argument);
  CHECK_NOTHROW(FluctuationForm::from_operator(bad, false));
}

TEST_CASE("gauge elements must be unitary") {
  CHECK_THROWS_AS(GaugeElement::make(ComplexMatrix{{2, 0}, {0, 1}}, GaugeKind::internal, "bad"),
                  std::invalid_argument);
  CHECK_NOTHROW(GaugeElement::make(ComplexMatrix{{0, 1}, {1, 0}}, GaugeKind::internal, "swap"));
}

TEST_CASE("inner fluctuation by zero is the identity") {
  std::mt19937_64 rng(1);
  const auto d = random_hermitian(4, rng);
  CHECK(max_abs_diff(inner_fluctuation(d, FluctuationForm::from_operator(ComplexMatrix(4, 4))), d) == 0.0);
}

TEST_CASE("gauge transform of the fluctuated operator is unitary conjugation") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto d = random_hermitian(5, rng);
    const auto omega = random_self_adjoint_form(d, rng);
    const auto u = GaugeElement::make(random_unitary(5, rng), GaugeKind::internal, "u");
    const auto moved = gauge_transform_field(u, omega, d);
    const auto expect = u.u * inner_fluctuation(d, omega) * u.u.adjoint();
    CHECK(max_abs_diff(inner_fluctuation(d, moved), expect) < 1e-12);
    CHECK(hermiticity_defect(moved.op()) < 1e-12);
  }
}

TEST_CASE("gauge action composes and cancels") {
  std::mt19937_64 rng(3);
  const auto d = random_hermitian(4, rng);
  const auto zero = FluctuationForm::from_operator(ComplexMatrix(4, 4));
  for (int trial = 0; trial < 10; ++trial) {
    const auto omega = random_self_adjoint_form(d, rng);
    const auto u = GaugeElement::make(random_unitary(4, rng), GaugeKind::internal, "u");
    const auto v = GaugeElement::make(random_unitary(4, rng), GaugeKind::internal, "v");
    const auto vu = GaugeElement::make(v.u * u.u, GaugeKind::internal, "vu");
    const auto twice = gauge_transform_field(v, gauge_transform_field(u, omega, d), d);
    CHECK(max_abs_diff(twice.op(), gauge_transform_field(vu, omega, d).op()) < 1e-12);
    const auto ustar = GaugeElement::make(u.u.adjoint(), GaugeKind::internal, "u*");
    CHECK(gauge_transform_field(ustar, gauge_transform_field(u, zero, d), d).op().max_abs() < 1e-12);
  }
}

TEST_CASE("transformed presentation reassembles") {
  std::mt19937_64 rng(4);
  const auto d = random_hermitian(3, rng);
  const auto a = random_hermitian(3, rng), b = random_hermitian(3, rng);
  const auto omega = FluctuationForm::from_presentation(d, {{a, b}}, false);
  CHECK(omega.has_presentation());
  const auto u = GaugeElement::make(random_unitary(3, rng), GaugeKind::internal, "u");
  const auto moved = gauge_transform_field(u, omega, d);
  CHECK(max_abs_diff(moved.assemble(d), moved.op()) < 1e-12);
}

TEST_CASE("GWS Higgs extraction on the worked cases") {
  const Complex z1(0.5, -1.0), z2(2.0, 0.25);
  const auto I2 = ComplexMatrix::identity(2);
  const auto h1 = gws_higgs(1.0, I2, 0.0, I2, z1, z2);
  CHECK(h1.phi1 == z1);
  CHECK(h1.phi2 == z2);
  const auto h2 = gws_higgs(1.0, I2, 1.0, I2, z1, z2);
  CHECK(h2.phi1 == Complex(0));
  CHECK(h2.phi2 == Complex(0));
  const auto h3 = gws_higgs(1.0, I2, 0.0, ComplexMatrix::diagonal({2, 3}), z1, z2);
  CHECK(h3.phi1 == 2.0 * z1);
  CHECK(h3.phi2 == 3.0 * z2);
}

TEST_CASE("GWS Higgs matrix is a[T,c] and block-off-diagonal") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 10; ++trial) {
    const Complex z1(g(rng), g(rng)), z2(g(rng), g(rng)), lam(g(rng), g(rng)), lamp(g(rng), g(rng));
    const auto m = random_hermitian(2, rng), mp = random_unitary(2, rng);
    const auto h = gws_higgs(lam, m, lamp, mp, z1, z2);
    const FiniteTriple t{z1, z2};
    const auto a = FiniteTriple::represent(lam, m), c = FiniteTriple::represent(lamp, mp);
    CHECK(max_abs_diff(h.matrix, a * commutator(t.operator_matrix(), c)) < 1e-13);
    CHECK(diagonal_block_norm(h.matrix) == 0.0);
    const Complex phi1 = lam * (z1 * mp(0, 0) + z2 * mp(1, 0) - lamp * z1);
    const Complex phi2 = lam * (z1 * mp(0, 1) + z2 * mp(1, 1) - lamp * z2);
    CHECK(std::abs(h.phi1 - phi1) < 1e-13);
    CHECK(std::abs(h.phi2 - phi2) < 1e-13);
  }
}

TEST_CASE("finite Dirac operator is Hermitian") {
  const FiniteTriple t{Complex(1, 2), Complex(-0.5, 3)};
  CHECK(hermiticity_defect(t.operator_matrix()) == 0.0);
}

TEST_CASE("torus shifts perturb the Dirac operator on the interior") {
  const auto t = build_nc_torus(6, 0.3, 2);
  CHECK(perturbation_residual(t.dirac.matrix, t.u1.matrix, t.dirac) < 1e-10);
  CHECK(perturbation_residual(t.dirac.matrix, t.u2.matrix, t.dirac) < 1e-10);
  CHECK(perturbation_residual(t.dirac.matrix, t.u1.matrix * t.u2.matrix, t.dirac) < 1e-10);
}

TEST_CASE("dual action") {
  const double theta = 0.3;
  const int N = 4;
  const auto g0 = torus_dual_action(0, theta, N);
  CHECK(max_abs_diff(g0.u, ComplexMatrix::identity(g0.u.rows())) == 0.0);
  CHECK(g0.kind == GaugeKind::extended);
  const auto g = torus_dual_action(1, theta, N);
  CHECK(unitarity_defect(g.u) < 1e-14);
  const auto t = build_nc_torus(N, theta, 1);
  const auto rotated = g.u * t.u1.matrix * g.u.adjoint();
  const Complex phase = std::polar(1.0, 2 * std::numbers::pi * theta);
  CHECK(interior_norm(rotated - phase * t.u1.matrix, t.u1) < 1e-12);
  CHECK(interior_norm(g.u * t.u2.matrix * g.u.adjoint() - t.u2.matrix, t.u2) < 1e-12);
}

TEST_CASE("conjugated commutator stays bounded as the box grows") {
  const double theta = 0.3;
  double first = 0;
  for (int N : {4, 8}) {
    const auto t = build_nc_torus(N, theta, 2);
    const auto g = torus_dual_action(1, theta, N);
    const double v = conjugated_commutator_norm(t, g, t.u1.matrix * t.u2.matrix);
    if (N == 4)
      first = v;
    else
      CHECK(v == doctest::Approx(first));
  }
}
