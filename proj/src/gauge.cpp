#include "ncgkk/gauge.hpp"

#include <cmath>
#include <stdexcept>

namespace ncgkk {

namespace {

void require_square(const ComplexMatrix &m, std::size_t dim, const char *what) {
  if (m.rows() != dim || m.cols() != dim)
    throw std::invalid_argument(std::string(what) + ": shape mismatch");
}

void require_self_adjoint(const ComplexMatrix &m, const char *what) {
  if (hermiticity_defect(m) > kSelfAdjointTolerance)
    throw std::invalid_argument(std::string(what) + ": operator is not self-adjoint");
}

} // namespace

FluctuationForm FluctuationForm::from_presentation(const ComplexMatrix &dirac, std::vector<GeneratorPair> terms,
                                                   bool self_adjoint) {
  FluctuationForm f;
  f.terms_ = std::move(terms);
  f.self_adjoint_ = self_adjoint;
  f.op_ = f.assemble(dirac);
  if (self_adjoint)
    require_self_adjoint(f.op_, "FluctuationForm");
  return f;
}

FluctuationForm FluctuationForm::from_parts(ComplexMatrix op, std::vector<GeneratorPair> terms,
                                           bool self_adjoint) {
  FluctuationForm f = from_operator(std::move(op), self_adjoint);
  f.terms_ = std::move(terms);
  return f;
}

FluctuationForm FluctuationForm::from_operator(ComplexMatrix op, bool self_adjoint) {
  FluctuationForm f;
  f.op_ = std::move(op);
  f.self_adjoint_ = self_adjoint;
  if (self_adjoint)
    require_self_adjoint(f.op_, "FluctuationForm");
  return f;
}

ComplexMatrix FluctuationForm::assemble(const ComplexMatrix &dirac) const {
  ComplexMatrix sum(dirac.rows(), dirac.cols());
  for (const auto &t : terms_)
    sum += t.a * commutator(dirac, t.b);
  return sum;
}

GaugeElement GaugeElement::make(ComplexMatrix u, GaugeKind kind, std::string descriptor, double tol) {
  if (!u.is_square())
    throw std::invalid_argument("GaugeElement: matrix must be square");
  if (unitarity_defect(u) > tol)
    throw std::invalid_argument("GaugeElement: matrix is not unitary");
  return {std::move(u), kind, std::move(descriptor)};
}

ComplexMatrix inner_fluctuation(const ComplexMatrix &dirac, const FluctuationForm &omega) {
  require_square(omega.op(), dirac.rows(), "inner_fluctuation");
  require_square(dirac, dirac.rows(), "inner_fluctuation");
  require_self_adjoint(omega.op(), "inner_fluctuation");
  auto result = dirac + omega.op();
  require_self_adjoint(result, "inner_fluctuation");
  return result;
}

FluctuationForm gauge_transform_field(const GaugeElement &u, const FluctuationForm &omega,
                                      const ComplexMatrix &dirac) {
  require_square(u.u, dirac.rows(), "gauge_transform_field");
  require_square(omega.op(), dirac.rows(), "gauge_transform_field");
  if (unitarity_defect(u.u) > 1e-12)
    throw std::invalid_argument("gauge_transform_field: u is not unitary");
  const auto us = u.u.adjoint();
  const auto op = u.u * omega.op() * us + u.u * commutator(dirac, us);
  if (!omega.has_presentation())
    return FluctuationForm::from_operator(op, omega.self_adjoint());
  std::vector<GeneratorPair> terms;
  for (const auto &t : omega.presentation()) {
    terms.push_back({u.u * t.a, t.b * us});
    terms.push_back({Complex(-1.0) * (u.u * t.a * t.b), us});
  }
  terms.push_back({u.u, us});
  return FluctuationForm::from_parts(op, std::move(terms), omega.self_adjoint());
}

double perturbation_residual(const ComplexMatrix &dirac, const ComplexMatrix &u, const TruncatedOperator &shape) {
  const auto us = u.adjoint();
  const auto lhs = u * dirac * us;
  const auto rhs = dirac + u * commutator(dirac, us);
  return interior_norm(lhs - rhs, shape);
}

ComplexMatrix FiniteTriple::operator_matrix() const {
  return {{0.0, z1, z2}, {std::conj(z1), 0.0, 0.0}, {std::conj(z2), 0.0, 0.0}};
}

ComplexMatrix FiniteTriple::represent(Complex lambda, const ComplexMatrix &m) {
  require_square(m, 2, "FiniteTriple::represent");
  ComplexMatrix r(3, 3);
  r(0, 0) = lambda;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      r(i + 1, j + 1) = m(i, j);
  return r;
}

HiggsField gws_higgs(Complex lambda, const ComplexMatrix &m, Complex lambda_p, const ComplexMatrix &m_p, Complex z1,
                     Complex z2) {
  const FiniteTriple triple{z1, z2};
  const auto a = FiniteTriple::represent(lambda, m);
  const auto c = FiniteTriple::represent(lambda_p, m_p);
  auto field = a * commutator(triple.operator_matrix(), c);
  return {field(0, 1), field(0, 2), std::move(field)};
}

double diagonal_block_norm(const ComplexMatrix &m) {
  require_square(m, 3, "diagonal_block_norm");
  double worst = std::abs(m(0, 0));
  for (std::size_t i = 1; i < 3; ++i)
    for (std::size_t j = 1; j < 3; ++j)
      worst = std::max(worst, std::abs(m(i, j)));
  return worst;
}

GaugeElement torus_dual_action(int n, double theta, int N) {
  if (N < 1)
    throw std::invalid_argument("torus_dual_action: box must be at least 1");
  std::vector<Complex> diag;
  const int per_m = 2 * (2 * N + 1);
  for (int m = -N; m <= N; ++m)
    diag.insert(diag.end(), per_m, std::polar(1.0, 2.0 * M_PI * theta * n * m));
  return GaugeElement::make(ComplexMatrix::diagonal(diag), GaugeKind::extended,
                            "dual action n=" + std::to_string(n));
}

double conjugated_commutator_norm(const TorusModel &model, const GaugeElement &g, const ComplexMatrix &u) {
  const auto number = Complex(0.0, -1.0) * model.delta1.matrix;
  const auto conjugated = g.u * u * g.u.adjoint();
  return interior_norm(commutator(number, conjugated), model.dirac);
}

} // namespace ncgkk
