#pragma once

#include <string>
#include <vector>

#include "ncgkk/numeric.hpp"
#include "ncgkk/torus.hpp"

namespace ncgkk {

inline constexpr double kSelfAdjointTolerance = 1e-12;

// One summand a·[D, b] of a one-form.
struct GeneratorPair {
  ComplexMatrix a;
  ComplexMatrix b;
};

// ω = Σ a_j [D, b_j], kept together with its presentation when one is known.
class FluctuationForm {
public:
  // Throws std::invalid_argument when declared self-adjoint but not Hermitian
  // within kSelfAdjointTolerance.
  static FluctuationForm from_presentation(const ComplexMatrix &dirac, std::vector<GeneratorPair> terms,
                                           bool self_adjoint = true);
  static FluctuationForm from_operator(ComplexMatrix op, bool self_adjoint = true);
  // Operator with a presentation that is not re-assembled here.
  static FluctuationForm from_parts(ComplexMatrix op, std::vector<GeneratorPair> terms, bool self_adjoint = true);

  const ComplexMatrix &op() const { return op_; }
  const std::vector<GeneratorPair> &presentation() const { return terms_; }
  bool has_presentation() const { return !terms_.empty(); }
  bool self_adjoint() const { return self_adjoint_; }

  // Σ a_j [D, b_j] recomputed from the presentation.
  ComplexMatrix assemble(const ComplexMatrix &dirac) const;

private:
  ComplexMatrix op_;
  std::vector<GeneratorPair> terms_;
  bool self_adjoint_ = true;
};

enum class GaugeKind { internal, extended };

struct GaugeElement {
  ComplexMatrix u;
  GaugeKind kind = GaugeKind::internal;
  std::string descriptor;

  // Throws std::invalid_argument unless u u* = u* u = 1 within tol.
  static GaugeElement make(ComplexMatrix u, GaugeKind kind, std::string descriptor, double tol = 1e-12);
};

// D + ω.
ComplexMatrix inner_fluctuation(const ComplexMatrix &dirac, const FluctuationForm &omega);

// ω ↦ uωu* + u[D, u*]. The presentation is carried along as
// (u a_j, b_j u*), (-u a_j b_j, u*), (u, u*).
FluctuationForm gauge_transform_field(const GaugeElement &u, const FluctuationForm &omega, const ComplexMatrix &dirac);

// Largest interior entry of uDu* - (D + u[D, u*]).
double perturbation_residual(const ComplexMatrix &dirac, const ComplexMatrix &u, const TruncatedOperator &shape);

// Finite triple with algebra C ⊕ M₂(C) acting on C ⊕ C².
struct FiniteTriple {
  Complex z1;
  Complex z2;

  // [[0, z1, z2], [conj z1, 0, 0], [conj z2, 0, 0]]
  ComplexMatrix operator_matrix() const;
  static ComplexMatrix represent(Complex lambda, const ComplexMatrix &m);
};

struct HiggsField {
  Complex phi1;
  Complex phi2;
  ComplexMatrix matrix; // a[T, c]
};

// a[T, c] for a = diag(λ, m), c = diag(λ', m'); top row λ((z₁,z₂)m' - λ'(z₁,z₂)).
HiggsField gws_higgs(Complex lambda, const ComplexMatrix &m, Complex lambda_p, const ComplexMatrix &m_p, Complex z1,
                     Complex z2);

// Largest entry in the diagonal blocks of the 1 ⊕ 2 decomposition.
double diagonal_block_norm(const ComplexMatrix &m);

// diag(e^{2πiθnm}) on the torus basis of box N, m the first mode index.
GaugeElement torus_dual_action(int n, double theta, int N);

// Largest interior entry of [-iδ₁, g u g*]; stays bounded as the box grows
// when g normalizes the internal gauge group.
double conjugated_commutator_norm(const TorusModel &model, const GaugeElement &g, const ComplexMatrix &u);

} // namespace ncgkk
