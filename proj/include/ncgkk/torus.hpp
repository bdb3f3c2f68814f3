#pragma once

#include <cstddef>
#include <vector>

#include "ncgkk/numeric.hpp"

namespace ncgkk {

// Operator on a box of Fourier modes |m|, |n| ≤ box (one or two mode
// directions) tensored with C^spinor_rank. Basis index is
// mode_index · spinor_rank + spinor, modes ordered lexicographically.
struct TruncatedOperator {
  ComplexMatrix matrix;
  int box = 0;
  int mode_dims = 2;
  int spinor_rank = 2;
  int margin = 0;

  std::size_t dimension() const { return matrix.rows(); }
  // Basis indices whose modes all lie within box - margin.
  std::vector<std::size_t> interior_indices() const;
};

std::size_t torus_index(int N, int m, int n, int spinor);

struct TorusModel {
  int box = 0;
  double theta = 0.0;
  int margin = 0;
  TruncatedOperator u1;     // shift m ↦ m + 1
  TruncatedOperator u2;     // twisted shift n ↦ n + 1 with phase e^{-2πiθm}
  TruncatedOperator delta1; // i·m
  TruncatedOperator delta2; // i·n
  TruncatedOperator dirac;  // per-mode block [[0, im - n], [-im - n, 0]]
};

TorusModel build_nc_torus(int N, double theta, int margin);

// U₁^a U₂^b
struct FourierMonomial {
  int a = 0;
  int b = 0;
};

// Left twist of a monomial: e_{m,n} ↦ e^{-2πiθ·b·m} e_{m+a,n+b}, zero outside the box.
ComplexMatrix twisted_monomial(const TorusModel &model, FourierMonomial x);

// Phase c with x ⋆ y = c·xy.
Complex star_phase(FourierMonomial x, FourierMonomial y, double theta);

// Largest entry of the columns of m at the interior indices of op.
double interior_norm(const ComplexMatrix &m, const TruncatedOperator &op);

// L(x)L(y) = L(x ⋆ y) on interior vectors. Throws std::invalid_argument when
// the combined degree exceeds the margin.
bool star_product_check(FourierMonomial x, FourierMonomial y, const TorusModel &model, double tol = 1e-12);

// Restriction of the Dirac operator to the m = 0 modes.
TruncatedOperator invariant_part_torus(const TorusModel &model);

// e_n ↦ n·e_n for |n| ≤ N.
TruncatedOperator build_circle(int N);
// [[0, C], [C, 0]] for the circle operator C, spinor index fastest.
TruncatedOperator doubled_circle(int N);

// Per-mode block [[0, m - in], [m + in, 0]]: number operator in m tensored
// with the circle operator in n, in odd⊗odd form.
TruncatedOperator torus_product_operator(int N);

} // namespace ncgkk
