#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace ncgkk {

using Complex = std::complex<double>;

// Dense complex matrix, row-major.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const std::vector<Complex> &diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Complex> &data() const { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double max_abs() const;

  ComplexMatrix &operator+=(const ComplexMatrix &other);
  ComplexMatrix &operator-=(const ComplexMatrix &other);
  ComplexMatrix &operator*=(Complex s);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);

// (A⊗B)[(i,k),(j,l)] = A[i,j]·B[k,l]
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b);
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
double hermiticity_defect(const ComplexMatrix &m);
double unitarity_defect(const ComplexMatrix &u);

struct SpectrumEntry {
  double value;
  std::size_t multiplicity;
};

// Sorted eigenvalue multiset; entries closer than `tolerance` were merged.
struct Spectrum {
  std::vector<SpectrumEntry> entries;
  double tolerance = 0.0;

  std::size_t dimension() const;
  std::vector<double> expanded() const;
};

double default_merge_tolerance(const ComplexMatrix &m);

// Cyclic Jacobi on the real-symmetric embedding [[Re,-Im],[Im,Re]], run
// separately on each connected block of the nonzero pattern.
Spectrum hermitian_eigenvalues(const ComplexMatrix &m, std::optional<double> tol = std::nullopt);

// Eigenvalues of a real symmetric matrix (row-major n×n), unsorted.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n);

Spectrum make_spectrum(std::vector<double> values, double tol);
bool spectrum_multiset_equal(const Spectrum &s1, const Spectrum &s2, double tol);

std::string format_real(double v);
std::string spectrum_to_csv(const Spectrum &s);
std::string spectrum_to_json(const Spectrum &s);

// γ¹ = diag(1,-1), γ² = [[0,-i],[i,0]], γ³ = [[0,1],[1,0]].
std::array<ComplexMatrix, 3> clifford_generators();
ComplexMatrix sigma_plus();
ComplexMatrix sigma_minus();

ComplexMatrix random_unitary(std::size_t n, std::mt19937_64 &rng);
ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64 &rng);

} // namespace ncgkk
