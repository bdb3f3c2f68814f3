#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ncgkk/numeric.hpp"

namespace ncgkk {

// Eigenvalue twice_value / 2 with its multiplicity.
struct ExactEntry {
  std::int64_t twice_value = 0;
  std::uint64_t multiplicity = 0;

  double value() const { return static_cast<double>(twice_value) / 2.0; }
  friend bool operator==(const ExactEntry &, const ExactEntry &) = default;
};

// Exact half-integer spectrum, sorted ascending with distinct eigenvalues.
struct SpectrumTable {
  std::string source;
  std::vector<ExactEntry> entries;

  // Merges repeated eigenvalues, drops zero multiplicities, sorts.
  static SpectrumTable from_entries(std::string source, std::vector<ExactEntry> raw);
  std::uint64_t dimension() const;
  Spectrum to_spectrum() const;
};

// ±(k + 3/2) with multiplicity (k+1)(k+2), 0 ≤ k ≤ kmax.
SpectrumTable s3_dirac_spectrum(int kmax);
// 2n + 5/2 and -(2n + 3/2), each with multiplicity 2n + 2, 0 ≤ n ≤ nmax.
SpectrumTable d0_invariant_spectrum(int nmax);
// 2ℓ + 1/2 with multiplicity 2|ℓ|, 1 ≤ |ℓ| ≤ lmax.
SpectrumTable s2_shifted_spectrum(int lmax);

// Same eigenvalues with the same multiplicities; no tolerance.
bool exact_multiset_equal(const SpectrumTable &a, const SpectrumTable &b);

// Least-squares slope of log N(Λ) against log Λ, N(Λ) = Σ_{|λ| ≤ Λ} mult,
// sampled at the distinct |λ| in the upper half of the log Λ range.
// Throws std::invalid_argument with fewer than 20 distinct nonzero |λ|.
double summability_exponent(const std::vector<std::pair<double, std::uint64_t>> &values);
double summability_exponent(const SpectrumTable &table);

// "5/2", "-3/2", "2".
std::string format_half(std::int64_t twice_value);
std::string table_to_csv(const SpectrumTable &table);
std::string table_to_json(const SpectrumTable &table);

} // namespace ncgkk
