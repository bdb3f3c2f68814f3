#include "ncgkk/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace ncgkk {

SpectrumTable SpectrumTable::from_entries(std::string source, std::vector<ExactEntry> raw) {
  std::map<std::int64_t, std::uint64_t> merged;
  for (const auto &e : raw)
    if (e.multiplicity > 0)
      merged[e.twice_value] += e.multiplicity;
  SpectrumTable t;
  t.source = std::move(source);
  for (const auto &[v, m] : merged)
    t.entries.push_back({v, m});
  return t;
}

std::uint64_t SpectrumTable::dimension() const {
  std::uint64_t d = 0;
  for (const auto &e : entries)
    d += e.multiplicity;
  return d;
}

Spectrum SpectrumTable::to_spectrum() const {
  Spectrum s;
  for (const auto &e : entries)
    s.entries.push_back({e.value(), static_cast<std::size_t>(e.multiplicity)});
  return s;
}

SpectrumTable s3_dirac_spectrum(int kmax) {
  if (kmax < 0)
    throw std::invalid_argument("s3_dirac_spectrum: kmax must be nonnegative");
  std::vector<ExactEntry> raw;
  for (std::int64_t k = 0; k <= kmax; ++k) {
    const auto mult = static_cast<std::uint64_t>((k + 1) * (k + 2));
    raw.push_back({2 * k + 3, mult});
    raw.push_back({-(2 * k + 3), mult});
  }
  return SpectrumTable::from_entries("s3", std::move(raw));
}

SpectrumTable d0_invariant_spectrum(int nmax) {
  if (nmax < 0)
    throw std::invalid_argument("d0_invariant_spectrum: nmax must be nonnegative");
  std::vector<ExactEntry> raw;
  for (std::int64_t n = 0; n <= nmax; ++n) {
    const auto mult = static_cast<std::uint64_t>(2 * n + 2);
    raw.push_back({4 * n + 5, mult});
    raw.push_back({-(4 * n + 3), mult});
  }
  return SpectrumTable::from_entries("d0", std::move(raw));
}

SpectrumTable s2_shifted_spectrum(int lmax) {
  if (lmax < 1)
    throw std::invalid_argument("s2_shifted_spectrum: lmax must be at least 1");
  std::vector<ExactEntry> raw;
  for (std::int64_t l = -lmax; l <= lmax; ++l)
    if (l != 0)
      raw.push_back({4 * l + 1, static_cast<std::uint64_t>(2 * std::abs(l))});
  return SpectrumTable::from_entries("s2shifted", std::move(raw));
}

bool exact_multiset_equal(const SpectrumTable &a, const SpectrumTable &b) { return a.entries == b.entries; }

double summability_exponent(const std::vector<std::pair<double, std::uint64_t>> &values) {
  std::map<double, std::uint64_t> by_abs;
  for (const auto &[v, m] : values)
    if (v != 0.0 && m > 0)
      by_abs[std::abs(v)] += m;
  if (by_abs.size() < 20)
    throw std::invalid_argument("summability_exponent: need at least 20 distinct nonzero |eigenvalues|");
  const double zero_mult = [&] {
    double z = 0.0;
    for (const auto &[v, m] : values)
      if (v == 0.0)
        z += static_cast<double>(m);
    return z;
  }();
  std::vector<double> xs, ys;
  double count = zero_mult;
  for (const auto &[lambda, m] : by_abs) {
    count += static_cast<double>(m);
    xs.push_back(std::log(lambda));
    ys.push_back(std::log(count));
  }
  const double mid = 0.5 * (xs.front() + xs.back());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < mid)
      continue;
    ++k;
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double kd = static_cast<double>(k);
  const double denom = kd * sxx - sx * sx;
  if (k < 2 || denom == 0.0)
    throw std::invalid_argument("summability_exponent: degenerate fit window");
  return (kd * sxy - sx * sy) / denom;
}

double summability_exponent(const SpectrumTable &table) {
  std::vector<std::pair<double, std::uint64_t>> values;
  for (const auto &e : table.entries)
    values.emplace_back(e.value(), e.multiplicity);
  return summability_exponent(values);
}

std::string format_half(std::int64_t twice_value) {
  if (twice_value % 2 == 0)
    return std::to_string(twice_value / 2);
  return std::to_string(twice_value) + "/2";
}

std::string table_to_csv(const SpectrumTable &table) {
  std::string out;
  for (const auto &e : table.entries)
    out += format_real(e.value()) + "," + std::to_string(e.multiplicity) + "\n";
  return out;
}

std::string table_to_json(const SpectrumTable &table) {
  auto arr = nlohmann::json::array();
  for (const auto &e : table.entries)
    arr.push_back({format_half(e.twice_value), e.multiplicity});
  return arr.dump();
}

} // namespace ncgkk
