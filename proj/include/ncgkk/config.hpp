#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "ncgkk/star_algebra.hpp"

namespace ncgkk {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  // torus and gauge suites
  int box = 8;
  double theta = 0.25;
  int margin = 2;
  int random_pairs = 20;
  // symbolic and hopf suites
  int nmax = 12;
  int binomial_nmax = 50;
  int factorization_weight = 3;
  int factorization_degree = 3;
  // spectra suite
  int kmax = 200;
  int summability_nmax = 400;
  int equivalence_nmax = 100;
  std::uint64_t seed = 42;

  DerivationTable derivations = DerivationTable::standard();
  bool derivations_overridden = false;

  // Throws ConfigError on out-of-range values.
  void validate() const;
  std::map<std::string, std::string> echo() const;
};

// INI/TOML-style file: [section] headers and key = value lines, '#' comments.
// Sections: torus (box, theta, margin), gauge (random_pairs),
// hopf (nmax, binomial_nmax, factorization_weight, factorization_degree),
// spectra (kmax, summability_nmax, equivalence_nmax), run (seed), and
// derivations with keys raise.<letter> / lower.<letter>, letter one of
// a, a_star, b, b_star, and a quoted element in canonical text form.
// Throws ConfigError on unknown keys or malformed values.
void apply_config_file(Config &config, const std::string &path);

// NCGKK_SEED, when set.
void apply_environment(Config &config);

} // namespace ncgkk
