#pragma once

#include <string>
#include <vector>

#include "ncgkk/config.hpp"
#include "ncgkk/report.hpp"

namespace ncgkk {

// Algebra relations, derivation properties, and the per-n column identities.
VerificationReport run_symbolic_suite(const Config &config);
// Binomial sums, projections, connections, and the product-operator identity.
VerificationReport run_hopf_suite(const Config &config);
// Truncated torus: spectra, deformation relations, invariant part.
VerificationReport run_torus_suite(const Config &config);
// Closed-form spectra, equivalence, summability.
VerificationReport run_spectra_suite(const Config &config);
// Fluctuations, gauge action, finite triple, dual action.
VerificationReport run_gauge_suite(const Config &config);

const std::vector<std::string> &suite_names();

// One of suite_names() or "all". Throws std::invalid_argument otherwise.
VerificationReport run_suite(const std::string &name, const Config &config);

} // namespace ncgkk
