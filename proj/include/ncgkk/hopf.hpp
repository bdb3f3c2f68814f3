#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "ncgkk/star_algebra.hpp"

namespace ncgkk {

// Unnormalized column of weight-n monomials a^{n-k} b^k (starred for n < 0)
// with integer weights C(|n|, k). The normalized column has entries
// sqrt(weight_k) · entry_k.
struct IsometryColumn {
  int n = 0;
  std::vector<NormalFormElement> entries;
  std::vector<Integer> weights;

  static IsometryColumn build(int n);
  std::size_t size() const { return entries.size(); }
};

// A section of the spinor bundle twisted by a line bundle: plus has weight
// base_weight + 1, minus has weight base_weight - 1.
struct SpinorSection {
  NormalFormElement plus;
  NormalFormElement minus;
  int base_weight = 0;

  // Throws std::invalid_argument when a component has the wrong weight.
  void validate() const;
  friend bool operator==(const SpinorSection &, const SpinorSection &) = default;
};

// plus is the coefficient of the raising form, minus of the lowering form.
struct OneFormSection {
  NormalFormElement plus;
  NormalFormElement minus;

  bool is_zero() const { return plus.is_zero() && minus.is_zero(); }
  friend bool operator==(const OneFormSection &, const OneFormSection &) = default;
  friend OneFormSection operator+(const OneFormSection &x, const OneFormSection &y) {
    return {x.plus + y.plus, x.minus + y.minus};
  }
  friend OneFormSection operator-(const OneFormSection &x, const OneFormSection &y) {
    return {x.plus - y.plus, x.minus - y.minus};
  }
};

// df = raise(f)·σ₊ + lower(f)·σ₋.
OneFormSection exterior_derivative(const NormalFormElement &f,
                                   const DerivationTable &table = DerivationTable::standard());

// Bimodule structure on one-forms. Moving an algebra element past σ₋
// costs l^{charge}, past σ₊ costs l^{-charge}.
OneFormSection left_act(const NormalFormElement &f, const OneFormSection &w);
OneFormSection right_act(const OneFormSection &w, const NormalFormElement &g);

// w*·e as a diagonal 2×2 matrix: {lowering-lowering entry, raising-raising entry}.
std::array<NormalFormElement, 2> pair_forms(const OneFormSection &w, const OneFormSection &e);

NormalFormElement psi_gram(int n);

// Raising and lowering components of the derivative of each column entry.
struct CommutatorColumn {
  AlgebraMatrix plus;
  AlgebraMatrix minus;
};
CommutatorColumn d0_commutator_column(int n, const DerivationTable &table = DerivationTable::standard());

// Σ_k weight_k · entry_k* · d(entry_k); vanishes identically.
OneFormSection psi_d0_pairing(int n, const DerivationTable &table = DerivationTable::standard());

// Σ_k weight_k · d(entry_k)* d(entry_k) as a 2×2 matrix over the algebra.
AlgebraMatrix d0_gram(int n, const DerivationTable &table = DerivationTable::standard());

// P W P = P for P_{kl} = entry_k entry_l*, W = diag(weights).
bool projection_idempotent(int n);

struct BinomialReport {
  int nmax = 0;
  std::size_t identities_checked = 0;
  std::size_t aggregations_checked = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

// The five binomial identities for 0 ≤ k ≤ n ≤ nmax, and for 2 ≤ n ≤ nmax
// the split of Σ_k weight_k |d(entry_k)|² into four polynomial parts:
// the two boundary-and-interior parts add up to n, the other two to 0.
BinomialReport binomial_identity_check(int nmax);

// Coefficients of the Grassmann connection ∇_n f pulled back through the column,
// computed as Σ_l weight_l · entry_l* · d(entry_l · f).
OneFormSection grassmann_apply(int n, const NormalFormElement &f,
                               const DerivationTable &table = DerivationTable::standard());

bool connection_agreement_check(int n, const NormalFormElement &f,
                                const DerivationTable &table = DerivationTable::standard());

// ∇(fg) = ∇(f)·g + f·dg for g of weight 0.
bool connection_leibniz_check(int n, const NormalFormElement &f, const NormalFormElement &g,
                              const DerivationTable &table = DerivationTable::standard());

// Vertical part of the product operator: the number operator on f tensored
// with the spinor grading.
SpinorSection vertical_apply(const NormalFormElement &f, const SpinorSection &s);

// f ⊗ s ↦ Tf ⊗ Γ₀s + (∇f)s + f ⊗ (D₀ - 1/2)s, read in the plus/minus slots of f·s.
// f homogeneous, s of base weight 0.
SpinorSection hopf_product_apply(const NormalFormElement &f, const SpinorSection &s,
                                 const DerivationTable &table = DerivationTable::standard());

// (iZ₁γ¹ + Z₊σ₊ + Z₋σ₋ + shift) applied slotwise, iZ₁ being the weight operator.
SpinorSection dirac_apply(const SpinorSection &psi, long shift,
                          const DerivationTable &table = DerivationTable::standard());

struct FactorizationReport {
  std::size_t samples = 0;
  // product operator vs direct operator with the +1 shift
  std::size_t shifted_failures = 0;
  // product operator vs direct operator with the -1 shift
  std::size_t corrected_failures = 0;
  // 1 ⊗_∇ (D₀ - 1/2) vs Z₊σ₊ + Z₋σ₋
  std::size_t horizontal_failures = 0;
  std::string first_shifted_witness;
  std::string first_corrected_witness;
  std::string first_horizontal_witness;
};

// Monomials x^j a^p b^r with 2j + |p| + |r| ≤ max_degree.
std::vector<NormalFormElement> monomials_up_to_degree(int max_degree);

// Every monomial f with |weight| ≤ max_weight paired with every monomial
// spinor s of base weight 0, all of degree ≤ max_degree.
FactorizationReport factorization_check(int max_weight, int max_degree,
                                        const DerivationTable &table = DerivationTable::standard());

} // namespace ncgkk
