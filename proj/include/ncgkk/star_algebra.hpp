#pragma once

#include <array>
#include <complex>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ncgkk {

using Integer = mpz_class;
using Rational = mpq_class;

Integer binomial(long n, long k);

// Element of Q[i].
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(long v) : re(v) {}
  Gaussian(Rational r) : re(std::move(r)) {}
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  Gaussian conj() const { return {re, -im}; }
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
  std::string to_string() const;

  friend bool operator==(const Gaussian &a, const Gaussian &b) { return a.re == b.re && a.im == b.im; }
  friend Gaussian operator+(const Gaussian &a, const Gaussian &b) { return {a.re + b.re, a.im + b.im}; }
  friend Gaussian operator-(const Gaussian &a, const Gaussian &b) { return {a.re - b.re, a.im - b.im}; }
  friend Gaussian operator*(const Gaussian &a, const Gaussian &b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
};

// Laurent polynomial in a formal unimodular half-phase l, with q = l^2.
// Conjugation sends l to l^-1 and i to -i.
class PhaseScalar {
public:
  PhaseScalar() = default;
  PhaseScalar(long v);
  PhaseScalar(const Rational &v);
  PhaseScalar(const Gaussian &v);

  static PhaseScalar l_power(int e, const Gaussian &c = Gaussian(1));
  static PhaseScalar q_power(int k) { return l_power(2 * k); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Gaussian> &terms() const { return terms_; }

  PhaseScalar conj() const;
  // Multiply by l^e.
  PhaseScalar shifted(int e) const;
  // Value at l = e^{iπθ}.
  std::complex<double> evaluate(double theta) const;
  std::string to_string() const;

  PhaseScalar &operator+=(const PhaseScalar &o);
  PhaseScalar &operator-=(const PhaseScalar &o);
  friend PhaseScalar operator+(PhaseScalar a, const PhaseScalar &b) { return a += b; }
  friend PhaseScalar operator-(PhaseScalar a, const PhaseScalar &b) { return a -= b; }
  friend PhaseScalar operator*(const PhaseScalar &a, const PhaseScalar &b);
  friend PhaseScalar operator-(const PhaseScalar &a) { return PhaseScalar() - a; }
  friend bool operator==(const PhaseScalar &a, const PhaseScalar &b) { return a.terms_ == b.terms_; }

private:
  void add(int e, const Gaussian &c);
  std::map<int, Gaussian> terms_;
};

// x^x · a^a · b^b with signed parts: a^p means (a*)^{-p} for p < 0, same for b.
struct MonomialKey {
  int x = 0;
  int a = 0;
  int b = 0;

  int weight() const { return a + b; }
  // Degree under the second circle action; drives all l-twists.
  int charge() const { return a - b; }
  auto operator<=>(const MonomialKey &) const = default;
};

enum class Letter { a, a_star, b, b_star };

class NormalFormElement {
public:
  using TermMap = std::map<MonomialKey, PhaseScalar>;

  NormalFormElement() = default;
  NormalFormElement(const PhaseScalar &scalar);
  NormalFormElement(long scalar) : NormalFormElement(PhaseScalar(scalar)) {}

  static NormalFormElement monomial(MonomialKey key, const PhaseScalar &coeff = PhaseScalar(1));
  static NormalFormElement generator(Letter l);
  static NormalFormElement central_x() { return monomial({1, 0, 0}); }

  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const MonomialKey &key, const PhaseScalar &coeff);

  // Weight if every term has the same weight; zero counts as any weight.
  std::optional<int> homogeneous_weight() const;
  std::string to_string() const;

  NormalFormElement &operator+=(const NormalFormElement &o);
  NormalFormElement &operator-=(const NormalFormElement &o);
  friend NormalFormElement operator+(NormalFormElement a, const NormalFormElement &b) { return a += b; }
  friend NormalFormElement operator-(NormalFormElement a, const NormalFormElement &b) { return a -= b; }
  friend NormalFormElement operator-(const NormalFormElement &a) { return NormalFormElement() - a; }
  friend NormalFormElement operator*(const PhaseScalar &s, const NormalFormElement &u);
  friend bool operator==(const NormalFormElement &a, const NormalFormElement &b) { return a.terms_ == b.terms_; }

private:
  TermMap terms_;
};

// Product in the deformed algebra: ab = q·ba, ab* = q^-1·b*a, a and b normal,
// a*a + b*b = 1, x = a*a central.
NormalFormElement multiply(const NormalFormElement &u, const NormalFormElement &v);
NormalFormElement operator*(const NormalFormElement &u, const NormalFormElement &v);
// Commutative product (q = 1) on the same monomial basis.
NormalFormElement multiply_classical(const NormalFormElement &u, const NormalFormElement &v);

NormalFormElement normalize(const std::vector<Letter> &word);
NormalFormElement adjoint(const NormalFormElement &u);
NormalFormElement power(const NormalFormElement &u, unsigned k);

// Multiply every term by l^{sign·charge}.
NormalFormElement charge_twist(const NormalFormElement &u, int sign);

// Split into components of fixed weight.
std::map<int, NormalFormElement> weight_components(const NormalFormElement &u);

enum class Derivation { weight, raise, lower };

// Images of a, a*, b, b* under the raising and lowering derivations.
struct DerivationTable {
  std::array<NormalFormElement, 4> raise;
  std::array<NormalFormElement, 4> lower;

  static const DerivationTable &standard();
};

// weight: u ↦ (p+r)·u termwise. raise/lower: the classical Leibniz derivation
// transported through the deformation, so that
//   lower(uv) = l^{-charge v} lower(u) v + l^{charge u} u lower(v)
//   raise(uv) = l^{charge v} raise(u) v + l^{-charge u} u raise(v).
NormalFormElement apply_derivation(Derivation d, const NormalFormElement &u,
                                   const DerivationTable &table = DerivationTable::standard());

// Inverse of NormalFormElement::to_string.
NormalFormElement parse_element(std::string_view text);

class AlgebraMatrix {
public:
  AlgebraMatrix() = default;
  AlgebraMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static AlgebraMatrix column(std::vector<NormalFormElement> entries);
  static AlgebraMatrix diagonal(std::vector<NormalFormElement> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  NormalFormElement &operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const NormalFormElement &operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  AlgebraMatrix adjoint() const;
  friend AlgebraMatrix operator*(const AlgebraMatrix &a, const AlgebraMatrix &b);
  friend bool operator==(const AlgebraMatrix &a, const AlgebraMatrix &b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<NormalFormElement> entries_;
};

} // namespace ncgkk
