#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "ncgkk/numeric.hpp"
#include "ncgkk/star_algebra.hpp"

using namespace ncgkk;
using NF = NormalFormElement;

namespace {

NF mono(int x, int a, int b, long c = 1) { return NF::monomial({x, a, b}, PhaseScalar(c)); }

// Clock and shift matrices: UV = ωVU with ω = e^{2πi/k}. Taking a = cU, b = sV
// with c² + s² = 1 gives a representation at q = ω, i.e. θ = 1/k.
struct ClockShiftRep {
  int k;
  double c, s;
  ComplexMatrix A, B;

  ClockShiftRep(int k_, double t) : k(k_), c(std::cos(t)), s(std::sin(t)), A(k_, k_), B(k_, k_) {
    for (int j = 0; j < k; ++j) {
      A(j, j) = c * std::polar(1.0, 2 * std::numbers::pi * j / k);
      B((j + 1) % k, j) = s;
    }
  }
  double theta() const { return 1.0 / k; }

  ComplexMatrix pow(const ComplexMatrix &m, int p) const {
    auto r = ComplexMatrix::identity(k);
    const auto base = p >= 0 ? m : m.adjoint();
    for (int i = 0; i < std::abs(p); ++i)
      r = r * base;
    return r;
  }

  ComplexMatrix operator()(const NF &u) const {
    ComplexMatrix r(k, k);
    for (const auto &[key, coeff] : u.terms()) {
      const Complex scale = coeff.evaluate(theta()) * std::pow(c * c, key.x);
      r += scale * (pow(A, key.a) * pow(B, key.b));
    }
    return r;
  }
};

NF random_element(std::mt19937_64 &rng, int terms = 3) {
  std::uniform_int_distribution<int> xd(0, 2), pd(-3, 3), cd(-4, 4);
  NF u;
  for (int i = 0; i < terms; ++i)
    u += mono(xd(rng), pd(rng), pd(rng), cd(rng));
  return u;
}

} // namespace

TEST_CASE("binomial coefficients follow Pascal's rule") {
  for (long n = 1; n <= 60; ++n)
    for (long k = 1; k < n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  CHECK(binomial(50, 25) == Integer("126410606437752"));
  CHECK(binomial(5, 7) == 0);
}

TEST_CASE("phase scalars") {
  const auto l = PhaseScalar::l_power(1);
  CHECK(l * l == PhaseScalar::q_power(1));
  CHECK(l.conj() * l == PhaseScalar(1));
  CHECK((l + PhaseScalar(2)).to_string() == "{(2) + (1)l^1}");
  const double theta = 0.2;
  CHECK(std::abs(PhaseScalar::q_power(1).evaluate(theta) - std::polar(1.0, 2 * std::numbers::pi * theta)) < 1e-15);
  CHECK(PhaseScalar(Gaussian(0, 1)).conj() == PhaseScalar(Gaussian(0, -1)));
}

TEST_CASE("defining relations") {
  const auto a = NF::generator(Letter::a), as = NF::generator(Letter::a_star);
  const auto b = NF::generator(Letter::b), bs = NF::generator(Letter::b_star);
  const auto q = PhaseScalar::q_power(1), qi = PhaseScalar::q_power(-1);
  CHECK(a * b == q * (b * a));
  CHECK(a * bs == qi * (bs * a));
  CHECK(a * as == as * a);
  CHECK(b * bs == bs * b);
  CHECK(as * a + bs * b == NF(1));
  CHECK(as * a == NF::central_x());
  CHECK(bs * b == NF(1) - NF::central_x());
}

TEST_CASE("multiplication agrees with the clock-shift representation") {
  const ClockShiftRep rep(5, 0.7);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto u = random_element(rng), v = random_element(rng);
    CHECK(max_abs_diff(rep(u * v), rep(u) * rep(v)) < 1e-10);
    CHECK(max_abs_diff(rep(adjoint(u)), rep(u).adjoint()) < 1e-10);
  }
}

TEST_CASE("multiplication is associative and the adjoint is an antihomomorphism") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto u = random_element(rng), v = random_element(rng), w = random_element(rng);
    CHECK((u * v) * w == u * (v * w));
    CHECK(adjoint(u * v) == adjoint(v) * adjoint(u));
    CHECK(adjoint(adjoint(u)) == u);
  }
}

TEST_CASE("classical product is commutative") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto u = random_element(rng), v = random_element(rng);
    CHECK(multiply_classical(u, v) == multiply_classical(v, u));
  }
}

TEST_CASE("x is central") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const auto u = random_element(rng);
    CHECK(NF::central_x() * u == u * NF::central_x());
  }
}

TEST_CASE("normal form of words is independent of bracketing") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> letter(0, 3), len(1, 8);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Letter> word(len(rng));
    for (auto &l : word)
      l = static_cast<Letter>(letter(rng));
    NF left(1), right(1);
    for (auto l : word)
      left = left * NF::generator(l);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      right = NF::generator(*it) * right;
    CHECK(normalize(word) == left);
    CHECK(normalize(word) == right);
  }
}

TEST_CASE("text form round-trips") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const auto u = random_element(rng) * NF(PhaseScalar::l_power(3, Gaussian(1, 2)));
    CHECK(parse_element(u.to_string()) == u);
  }
  CHECK(mono(1, 2, -1, 3).to_string() == "3 * x^1 * a^2 * b^-1");
  CHECK(NF().to_string() == "0");
  CHECK_THROWS(parse_element("3 * y^2"));
}

TEST_CASE("derivations on generators") {
  using D = Derivation;
  const auto a = NF::generator(Letter::a), b = NF::generator(Letter::b);
  CHECK(apply_derivation(D::lower, a) == mono(0, 0, -1, 2));
  CHECK(apply_derivation(D::lower, b) == mono(0, -1, 0, -2));
  CHECK(apply_derivation(D::raise, adjoint(a)) == mono(0, 0, 1, -2));
  CHECK(apply_derivation(D::raise, adjoint(b)) == mono(0, 1, 0, 2));
  CHECK(apply_derivation(D::raise, a).is_zero());
  CHECK(apply_derivation(D::lower, adjoint(b)).is_zero());
  CHECK(apply_derivation(D::weight, mono(2, 3, -1, 5)) == mono(2, 3, -1, 10));
}

TEST_CASE("derivations obey the charge-twisted Leibniz rule") {
  std::mt19937_64 rng(23);
  const auto tw = [](const NF &u, int s) {
    NF out;
    for (const auto &[k, c] : u.terms())
      out.add_term(k, c.shifted(s * k.charge()));
    return out;
  };
  for (int trial = 0; trial < 30; ++trial) {
    const auto u = NF::monomial({0, 1, -2}) + mono(1, 1, -2, 3);
    std::uniform_int_distribution<int> xd(0, 2), pd(-3, 3);
    const auto v = mono(xd(rng), pd(rng), pd(rng), 2);
    // lower(uv) = l^{-h(v)} lower(u) v + l^{h(u)} u lower(v), u and v homogeneous in charge
    const int hu = u.terms().begin()->first.charge();
    const int hv = v.terms().begin()->first.charge();
    const auto lower_uv = apply_derivation(Derivation::lower, u * v);
    const auto expect = PhaseScalar::l_power(-hv) * (apply_derivation(Derivation::lower, u) * v) +
                        PhaseScalar::l_power(hu) * (u * apply_derivation(Derivation::lower, v));
    CHECK(lower_uv == expect);
    const auto raise_uv = apply_derivation(Derivation::raise, u * v);
    const auto expect_r = PhaseScalar::l_power(hv) * (apply_derivation(Derivation::raise, u) * v) +
                          PhaseScalar::l_power(-hu) * (u * apply_derivation(Derivation::raise, v));
    CHECK(raise_uv == expect_r);
    CHECK(charge_twist(u, 1) == tw(u, 1));
  }
}

TEST_CASE("derivations at q = 1 reduce to the classical vector fields") {
  // Classically Z₋ = 2b*∂_a - 2a*∂_b on polynomials in a, b; check on a²b.
  const auto f = mono(0, 2, 1);
  const auto lower = apply_derivation(Derivation::lower, f);
  const auto at_one = [](const NF &u) {
    NF r;
    for (const auto &[k, c] : u.terms())
      r.add_term(k, PhaseScalar(Gaussian(Rational(c.evaluate(0.0).real()), Rational(c.evaluate(0.0).imag()))));
    return r;
  };
  // 2b*·2ab - 2a*·a² = 4a(1-x) - 2xa
  const auto expect = mono(0, 1, 0, 4) - mono(1, 1, 0, 4) - mono(1, 1, 0, 2);
  CHECK(at_one(lower) == expect);
}

TEST_CASE("raise and lower are exchanged by the adjoint") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const auto u = random_element(rng);
    CHECK(apply_derivation(Derivation::raise, adjoint(u)) == -adjoint(apply_derivation(Derivation::lower, u)));
  }
}

TEST_CASE("weight components and powers") {
  const auto u = mono(0, 1, 0) + mono(0, 0, -1) + mono(1, 2, 0);
  const auto parts = weight_components(u);
  REQUIRE(parts.size() == 3);
  CHECK(parts.at(-1) == mono(0, 0, -1));
  CHECK(power(NF::generator(Letter::a), 3) == mono(0, 3, 0));
  CHECK(power(u, 0) == NF(1));
  CHECK(u.homogeneous_weight() == std::nullopt);
  CHECK(mono(3, 2, -1).homogeneous_weight() == 1);
}

TEST_CASE("algebra matrices") {
  const auto col = AlgebraMatrix::column({NF::generator(Letter::a), NF::generator(Letter::b)});
  const auto gram = col.adjoint() * col;
  REQUIRE(gram.rows() == 1);
  CHECK(gram(0, 0) == NF(1));
  CHECK(AlgebraMatrix::diagonal({NF(1), NF(2)}) == AlgebraMatrix::diagonal({NF(1), NF(2)}));
}
