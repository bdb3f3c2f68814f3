#include "doctest.h"

#include "ncgkk/hopf.hpp"

using namespace ncgkk;
using NF = NormalFormElement;

namespace {

NF mono(int x, int a, int b, long c = 1) { return NF::monomial({x, a, b}, PhaseScalar(c)); }
const NF A = NF::generator(Letter::a), As = NF::generator(Letter::a_star);
const NF B = NF::generator(Letter::b), Bs = NF::generator(Letter::b_star);

NF direct_gram(int n) {
  const auto col = IsometryColumn::build(n);
  NF sum;
  for (std::size_t k = 0; k < col.size(); ++k)
    sum += PhaseScalar(Rational(col.weights[k])) * (adjoint(col.entries[k]) * col.entries[k]);
  return sum;
}

} // namespace

TEST_CASE("isometry column layout") {
  const auto c = IsometryColumn::build(3);
  REQUIRE(c.size() == 4);
  CHECK(c.entries[1] == mono(0, 2, 1));
  CHECK(c.weights[1] == 3);
  const auto m = IsometryColumn::build(-2);
  CHECK(m.entries[0] == mono(0, -2, 0));
  CHECK(m.entries[2] == mono(0, 0, -2));
  CHECK(IsometryColumn::build(0).entries[0] == NF(1));
}

TEST_CASE("columns are normalized") {
  for (int n = -8; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(psi_gram(n) == NF(1));
    CHECK(direct_gram(n) == NF(1));
  }
}

TEST_CASE("derivative columns for n = 1 and n = -1") {
  const auto c1 = d0_commutator_column(1);
  CHECK(c1.minus(0, 0) == PhaseScalar(2) * Bs);
  CHECK(c1.minus(1, 0) == PhaseScalar(-2) * As);
  CHECK(c1.plus(0, 0).is_zero());
  CHECK(c1.plus(1, 0).is_zero());
  const auto cm = d0_commutator_column(-1);
  CHECK(cm.plus(0, 0) == PhaseScalar(-2) * B);
  CHECK(cm.plus(1, 0) == PhaseScalar(2) * A);
  CHECK(cm.minus(0, 0).is_zero());
}

TEST_CASE("derivative column for n = 2 agrees with a direct Leibniz expansion") {
  const auto c2 = d0_commutator_column(2);
  const auto twisted = apply_derivation(Derivation::lower, A * B);
  CHECK(c2.minus(1, 0) == twisted);
  // at q = 1: Z₋(ab) = 2b*b - 2aa* = 2(1 - x) - 2x
  NF at_one;
  for (const auto &[k, c] : twisted.terms())
    at_one.add_term(k, PhaseScalar(Rational(c.evaluate(0.0).real())));
  CHECK(at_one == NF(2) - mono(1, 0, 0, 4));
}

TEST_CASE("column paired with its derivative vanishes") {
  for (int n : {1, 2, -3, 5, -7})
    CHECK(psi_d0_pairing(n).is_zero());
}

TEST_CASE("derivative Gram matrix has one surviving slot equal to 4|n|") {
  CHECK(d0_gram(1) == AlgebraMatrix::diagonal({NF(4), NF(0)}));
  CHECK(d0_gram(3) == AlgebraMatrix::diagonal({NF(12), NF(0)}));
  CHECK(d0_gram(-2) == AlgebraMatrix::diagonal({NF(0), NF(8)}));
}

TEST_CASE("projection is idempotent in weighted form") {
  for (int n = -4; n <= 4; ++n)
    CHECK(projection_idempotent(n));
}

TEST_CASE("binomial identities and aggregation sums") {
  // 2·10 = 5·4, 2·6 = 12·1, 2 = 2·1
  CHECK(2 * binomial(5, 2) == 5 * binomial(4, 1));
  CHECK(2 * 1 * binomial(4, 2) == 4 * 3 * binomial(2, 0));
  CHECK(1 * 1 * binomial(2, 1) == 2 * 1 * binomial(0, 0));
  const auto r = binomial_identity_check(20);
  CHECK(r.passed());
  // five identities per (n, k) with 0 ≤ k ≤ n ≤ 20, four sums per n in [2, 20]
  CHECK(r.identities_checked > 0);
  CHECK(r.aggregations_checked == 4 * 19);
}

TEST_CASE("Grassmann connection on small examples") {
  const auto w = grassmann_apply(-1, A);
  CHECK(w.plus.is_zero());
  CHECK(w.minus == PhaseScalar(2) * Bs);
  CHECK(grassmann_apply(0, NF(1)).is_zero());
  CHECK(grassmann_apply(0, NF::central_x()) == exterior_derivative(NF::central_x()));
  const auto ab = grassmann_apply(-2, A * B);
  CHECK(ab.plus.is_zero());
  CHECK(ab.minus == apply_derivation(Derivation::lower, A * B));
  CHECK(connection_agreement_check(-1, A));
  CHECK(connection_agreement_check(0, NF::central_x()));
  CHECK(connection_agreement_check(2, As * As));
  CHECK_THROWS_AS(grassmann_apply(1, A), std::invalid_argument);
}

TEST_CASE("connection Leibniz rule over weight-0 elements") {
  CHECK(connection_leibniz_check(-1, A, NF::central_x()));
  CHECK(connection_leibniz_check(-2, A * B, A * Bs));
  CHECK(connection_leibniz_check(3, As * Bs * Bs, B * As + NF::central_x()));
}

TEST_CASE("one-form bimodule and pairing") {
  const auto w = exterior_derivative(A);
  CHECK(w.plus.is_zero());
  CHECK(w.minus == PhaseScalar(2) * Bs);
  // a commutes with da; a* da is central
  CHECK(left_act(A, w) == right_act(w, A));
  const auto ada = left_act(As, w);
  CHECK(left_act(B, ada) == right_act(ada, B));
  const auto p = pair_forms(w, w);
  CHECK(p[0] == PhaseScalar(4) * (NF(1) - NF::central_x()));
  CHECK(p[1].is_zero());
}

TEST_CASE("product operator on f = 1, s = (a, a*)") {
  const SpinorSection s{A, As, 0};
  const auto product = hopf_product_apply(NF(1), s);
  CHECK(product.plus == PhaseScalar(-2) * B);
  CHECK(product.minus == PhaseScalar(2) * Bs);
  CHECK(product == dirac_apply(s, -1));
  const auto plus_one = dirac_apply(s, 1);
  CHECK(plus_one.plus == PhaseScalar(2) * A - PhaseScalar(2) * B);
}

TEST_CASE("product operator on f = a², s = (a, a*)") {
  const SpinorSection s{A, As, 0};
  const auto f = A * A;
  const SpinorSection psi{f * A, f * As, 2};
  const auto vert = vertical_apply(f, s);
  CHECK(vert.plus == mono(0, 3, 0, 2));
  CHECK(vert.minus == mono(1, 1, 0, -2));
  const auto product = hopf_product_apply(f, s);
  CHECK(product == dirac_apply(psi, -1));
  const auto plus_one = dirac_apply(psi, 1);
  CHECK(plus_one.plus - product.plus == PhaseScalar(2) * psi.plus);
  CHECK(plus_one.minus - product.minus == PhaseScalar(2) * psi.minus);
}

TEST_CASE("zero section maps to zero") {
  const SpinorSection zero{NF(), NF(), 0};
  const auto p = hopf_product_apply(A, zero);
  CHECK(p.plus.is_zero());
  CHECK(p.minus.is_zero());
}

TEST_CASE("spinor sections validate their weights") {
  CHECK_THROWS_AS((SpinorSection{As, A, 0}.validate()), std::invalid_argument);
  CHECK_NOTHROW((SpinorSection{A, As, 0}.validate()));
}

TEST_CASE("factorization sweep over small degrees") {
  const auto r = factorization_check(2, 2);
  CHECK(r.samples > 0);
  CHECK(r.corrected_failures == 0);
  CHECK(r.horizontal_failures == 0);
  // the +1 shift is off by 2·section on every nonzero sample
  CHECK(r.shifted_failures == r.samples);
}

TEST_CASE("a corrupted derivation table breaks the identities") {
  auto table = DerivationTable::standard();
  table.lower[static_cast<std::size_t>(Letter::b)] = PhaseScalar(-3) * As;
  CHECK_FALSE(d0_gram(1, table) == AlgebraMatrix::diagonal({NF(4), NF(0)}));
  CHECK_FALSE(psi_d0_pairing(1, table).is_zero());
}
