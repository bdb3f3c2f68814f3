#include "ncgkk/suites.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <stdexcept>

#include "ncgkk/gauge.hpp"
#include "ncgkk/hopf.hpp"
#include "ncgkk/numeric.hpp"
#include "ncgkk/spectra.hpp"
#include "ncgkk/torus.hpp"

namespace ncgkk {

namespace {

using NF = NormalFormElement;

std::string n_label(int n) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "n=%+03d", n);
  return buf;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

NF gen(Letter l) { return NF::generator(l); }

constexpr Letter kLetters[] = {Letter::a, Letter::a_star, Letter::b, Letter::b_star};

std::vector<Letter> random_word(std::mt19937_64 &rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), pick(0, 3);
  std::vector<Letter> w(static_cast<std::size_t>(len(rng)));
  for (auto &l : w)
    l = kLetters[pick(rng)];
  return w;
}

NF word_product(const std::vector<Letter> &w, std::size_t lo, std::size_t hi) {
  NF u(1);
  for (std::size_t i = lo; i < hi; ++i)
    u = u * gen(w[i]);
  return u;
}

// Random element: up to three monomials with small Gaussian coefficients and half-phases.
NF random_element(std::mt19937_64 &rng, int degree) {
  std::uniform_int_distribution<int> terms(1, 3), part(-degree, degree), xp(0, 1), coeff(-3, 3), phase(-2, 2);
  NF u;
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    const Gaussian c(Rational(coeff(rng), 2), Rational(coeff(rng)));
    u.add_term({xp(rng), part(rng), part(rng)}, PhaseScalar::l_power(phase(rng), c));
  }
  return u;
}

std::vector<NF> derivation_samples(std::mt19937_64 &rng) {
  std::vector<NF> out;
  for (auto l : kLetters)
    out.push_back(gen(l));
  out.push_back(gen(Letter::a) * gen(Letter::b_star));
  out.push_back(gen(Letter::a) * gen(Letter::b) * gen(Letter::b));
  for (int i = 0; i < 12; ++i)
    out.push_back(random_element(rng, 2) * random_element(rng, 2));
  return out;
}

std::string first_nonzero(const std::vector<std::pair<std::string, NF>> &residuals) {
  for (const auto &[label, r] : residuals)
    if (!r.is_zero())
      return label + ": " + r.to_string();
  return "";
}

NF Zp(const NF &u, const DerivationTable &t) { return apply_derivation(Derivation::raise, u, t); }
NF Zm(const NF &u, const DerivationTable &t) { return apply_derivation(Derivation::lower, u, t); }
NF Tw(const NF &u) { return apply_derivation(Derivation::weight, u); }

template <class F> VerificationReport timed(const std::string &suite, const Config &config, F body) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report(suite);
  body(report);
  report.set_seconds(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  report.set_config(config.echo());
  return report;
}

} // namespace

VerificationReport run_symbolic_suite(const Config &config) {
  return timed("symbolic", config, [&](VerificationReport &r) {
    const auto &table = config.derivations;
    std::mt19937_64 rng(config.seed);
    const NF a = gen(Letter::a), as = gen(Letter::a_star), b = gen(Letter::b), bs = gen(Letter::b_star);
    const PhaseScalar q = PhaseScalar::q_power(1), qi = PhaseScalar::q_power(-1);

    {
      const std::vector<std::pair<std::string, NF>> rel = {
          {"ab - q ba", a * b - q * (b * a)},
          {"ab* - q^-1 b*a", a * bs - qi * (bs * a)},
          {"aa* - a*a", a * as - as * a},
          {"bb* - b*b", b * bs - bs * b},
          {"a*a + b*b - 1", as * a + bs * b - NF(1)},
      };
      const auto w = first_nonzero(rel);
      r.add("symbolic.relations", "defining relations hold in normal form", w.empty(), w);
    }
    {
      std::string witness;
      std::uniform_int_distribution<std::size_t> cut(0, 8);
      for (int i = 0; i < 200 && witness.empty(); ++i) {
        const auto w = random_word(rng, 8);
        const auto left = normalize(w);
        const std::size_t c1 = std::min(cut(rng), w.size());
        const auto split = word_product(w, 0, c1) * word_product(w, c1, w.size());
        NF right(1);
        for (auto it = w.rbegin(); it != w.rend(); ++it)
          right = gen(*it) * right;
        if (!(left == split && left == right))
          witness = "word of length " + std::to_string(w.size());
      }
      r.add("symbolic.confluence", "all bracketings of 200 random words of length <= 8 agree", witness.empty(),
            witness);
    }
    {
      std::string witness;
      for (int i = 0; i < 50 && witness.empty(); ++i) {
        const auto u = random_element(rng, 2), v = random_element(rng, 2);
        if (!(adjoint(u * v) == adjoint(v) * adjoint(u)) || !(adjoint(adjoint(u)) == u))
          witness = "u = " + u.to_string() + "; v = " + v.to_string();
      }
      r.add("symbolic.adjoint", "adjoint is an involutive antihomomorphism on 50 random pairs", witness.empty(),
            witness);
    }
    {
      std::string witness;
      for (int i = 0; i < 50 && witness.empty(); ++i) {
        const auto u = random_element(rng, 3);
        if (!(NF::central_x() * u == u * NF::central_x()))
          witness = "u = " + u.to_string();
      }
      r.add("symbolic.centrality", "x commutes with 50 random elements", witness.empty(), witness);
    }
    const auto samples = derivation_samples(rng);
    {
      std::vector<std::pair<std::string, NF>> res;
      for (const auto &u : samples) {
        res.push_back({"raise(u*) + lower(u)* for u = " + u.to_string(), Zp(adjoint(u), table) + adjoint(Zm(u, table))});
        res.push_back({"lower(u*) + raise(u)* for u = " + u.to_string(), Zm(adjoint(u), table) + adjoint(Zp(u, table))});
      }
      const auto w = first_nonzero(res);
      r.add("symbolic.derivations.star_compatible", "raise(u*) = -lower(u)* and lower(u*) = -raise(u)*", w.empty(), w);
    }
    {
      std::vector<std::pair<std::string, NF>> res;
      for (const auto &u : samples) {
        res.push_back({"[T,raise](u) - 2 raise(u) for u = " + u.to_string(),
                       Tw(Zp(u, table)) - Zp(Tw(u), table) - PhaseScalar(2) * Zp(u, table)});
        res.push_back({"[T,lower](u) + 2 lower(u) for u = " + u.to_string(),
                       Tw(Zm(u, table)) - Zm(Tw(u), table) + PhaseScalar(2) * Zm(u, table)});
      }
      const auto w = first_nonzero(res);
      r.add("symbolic.derivations.ladder", "[T, raise] = 2 raise and [T, lower] = -2 lower", w.empty(), w);
    }
    {
      // Letter-by-letter expansion of the twisted Leibniz rule on random words,
      // compared with the derivation of the normal form.
      std::vector<std::pair<std::string, NF>> res;
      for (int i = 0; i < 100; ++i) {
        const auto w = random_word(rng, 6);
        for (auto d : {Derivation::raise, Derivation::lower}) {
          const auto &images = d == Derivation::raise ? table.raise : table.lower;
          const int sign = d == Derivation::raise ? -1 : 1;
          NF expanded;
          for (std::size_t k = 0; k < w.size(); ++k) {
            const auto prefix = word_product(w, 0, k), suffix = word_product(w, k + 1, w.size());
            expanded += charge_twist(prefix, sign) * images[static_cast<std::size_t>(w[k])] *
                        charge_twist(suffix, -sign);
          }
          res.push_back({std::string(d == Derivation::raise ? "raise" : "lower") + " of a word of length " +
                             std::to_string(w.size()) + " with normal form " + normalize(w).to_string(),
                         apply_derivation(d, normalize(w), table) - expanded});
        }
      }
      const auto w = first_nonzero(res);
      r.add("symbolic.derivations.word_leibniz", "derivation of 100 random words matches letterwise expansion",
            w.empty(), w);
    }
    {
      std::vector<std::pair<std::string, NF>> res;
      for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
        const auto &u = samples[i];
        const auto &v = samples[i + 1];
        const auto uc = charge_twist(u, 1), ucm = charge_twist(u, -1);
        const auto vc = charge_twist(v, 1), vcm = charge_twist(v, -1);
        res.push_back({"lower Leibniz for u = " + u.to_string() + ", v = " + v.to_string(),
                       Zm(u * v, table) - (Zm(u, table) * vcm + uc * Zm(v, table))});
        res.push_back({"raise Leibniz for u = " + u.to_string() + ", v = " + v.to_string(),
                       Zp(u * v, table) - (Zp(u, table) * vc + ucm * Zp(v, table))});
      }
      const auto w = first_nonzero(res);
      r.add("symbolic.derivations.twisted_leibniz", "raise and lower obey the charge-twisted Leibniz rule", w.empty(),
            w);
    }
    {
      const auto da = exterior_derivative(a, table), db = exterior_derivative(b, table);
      std::vector<std::pair<std::string, NF>> res;
      auto commutes = [&](const std::string &label, const NF &g, const OneFormSection &w) {
        const auto diff = left_act(g, w) - right_act(w, g);
        res.push_back({label + " (raising slot)", diff.plus});
        res.push_back({label + " (lowering slot)", diff.minus});
      };
      commutes("a da - da a", a, da);
      commutes("b db - db b", b, db);
      const auto ada = left_act(as, da), bdb = left_act(bs, db);
      for (auto l : kLetters) {
        commutes("a* da central against " + gen(l).to_string(), gen(l), ada);
        commutes("b* db central against " + gen(l).to_string(), gen(l), bdb);
      }
      const auto w = first_nonzero(res);
      r.add("symbolic.one_forms.commutation", "a commutes with da, b with db; a*da and b*db are central", w.empty(),
            w);
    }
    for (int n = -config.nmax; n <= config.nmax; ++n) {
      const auto g = psi_gram(n);
      r.add("symbolic.psi_gram." + n_label(n), "weighted column Gram sum equals 1", g == NF(1),
            g == NF(1) ? "" : g.to_string());
      if (n == 0)
        continue;
      const auto p = psi_d0_pairing(n, table);
      r.add("symbolic.psi_d0_pairing." + n_label(n), "column paired with its derivative vanishes", p.is_zero(),
            p.is_zero() ? "" : "raising: " + p.plus.to_string() + "; lowering: " + p.minus.to_string());
      const auto gram = d0_gram(n, table);
      const NF expected(4L * std::abs(n));
      const bool ok = n > 0 ? (gram(0, 0) == expected && gram(1, 1).is_zero())
                            : (gram(0, 0).is_zero() && gram(1, 1) == expected);
      r.add("symbolic.d0_gram." + n_label(n), "derivative Gram matrix is 4|n| in its single surviving slot", ok,
            ok ? "" : "diag(" + gram(0, 0).to_string() + ", " + gram(1, 1).to_string() + ")");
    }
  });
}

VerificationReport run_hopf_suite(const Config &config) {
  return timed("hopf", config, [&](VerificationReport &r) {
    const auto &table = config.derivations;
    {
      const auto br = binomial_identity_check(config.binomial_nmax);
      r.add("hopf.binomial.identities", "five binomial identities and the four-part split of the derivative sum",
            br.passed(),
            br.passed() ? std::to_string(br.identities_checked) + " identities, " +
                              std::to_string(br.aggregations_checked) + " aggregations"
                        : br.failures.front());
    }
    {
      std::string witness;
      const int bound = std::min(config.nmax, 6);
      for (int n = -bound; n <= bound && witness.empty(); ++n)
        if (!projection_idempotent(n))
          witness = n_label(n);
      r.add("hopf.projection.idempotent", "P W P = P for |n| <= " + std::to_string(bound), witness.empty(), witness);
    }
    {
      std::string witness;
      for (int n = -config.nmax; n <= config.nmax && witness.empty(); ++n) {
        if (n == 0)
          continue;
        const auto col = d0_commutator_column(n, table);
        const auto &vanishing = n > 0 ? col.plus : col.minus;
        for (std::size_t k = 0; k < vanishing.rows(); ++k)
          if (!vanishing(k, 0).is_zero()) {
            witness = n_label(n) + ", k=" + std::to_string(k) + ": " + vanishing(k, 0).to_string();
            break;
          }
      }
      r.add("hopf.d0_column.triangular", "column derivative lives in one slot only (lowering for n>0)",
            witness.empty(), witness);
    }
    const auto monomials = monomials_up_to_degree(4);
    {
      std::string witness;
      std::size_t count = 0;
      for (int n = -3; n <= 3; ++n)
        for (const auto &f : monomials) {
          if (*f.homogeneous_weight() != -n)
            continue;
          ++count;
          const auto g = grassmann_apply(n, f, table);
          const bool weights_ok = (g.plus.is_zero() || *g.plus.homogeneous_weight() == -n + 2) &&
                                  (g.minus.is_zero() || *g.minus.homogeneous_weight() == -n - 2);
          if ((!weights_ok || !(g == exterior_derivative(f, table))) && witness.empty()) {
            const auto diff = g - exterior_derivative(f, table);
            witness = n_label(n) + ", f = " + f.to_string() + ": raising " + diff.plus.to_string() + "; lowering " +
                      diff.minus.to_string();
          }
        }
      r.add("hopf.connection.agreement", "Grassmann connection equals raise/lower on all monomials of degree <= 4",
            witness.empty(), witness.empty() ? std::to_string(count) + " samples" : witness);
    }
    {
      std::string witness;
      const auto small = monomials_up_to_degree(2);
      for (int n = -2; n <= 2 && witness.empty(); ++n)
        for (const auto &f : small) {
          if (*f.homogeneous_weight() != -n)
            continue;
          for (const auto &g : small)
            if (*g.homogeneous_weight() == 0 && !connection_leibniz_check(n, f, g, table) && witness.empty())
              witness = n_label(n) + ", f = " + f.to_string() + ", g = " + g.to_string();
        }
      r.add("hopf.connection.leibniz", "connection is a derivation over weight-0 elements", witness.empty(), witness);
    }
    {
      const auto fr = factorization_check(config.factorization_weight, config.factorization_degree, table);
      const auto count = std::to_string(fr.samples) + " samples";
      r.add("hopf.factorization.horizontal", "connection plus horizontal operator equals raise/lower slotwise",
            fr.horizontal_failures == 0, fr.horizontal_failures == 0 ? count : fr.first_horizontal_witness);
      r.add("hopf.factorization.product_equals_dirac_minus_one",
            "product operator equals iZ1g1 + iZ2g2 + iZ3g3 - 1", fr.corrected_failures == 0,
            fr.corrected_failures == 0 ? count : fr.first_corrected_witness);
      r.add("hopf.factorization.product_equals_dirac_plus_one",
            "product operator equals iZ1g1 + iZ2g2 + iZ3g3 + 1", fr.shifted_failures == 0,
            fr.shifted_failures == 0
                ? count
                : std::to_string(fr.shifted_failures) + "/" + count + " differ; first: " + fr.first_shifted_witness);
    }
  });
}

VerificationReport run_torus_suite(const Config &config) {
  return timed("torus", config, [&](VerificationReport &r) {
    const int N = config.box;
    const auto model = build_nc_torus(N, config.theta, config.margin);
    const auto &D = model.dirac.matrix;
    r.add("torus.dirac.hermitian", "Dirac operator is exactly Hermitian", hermiticity_defect(D) == 0.0,
          sci(hermiticity_defect(D)));
    const auto flat = build_nc_torus(N, 0.0, config.margin);
    r.add("torus.dirac.theta_independent", "Dirac matrix does not depend on theta", max_abs_diff(D, flat.dirac.matrix) == 0.0,
          sci(max_abs_diff(D, flat.dirac.matrix)));

    const auto spec_d = hermitian_eigenvalues(D);
    const auto product = torus_product_operator(N);
    const auto spec_p = hermitian_eigenvalues(product.matrix);
    r.add("torus.spectrum.product_equal", "spectrum of D equals spectrum of the odd-odd product operator",
          spectrum_multiset_equal(spec_d, spec_p, 1e-9),
          std::to_string(spec_d.entries.size()) + " distinct eigenvalues");
    {
      std::vector<double> closed;
      for (int m = -N; m <= N; ++m)
        for (int n = -N; n <= N; ++n) {
          const double s = std::sqrt(double(m * m + n * n));
          closed.push_back(s);
          closed.push_back(-s);
        }
      const auto expected = make_spectrum(closed, 1e-9);
      r.add("torus.spectrum.closed_form", "spectrum of D is {+-sqrt(m^2+n^2)}", spectrum_multiset_equal(spec_d, expected, 1e-9),
            "");
    }
    {
      const auto &U1 = model.u1.matrix, &U2 = model.u2.matrix;
      const Complex lambda = std::polar(1.0, 2.0 * M_PI * config.theta);
      const double res = interior_norm(U1 * U2 - lambda * (U2 * U1), model.dirac);
      r.add("torus.commutation", "L(U1)L(U2) = e^{2 pi i theta} L(U2)L(U1) on the interior", res <= 1e-12, sci(res));
      const auto id = ComplexMatrix::identity(D.rows());
      const double unit = std::max(interior_norm(U1.adjoint() * U1 - id, model.dirac),
                                   interior_norm(U2.adjoint() * U2 - id, model.dirac));
      r.add("torus.shifts.interior_isometry", "U1 and L(U2) are isometric on the interior", unit <= 1e-12, sci(unit));
    }
    if (config.margin >= 1) {
      std::mt19937_64 rng(config.seed);
      std::string witness;
      const int M = config.margin;
      auto split = [&](int &x, int &y) {
        std::uniform_int_distribution<int> first(-M, M);
        x = first(rng);
        const int rest = M - std::abs(x);
        std::uniform_int_distribution<int> second(-rest, rest);
        y = second(rng);
      };
      for (int i = 0; i < config.random_pairs; ++i) {
        FourierMonomial x, y;
        split(x.a, y.a);
        split(x.b, y.b);
        if (!star_product_check(x, y, model) && witness.empty())
          witness = "x = U1^" + std::to_string(x.a) + " U2^" + std::to_string(x.b) + ", y = U1^" +
                    std::to_string(y.a) + " U2^" + std::to_string(y.b);
      }
      r.add("torus.star_product", "L(x)L(y) = L(x * y) for " + std::to_string(config.random_pairs) + " random monomial pairs",
            witness.empty(), witness);
    } else {
      r.add({"torus.star_product", "L(x)L(y) = L(x * y) on the interior", CheckStatus::skip, "margin is 0"});
    }
    {
      const auto inv = invariant_part_torus(model);
      const auto dbl = doubled_circle(N);
      const auto sign = kron(ComplexMatrix::identity(2 * N + 1), ComplexMatrix::diagonal({1.0, -1.0}));
      const double diff = max_abs_diff(inv.matrix, sign * dbl.matrix * sign);
      r.add("torus.invariant_part.doubled_circle", "m=0 block is the doubled circle operator up to diag(1,-1)",
            diff == 0.0, sci(diff));
      std::vector<double> closed;
      for (int n = -N; n <= N; ++n) {
        closed.push_back(n);
        closed.push_back(-n);
      }
      r.add("torus.invariant_part.spectrum", "m=0 spectrum is {0 x2, +-k x2}",
            spectrum_multiset_equal(hermitian_eigenvalues(inv.matrix), make_spectrum(closed, 1e-9), 1e-9), "");
      double twist = 0.0;
      for (int n = -N; n < N; ++n)
        for (int s = 0; s < 2; ++s)
          twist = std::max(twist, std::abs(model.u2.matrix(torus_index(N, 0, n + 1, s), torus_index(N, 0, n, s)) - 1.0));
      r.add("torus.invariant_part.untwisted", "twisted L(U2) acts without phase on the m=0 modes", twist == 0.0,
            sci(twist));
    }
  });
}

VerificationReport run_spectra_suite(const Config &config) {
  return timed("spectra", config, [&](VerificationReport &r) {
    {
      std::string witness;
      for (int n = 0; n <= config.equivalence_nmax && witness.empty(); ++n)
        if (!exact_multiset_equal(d0_invariant_spectrum(n), s2_shifted_spectrum(n + 1)))
          witness = "n=" + std::to_string(n);
      r.add("spectra.equivalence", "invariant spectrum equals shifted S2 spectrum up to |l| <= n+1, n <= " +
                                       std::to_string(config.equivalence_nmax),
            witness.empty(), witness);
    }
    {
      const double e = summability_exponent(s3_dirac_spectrum(config.kmax));
      r.add("spectra.summability.s3", "S3 counting exponent in [2.85, 3.15]", e >= 2.85 && e <= 3.15, format_real(e));
    }
    {
      const double e = summability_exponent(d0_invariant_spectrum(config.summability_nmax));
      r.add("spectra.summability.d0", "invariant counting exponent in [1.9, 2.1]", e >= 1.9 && e <= 2.1, format_real(e));
    }
    {
      bool ok = true;
      for (const auto &t : {s3_dirac_spectrum(config.kmax), d0_invariant_spectrum(config.summability_nmax),
                            s2_shifted_spectrum(config.equivalence_nmax + 1)})
        for (const auto &e : t.entries)
          ok = ok && e.multiplicity > 0 && e.twice_value % 2 != 0;
      r.add("spectra.tables.half_integer", "all tables have positive multiplicities and half-integer eigenvalues", ok,
            "");
    }
  });
}

VerificationReport run_gauge_suite(const Config &config) {
  return timed("gauge", config, [&](VerificationReport &r) {
    std::mt19937_64 rng(config.seed);
    const auto model = build_nc_torus(config.box, config.theta, config.margin);
    const auto &D = model.dirac.matrix;
    {
      const std::vector<std::pair<std::string, ComplexMatrix>> words = {
          {"L(U1)", model.u1.matrix}, {"L(U2)", model.u2.matrix}, {"L(U1)L(U2)", model.u1.matrix * model.u2.matrix}};
      for (const auto &[label, u] : words) {
        const double res = perturbation_residual(D, u, model.dirac);
        r.add("gauge.perturbation." + label, "uDu* = D + u[D,u*] on the interior for u = " + label, res <= 1e-10,
              sci(res));
      }
    }
    {
      const std::size_t dim = 6;
      double comp = 0.0, herm = 0.0, pres = 0.0, cocycle = 0.0;
      for (int i = 0; i < config.random_pairs; ++i) {
        const auto Dr = random_hermitian(dim, rng);
        const auto b = random_hermitian(dim, rng);
        const auto a = random_hermitian(dim, rng);
        // a[D,b] + (a[D,b])* = a[D,b] + b[D,a] - [D,ba] for Hermitian a, b
        const Complex minus_one(-1.0);
        const auto omega = FluctuationForm::from_presentation(
            Dr, {{a, b}, {b, a}, {minus_one * ComplexMatrix::identity(dim), b * a}});
        const auto u = GaugeElement::make(random_unitary(dim, rng), GaugeKind::internal, "random");
        const auto v = GaugeElement::make(random_unitary(dim, rng), GaugeKind::internal, "random");
        const auto vu = GaugeElement::make(v.u * u.u, GaugeKind::internal, "product");
        const auto twice = gauge_transform_field(v, gauge_transform_field(u, omega, Dr), Dr);
        const auto once = gauge_transform_field(vu, omega, Dr);
        comp = std::max(comp, max_abs_diff(twice.op(), once.op()));
        herm = std::max(herm, hermiticity_defect(once.op()));
        pres = std::max(pres, max_abs_diff(once.assemble(Dr), once.op()));
        const auto zero = FluctuationForm::from_operator(ComplexMatrix(dim, dim));
        const auto back = GaugeElement::make(u.u.adjoint(), GaugeKind::internal, "inverse");
        cocycle = std::max(cocycle, gauge_transform_field(back, gauge_transform_field(u, zero, Dr), Dr).op().max_abs());
      }
      const auto n = std::to_string(config.random_pairs);
      r.add("gauge.action.composition", "transforming by u then v equals transforming by vu (" + n + " pairs)",
            comp <= 1e-12, sci(comp));
      r.add("gauge.action.hermitian", "gauge action preserves self-adjointness", herm <= 1e-12, sci(herm));
      r.add("gauge.action.presentation", "transformed presentation reassembles to the transformed operator",
            pres <= 1e-12, sci(pres));
      r.add("gauge.action.cocycle", "transforming 0 by u then u* returns 0", cocycle <= 1e-12, sci(cocycle));
    }
    {
      const Complex z1(0.7, -0.2), z2(-0.3, 1.1);
      const auto I2 = ComplexMatrix::identity(2);
      const auto m = ComplexMatrix{{0.5, Complex(0, 1)}, {2.0, -1.0}};
      const auto h1 = gws_higgs(1.0, m, 0.0, I2, z1, z2);
      const auto h2 = gws_higgs(1.0, m, 1.0, I2, z1, z2);
      const auto h3 = gws_higgs(1.0, m, 0.0, ComplexMatrix::diagonal({2.0, 3.0}), z1, z2);
      const bool ok = h1.phi1 == z1 && h1.phi2 == z2 && h2.phi1 == 0.0 && h2.phi2 == 0.0 && h3.phi1 == 2.0 * z1 &&
                      h3.phi2 == 3.0 * z2;
      r.add("gauge.gws.examples", "Higgs extraction reproduces the three worked cases exactly", ok, "");

      double offdiag = 0.0, rule = 0.0;
      std::normal_distribution<double> gauss;
      auto rc = [&] { return Complex(gauss(rng), gauss(rng)); };
      for (int i = 0; i < config.random_pairs; ++i) {
        const Complex w1 = rc(), w2 = rc();
        const auto hf = gws_higgs(rc(), random_hermitian(2, rng), rc(), random_hermitian(2, rng), w1, w2);
        offdiag = std::max(offdiag, diagonal_block_norm(hf.matrix));

        const FiniteTriple triple{w1, w2};
        const auto T = triple.operator_matrix();
        // a[T,c] + (a[T,c])* = a[T,c] + c*[T,a*] - [T,c*a*]
        const auto a = FiniteTriple::represent(rc(), random_hermitian(2, rng));
        const auto c = FiniteTriple::represent(rc(), random_hermitian(2, rng));
        const Complex minus_one(-1.0);
        const auto phi = FluctuationForm::from_presentation(
            T, {{a, c}, {c.adjoint(), a.adjoint()}, {minus_one * ComplexMatrix::identity(3), c.adjoint() * a.adjoint()}});
        const Complex u1 = std::polar(1.0, std::uniform_real_distribution<double>(0, 2 * M_PI)(rng));
        const auto u2 = random_unitary(2, rng);
        const auto U = GaugeElement::make(FiniteTriple::represent(u1, u2), GaugeKind::internal, "U(1)xU(2)");
        const auto moved = gauge_transform_field(U, phi, T);
        const Complex row[2] = {w1 + phi.op()(0, 1), w2 + phi.op()(0, 2)};
        const auto u2s = u2.adjoint();
        for (std::size_t j = 0; j < 2; ++j) {
          const Complex expected = u1 * (row[0] * u2s(0, j) + row[1] * u2s(1, j));
          rule = std::max(rule, std::abs(T(0, j + 1) + moved.op()(0, j + 1) - expected));
        }
      }
      r.add("gauge.gws.block_off_diagonal", "a[T,c] vanishes on the diagonal blocks", offdiag == 0.0, sci(offdiag));
      r.add("gauge.gws.transformation", "Higgs row transforms as u1 (z + phi) u2*", rule <= 1e-12, sci(rule));

      const FiniteTriple triple{z1, z2};
      const auto T = triple.operator_matrix();
      const auto a = FiniteTriple::represent(1.0, ComplexMatrix(2, 2));
      const auto c = FiniteTriple::represent(0.0, I2);
      const auto omega = FluctuationForm::from_presentation(T, {{a, c}, {c, a}});
      const double dev = max_abs_diff(inner_fluctuation(T, omega), Complex(2.0) * T);
      r.add("gauge.gws.fluctuation", "fluctuating by a[T,c] + c[T,a] doubles the Yukawa row", dev <= 1e-12, sci(dev));
    }
    {
      const auto g = torus_dual_action(1, config.theta, config.box);
      const Complex lambda = std::polar(1.0, 2.0 * M_PI * config.theta);
      const auto &U1 = model.u1.matrix, &U2 = model.u2.matrix;
      const auto gs = g.u.adjoint();
      const double r1 = interior_norm(g.u * U1 * gs - lambda * U1, model.dirac);
      const double r2 = interior_norm(g.u * U2 * gs - U2, model.dirac);
      r.add("gauge.dual_action.conjugation", "dual action rotates L(U1) by e^{2 pi i theta} and fixes L(U2)",
            std::max(r1, r2) <= 1e-12, sci(std::max(r1, r2)));
      const auto g0 = torus_dual_action(0, config.theta, config.box);
      r.add("gauge.dual_action.identity", "n=0 gives the identity",
            max_abs_diff(g0.u, ComplexMatrix::identity(D.rows())) == 0.0, "");

      const int larger = config.box + 4;
      const auto big = build_nc_torus(larger, config.theta, config.margin);
      const auto gbig = torus_dual_action(1, config.theta, larger);
      const double c_small = conjugated_commutator_norm(model, g, U1 * U2);
      const double c_big = conjugated_commutator_norm(big, gbig, big.u1.matrix * big.u2.matrix);
      r.add("gauge.dual_action.normal_subgroup",
            "[T, g u g*] stays bounded as the box grows for u = L(U1)L(U2)",
            std::abs(c_small - c_big) <= 1e-9 && c_big <= 1.0 + 1e-9, format_real(c_small) + " vs " + format_real(c_big));
    }
  });
}

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names = {"symbolic", "hopf", "torus", "spectra", "gauge"};
  return names;
}

VerificationReport run_suite(const std::string &name, const Config &config) {
  static const std::map<std::string, std::function<VerificationReport(const Config &)>> suites = {
      {"symbolic", run_symbolic_suite},
      {"hopf", run_hopf_suite},
      {"torus", run_torus_suite},
      {"spectra", run_spectra_suite},
      {"gauge", run_gauge_suite}};
  if (name == "all") {
    VerificationReport all("all");
    for (const auto &n : suite_names())
      all.merge(suites.at(n)(config));
    all.set_config(config.echo());
    return all;
  }
  const auto it = suites.find(name);
  if (it == suites.end())
    throw std::invalid_argument("unknown suite: " + name);
  return it->second(config);
}

} // namespace ncgkk
