#include "ncgkk/star_algebra.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace ncgkk {

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n)
    return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::string Gaussian::to_string() const {
  if (im == 0)
    return re.get_str();
  if (re == 0)
    return im.get_str() + "i";
  return re.get_str() + (im > 0 ? "+" : "") + im.get_str() + "i";
}

PhaseScalar::PhaseScalar(long v) : PhaseScalar(Gaussian(v)) {}
PhaseScalar::PhaseScalar(const Rational &v) : PhaseScalar(Gaussian(v)) {}
PhaseScalar::PhaseScalar(const Gaussian &v) { add(0, v); }

PhaseScalar PhaseScalar::l_power(int e, const Gaussian &c) {
  PhaseScalar s;
  s.add(e, c);
  return s;
}

void PhaseScalar::add(int e, const Gaussian &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

PhaseScalar PhaseScalar::conj() const {
  PhaseScalar s;
  for (const auto &[e, c] : terms_)
    s.add(-e, c.conj());
  return s;
}

PhaseScalar PhaseScalar::shifted(int e) const {
  if (e == 0)
    return *this;
  PhaseScalar s;
  for (const auto &[k, c] : terms_)
    s.terms_.emplace(k + e, c);
  return s;
}

std::complex<double> PhaseScalar::evaluate(double theta) const {
  std::complex<double> v = 0.0;
  for (const auto &[e, c] : terms_)
    v += c.to_complex() * std::polar(1.0, M_PI * theta * e);
  return v;
}

std::string PhaseScalar::to_string() const {
  if (terms_.empty())
    return "0";
  if (terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.im == 0)
    return terms_.begin()->second.re.get_str();
  std::string out = "{";
  bool first = true;
  for (const auto &[e, c] : terms_) {
    if (!first)
      out += " + ";
    first = false;
    out += "(" + c.to_string() + ")";
    if (e != 0)
      out += "l^" + std::to_string(e);
  }
  return out + "}";
}

PhaseScalar &PhaseScalar::operator+=(const PhaseScalar &o) {
  for (const auto &[e, c] : o.terms_)
    add(e, c);
  return *this;
}

PhaseScalar &PhaseScalar::operator-=(const PhaseScalar &o) {
  for (const auto &[e, c] : o.terms_)
    add(e, Gaussian(-c.re, -c.im));
  return *this;
}

PhaseScalar operator*(const PhaseScalar &a, const PhaseScalar &b) {
  PhaseScalar s;
  for (const auto &[e1, c1] : a.terms_)
    for (const auto &[e2, c2] : b.terms_)
      s.add(e1 + e2, c1 * c2);
  return s;
}

NormalFormElement::NormalFormElement(const PhaseScalar &scalar) { add_term({0, 0, 0}, scalar); }

NormalFormElement NormalFormElement::monomial(MonomialKey key, const PhaseScalar &coeff) {
  if (key.x < 0)
    throw std::invalid_argument("monomial: negative x-power");
  NormalFormElement u;
  u.add_term(key, coeff);
  return u;
}

NormalFormElement NormalFormElement::generator(Letter l) {
  switch (l) {
  case Letter::a:
    return monomial({0, 1, 0});
  case Letter::a_star:
    return monomial({0, -1, 0});
  case Letter::b:
    return monomial({0, 0, 1});
  case Letter::b_star:
    return monomial({0, 0, -1});
  }
  throw std::logic_error("generator: unknown letter");
}

void NormalFormElement::add_term(const MonomialKey &key, const PhaseScalar &coeff) {
  if (coeff.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

std::optional<int> NormalFormElement::homogeneous_weight() const {
  if (terms_.empty())
    return 0;
  const int w = terms_.begin()->first.weight();
  for (const auto &[k, c] : terms_)
    if (k.weight() != w)
      return std::nullopt;
  return w;
}

std::string NormalFormElement::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  for (const auto &[k, c] : terms_) {
    if (!out.empty())
      out += " + ";
    out += c.to_string() + " * x^" + std::to_string(k.x) + " * a^" + std::to_string(k.a) + " * b^" +
           std::to_string(k.b);
  }
  return out;
}

NormalFormElement &NormalFormElement::operator+=(const NormalFormElement &o) {
  for (const auto &[k, c] : o.terms_)
    add_term(k, c);
  return *this;
}

NormalFormElement &NormalFormElement::operator-=(const NormalFormElement &o) {
  for (const auto &[k, c] : o.terms_)
    add_term(k, -c);
  return *this;
}

NormalFormElement operator*(const PhaseScalar &s, const NormalFormElement &u) {
  NormalFormElement r;
  if (s.is_zero())
    return r;
  for (const auto &[k, c] : u.terms_)
    r.add_term(k, s * c);
  return r;
}

namespace {

int min_abs(int p, int q) { return std::min(std::abs(p), std::abs(q)); }

// Product of two monomials. Moving b^{r1} past a^{p2} costs q^{-p2·r1};
// opposite-signed powers of a collapse through x, of b through 1 - x.
void accumulate_product(NormalFormElement &out, const MonomialKey &k1, const PhaseScalar &c1,
                        const MonomialKey &k2, const PhaseScalar &c2, bool twisted) {
  PhaseScalar c = c1 * c2;
  if (twisted)
    c = c.shifted(-2 * k2.a * k1.b);
  const int xa = (k1.a * k2.a < 0) ? min_abs(k1.a, k2.a) : 0;
  const int mb = (k1.b * k2.b < 0) ? min_abs(k1.b, k2.b) : 0;
  const MonomialKey base{k1.x + k2.x + xa, k1.a + k2.a, k1.b + k2.b};
  for (int i = 0; i <= mb; ++i) {
    Rational binom(binomial(mb, i));
    if (i % 2 == 1)
      binom = -binom;
    out.add_term({base.x + i, base.a, base.b}, PhaseScalar(binom) * c);
  }
}

NormalFormElement product(const NormalFormElement &u, const NormalFormElement &v, bool twisted) {
  NormalFormElement out;
  for (const auto &[k1, c1] : u.terms())
    for (const auto &[k2, c2] : v.terms())
      accumulate_product(out, k1, c1, k2, c2, twisted);
  return out;
}

// The normal-form monomial x^j a^p b^r equals l^{pr} times the classical
// monomial under the deformation map.
NormalFormElement to_classical(const NormalFormElement &u) {
  NormalFormElement r;
  for (const auto &[k, c] : u.terms())
    r.add_term(k, c.shifted(k.a * k.b));
  return r;
}

NormalFormElement from_classical(const NormalFormElement &u) {
  NormalFormElement r;
  for (const auto &[k, c] : u.terms())
    r.add_term(k, c.shifted(-k.a * k.b));
  return r;
}

struct LetterCount {
  Letter letter;
  int count;
  MonomialKey rest;
};

// Letter multiplicities of a classical monomial, with x = a*a expanded, and
// the monomial left after removing one such letter.
std::vector<LetterCount> letter_counts(const MonomialKey &k) {
  std::vector<LetterCount> out;
  const int n_a = k.x + std::max(k.a, 0);
  const int n_as = k.x + std::max(-k.a, 0);
  if (n_a > 0)
    out.push_back({Letter::a, n_a, k.a > 0 ? MonomialKey{k.x, k.a - 1, k.b} : MonomialKey{k.x - 1, k.a - 1, k.b}});
  if (n_as > 0)
    out.push_back(
        {Letter::a_star, n_as, k.a < 0 ? MonomialKey{k.x, k.a + 1, k.b} : MonomialKey{k.x - 1, k.a + 1, k.b}});
  if (k.b > 0)
    out.push_back({Letter::b, k.b, MonomialKey{k.x, k.a, k.b - 1}});
  if (k.b < 0)
    out.push_back({Letter::b_star, -k.b, MonomialKey{k.x, k.a, k.b + 1}});
  return out;
}

NormalFormElement classical_leibniz(const NormalFormElement &u, const std::array<NormalFormElement, 4> &images) {
  std::array<NormalFormElement, 4> classical_images;
  for (std::size_t i = 0; i < 4; ++i)
    classical_images[i] = to_classical(images[i]);
  NormalFormElement out;
  for (const auto &[k, c] : u.terms())
    for (const auto &lc : letter_counts(k)) {
      const auto &img = classical_images[static_cast<std::size_t>(lc.letter)];
      if (img.is_zero())
        continue;
      const auto rest = NormalFormElement::monomial(lc.rest, c * PhaseScalar(static_cast<long>(lc.count)));
      out += multiply_classical(img, rest);
    }
  return out;
}

} // namespace

NormalFormElement multiply(const NormalFormElement &u, const NormalFormElement &v) { return product(u, v, true); }
NormalFormElement operator*(const NormalFormElement &u, const NormalFormElement &v) { return product(u, v, true); }
NormalFormElement multiply_classical(const NormalFormElement &u, const NormalFormElement &v) {
  return product(u, v, false);
}

NormalFormElement normalize(const std::vector<Letter> &word) {
  NormalFormElement u(1);
  for (Letter l : word)
    u = u * NormalFormElement::generator(l);
  return u;
}

NormalFormElement adjoint(const NormalFormElement &u) {
  NormalFormElement r;
  // (x^j a^p b^r)* = x^j b^{-r} a^{-p} = q^{-pr} x^j a^{-p} b^{-r}
  for (const auto &[k, c] : u.terms())
    r.add_term({k.x, -k.a, -k.b}, c.conj().shifted(-2 * k.a * k.b));
  return r;
}

NormalFormElement power(const NormalFormElement &u, unsigned k) {
  NormalFormElement r(1);
  for (unsigned i = 0; i < k; ++i)
    r = r * u;
  return r;
}

NormalFormElement charge_twist(const NormalFormElement &u, int sign) {
  NormalFormElement r;
  for (const auto &[k, c] : u.terms())
    r.add_term(k, c.shifted(sign * k.charge()));
  return r;
}

std::map<int, NormalFormElement> weight_components(const NormalFormElement &u) {
  std::map<int, NormalFormElement> out;
  for (const auto &[k, c] : u.terms())
    out[k.weight()].add_term(k, c);
  return out;
}

const DerivationTable &DerivationTable::standard() {
  static const DerivationTable table = [] {
    using NF = NormalFormElement;
    DerivationTable t;
    t.raise[static_cast<std::size_t>(Letter::a_star)] = PhaseScalar(-2) * NF::generator(Letter::b);
    t.raise[static_cast<std::size_t>(Letter::b_star)] = PhaseScalar(2) * NF::generator(Letter::a);
    t.lower[static_cast<std::size_t>(Letter::a)] = PhaseScalar(2) * NF::generator(Letter::b_star);
    t.lower[static_cast<std::size_t>(Letter::b)] = PhaseScalar(-2) * NF::generator(Letter::a_star);
    return t;
  }();
  return table;
}

NormalFormElement apply_derivation(Derivation d, const NormalFormElement &u, const DerivationTable &table) {
  if (d == Derivation::weight) {
    NormalFormElement r;
    for (const auto &[k, c] : u.terms())
      r.add_term(k, PhaseScalar(static_cast<long>(k.weight())) * c);
    return r;
  }
  const auto &images = d == Derivation::raise ? table.raise : table.lower;
  return from_classical(classical_leibniz(to_classical(u), images));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ')
    s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ')
    s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_fail(std::string_view what, std::string_view text) {
  throw std::invalid_argument("parse_element: " + std::string(what) + " in '" + std::string(text) + "'");
}

Rational parse_rational(std::string_view s) {
  s = trim(s);
  if (s.empty())
    parse_fail("empty rational", s);
  Rational r;
  if (r.set_str(std::string(s), 10) != 0)
    parse_fail("bad rational", s);
  r.canonicalize();
  return r;
}

Gaussian parse_gaussian(std::string_view s) {
  s = trim(s);
  if (s.empty())
    parse_fail("empty coefficient", s);
  if (s.back() != 'i')
    return Gaussian(parse_rational(s));
  std::string_view body = s.substr(0, s.size() - 1);
  const auto split = body.find_last_of("+-");
  if (split == std::string_view::npos || split == 0) {
    if (body.empty() || body == "+" || body == "-")
      return Gaussian(0, body == "-" ? -1 : 1);
    return Gaussian(Rational(0), parse_rational(body));
  }
  std::string_view im = body.substr(split);
  if (im.front() == '+')
    im.remove_prefix(1);
  return Gaussian(parse_rational(body.substr(0, split)), parse_rational(im));
}

std::vector<std::string_view> split_top_level(std::string_view s, std::string_view sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '{' || s[i] == '(')
      ++depth;
    else if (s[i] == '}' || s[i] == ')')
      --depth;
    else if (depth == 0 && s.substr(i, sep.size()) == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + sep.size();
      i = start - 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

PhaseScalar parse_phase(std::string_view s) {
  s = trim(s);
  if (s.empty() || s.front() != '{')
    return PhaseScalar(parse_gaussian(s));
  if (s.back() != '}')
    parse_fail("unbalanced brace", s);
  PhaseScalar out;
  for (auto part : split_top_level(s.substr(1, s.size() - 2), " + ")) {
    part = trim(part);
    if (part.empty() || part.front() != '(')
      parse_fail("expected '(' in phase term", part);
    const auto close = part.find(')');
    if (close == std::string_view::npos)
      parse_fail("unbalanced parenthesis", part);
    const Gaussian c = parse_gaussian(part.substr(1, close - 1));
    int e = 0;
    auto tail = trim(part.substr(close + 1));
    if (!tail.empty()) {
      if (tail.substr(0, 2) != "l^")
        parse_fail("expected l^", tail);
      e = std::stoi(std::string(tail.substr(2)));
    }
    out += PhaseScalar::l_power(e, c);
  }
  return out;
}

int parse_power(std::string_view s, char symbol) {
  s = trim(s);
  if (s.size() < 3 || s[0] != symbol || s[1] != '^')
    parse_fail(std::string("expected ") + symbol + "^", s);
  return std::stoi(std::string(s.substr(2)));
}

} // namespace

NormalFormElement parse_element(std::string_view text) {
  text = trim(text);
  NormalFormElement u;
  if (text == "0")
    return u;
  for (auto term : split_top_level(text, " + ")) {
    const auto factors = split_top_level(trim(term), " * ");
    if (factors.size() != 4)
      parse_fail("expected 'coeff * x^j * a^p * b^r'", term);
    const MonomialKey key{parse_power(factors[1], 'x'), parse_power(factors[2], 'a'), parse_power(factors[3], 'b')};
    if (key.x < 0)
      parse_fail("negative x-power", term);
    u.add_term(key, parse_phase(factors[0]));
  }
  return u;
}

AlgebraMatrix AlgebraMatrix::column(std::vector<NormalFormElement> entries) {
  AlgebraMatrix m(entries.size(), 1);
  m.entries_ = std::move(entries);
  return m;
}

AlgebraMatrix AlgebraMatrix::diagonal(std::vector<NormalFormElement> entries) {
  AlgebraMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    m(i, i) = std::move(entries[i]);
  return m;
}

AlgebraMatrix AlgebraMatrix::adjoint() const {
  AlgebraMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      m(j, i) = ncgkk::adjoint((*this)(i, j));
  return m;
}

AlgebraMatrix operator*(const AlgebraMatrix &a, const AlgebraMatrix &b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("AlgebraMatrix product: shape mismatch");
  AlgebraMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      for (std::size_t k = 0; k < a.cols_; ++k)
        c(i, j) += a(i, k) * b(k, j);
  return c;
}

} // namespace ncgkk
