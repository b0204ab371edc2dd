#include "quiverkit/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "quiverkit/errors.hpp"

namespace quiverkit {

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da < db;
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

Polynomial Polynomial::constant(std::size_t variables, const Integer& c) {
  Polynomial p(variables);
  p.add_term(Exponents(variables, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t variables, std::size_t index) {
  if (index >= variables) throw ArgumentError("variable index out of range");
  Exponents e(variables, 0);
  e[index] = 1;
  return monomial(variables, std::move(e), 1);
}

Polynomial Polynomial::monomial(std::size_t variables, Exponents exponents, const Integer& c) {
  if (exponents.size() != variables) throw ArgumentError("exponent vector has wrong length");
  Polynomial p(variables);
  p.add_term(exponents, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                            [](std::uint32_t e) { return e == 0; }));
}

bool Polynomial::is_one() const { return is_constant() && !terms_.empty() && terms_.begin()->second == 1; }

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

std::uint32_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : std::accumulate(terms_.rbegin()->first.begin(), terms_.rbegin()->first.end(), 0u);
}

Integer Polynomial::leading_coefficient() const { return terms_.empty() ? Integer(0) : terms_.rbegin()->second; }

Integer Polynomial::content() const {
  Integer g = 0;
  for (const auto& [e, c] : terms_) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return boost::multiprecision::abs(g);
}

void Polynomial::require_compatible(const Polynomial& other) const {
  if (variables_ != other.variables_) throw ArgumentError("polynomials live in different rings");
}

void Polynomial::add_term(const Exponents& exponents, const Integer& c) {
  if (exponents.size() != variables_) throw ArgumentError("exponent vector has wrong length");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(exponents, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out = *this;
  out += other;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial out = *this;
  out -= other;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_compatible(other);
  Polynomial out(variables_);
  Exponents e(variables_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t i = 0; i < variables_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::scaled(const Integer& c) const {
  if (c == 0) return Polynomial(variables_);
  Polynomial out = *this;
  for (auto& [e, coeff] : out.terms_) coeff *= c;
  return out;
}

namespace {

std::string monomial_string(const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "u_" + std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    const std::string mono = monomial_string(e);
    std::string term;
    if (mono.empty()) {
      term = magnitude.str();
    } else if (magnitude == 1) {
      term = mono;
    } else {
      term = magnitude.str() + "*" + mono;
    }
    if (first) {
      out = negative ? "-" + term : term;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result = Polynomial::constant(base.variables(), 1);
  Polynomial square = base;
  while (exponent > 0) {
    if (exponent & 1u) result = result * square;
    exponent >>= 1;
    if (exponent > 0) square = square * square;
  }
  return result;
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.variables() != b.variables()) throw ArgumentError("polynomials live in different rings");
  const std::size_t n = a.variables();
  Polynomial remainder = a;
  Polynomial quotient(n);
  const auto& [lead_e, lead_c] = *b.terms().rbegin();
  Exponents e(n);
  // If b | a, the leading term of b divides the leading term of every
  // intermediate remainder, so greedy leading-term division finds the quotient.
  while (!remainder.is_zero()) {
    const auto& [re, rc] = *remainder.terms().rbegin();
    for (std::size_t i = 0; i < n; ++i) {
      if (re[i] < lead_e[i]) return std::nullopt;
      e[i] = re[i] - lead_e[i];
    }
    if (rc % lead_c != 0) return std::nullopt;
    Polynomial step = Polynomial::monomial(n, e, rc / lead_c);
    remainder -= step * b;
    quotient += step;
  }
  return quotient;
}

namespace {

Polynomial normalized(Polynomial p) {
  if (p.leading_coefficient() < 0) p = -p;
  return p;
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("expected exact polynomial division");
  return *q;
}

// Coefficients of p as a polynomial in `var`; each coefficient has zero
// exponent in `var`.
std::map<std::uint32_t, Polynomial> coefficients_in(const Polynomial& p, std::size_t var) {
  std::map<std::uint32_t, Polynomial> out;
  for (const auto& [e, c] : p.terms()) {
    Exponents rest = e;
    rest[var] = 0;
    auto it = out.try_emplace(e[var], p.variables()).first;
    it->second.add_term(rest, c);
  }
  return out;
}

Polynomial times_power(const Polynomial& p, std::size_t var, std::uint32_t k) {
  if (k == 0) return p;
  Polynomial out(p.variables());
  for (const auto& [e, c] : p.terms()) {
    Exponents shifted = e;
    shifted[var] += k;
    out.add_term(shifted, c);
  }
  return out;
}

Polynomial leading_coefficient_in(const Polynomial& p, std::size_t var) {
  return coefficients_in(p, var).rbegin()->second;
}

std::optional<std::size_t> main_variable(const Polynomial& a, const Polynomial& b) {
  for (std::size_t v = a.variables(); v-- > 0;) {
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
  }
  return std::nullopt;
}

Polynomial content_in(const Polynomial& p, std::size_t var);

Polynomial primitive_part_in(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) return p;
  return exact_quotient(p, content_in(p, var));
}

// Sparse pseudo-remainder of a by b with respect to `var`.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
  const std::uint32_t db = b.degree_in(var);
  const Polynomial lb = leading_coefficient_in(b, var);
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const std::uint32_t da = a.degree_in(var);
    const Polynomial la = leading_coefficient_in(a, var);
    a = lb * a - times_power(la * b, var, da - db);
  }
  return a;
}

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b);

Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g(p.variables());
  for (const auto& [d, coeff] : coefficients_in(p, var)) {
    g = gcd_impl(g, coeff);
    if (g.is_one()) break;
  }
  return g;
}

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  const auto var = main_variable(a, b);
  if (!var) {
    return Polynomial::constant(a.variables(),
                                boost::multiprecision::gcd(a.leading_coefficient(), b.leading_coefficient()));
  }
  const std::size_t v = *var;
  if (a.degree_in(v) == 0) return gcd_impl(a, content_in(b, v));
  if (b.degree_in(v) == 0) return gcd_impl(content_in(a, v), b);

  const Polynomial ca = content_in(a, v);
  const Polynomial cb = content_in(b, v);
  Polynomial pa = exact_quotient(a, ca);
  Polynomial pb = exact_quotient(b, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);

  // Primitive PRS: the gcd of two v-primitive polynomials is v-primitive.
  while (true) {
    Polynomial rem = pseudo_remainder(pa, pb, v);
    if (rem.is_zero()) break;
    if (rem.degree_in(v) == 0) {
      pb = Polynomial::constant(a.variables(), 1);
      break;
    }
    pa = std::move(pb);
    pb = primitive_part_in(rem, v);
  }
  return normalized(gcd_impl(ca, cb) * primitive_part_in(pb, v));
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.variables() != b.variables()) throw ArgumentError("polynomials live in different rings");
  return gcd_impl(a, b);
}

LaurentFraction::LaurentFraction(Polynomial numerator)
    : LaurentFraction(std::move(numerator), Polynomial::constant(0, 1)) {}

LaurentFraction::LaurentFraction(Polynomial numerator, Polynomial denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (denominator_.variables() != numerator_.variables()) {
    if (denominator_.is_constant() && denominator_.variables() == 0) {
      denominator_ = Polynomial::constant(numerator_.variables(), denominator_.leading_coefficient());
    } else {
      throw ArgumentError("numerator and denominator live in different rings");
    }
  }
  if (denominator_.is_zero()) throw ArgumentError("zero denominator");
  if (numerator_.is_zero()) {
    denominator_ = Polynomial::constant(numerator_.variables(), 1);
    return;
  }
  Polynomial g = gcd(numerator_, denominator_);
  if (!g.is_one()) {
    numerator_ = exact_quotient(numerator_, g);
    denominator_ = exact_quotient(denominator_, g);
  }
  if (denominator_.leading_coefficient() < 0) {
    numerator_ = -numerator_;
    denominator_ = -denominator_;
  }
}

LaurentFraction LaurentFraction::variable(std::size_t variables, std::size_t index) {
  return LaurentFraction(Polynomial::variable(variables, index), Polynomial::constant(variables, 1));
}

LaurentFraction LaurentFraction::operator+(const LaurentFraction& other) const {
  return {numerator_ * other.denominator_ + other.numerator_ * denominator_, denominator_ * other.denominator_};
}

LaurentFraction LaurentFraction::operator-(const LaurentFraction& other) const {
  return {numerator_ * other.denominator_ - other.numerator_ * denominator_, denominator_ * other.denominator_};
}

LaurentFraction LaurentFraction::operator*(const LaurentFraction& other) const {
  return {numerator_ * other.numerator_, denominator_ * other.denominator_};
}

LaurentFraction LaurentFraction::operator/(const LaurentFraction& other) const {
  if (other.is_zero()) throw std::domain_error("division by zero fraction");
  return {numerator_ * other.denominator_, denominator_ * other.numerator_};
}

std::string LaurentFraction::to_string() const {
  std::string num = numerator_.to_string();
  if (denominator_.is_one()) return num;
  if (numerator_.terms().size() > 1) num = "(" + num + ")";
  std::string den = denominator_.to_string();
  if (denominator_.terms().size() > 1 || den.find('*') != std::string::npos) den = "(" + den + ")";
  return num + " / " + den;
}

bool is_laurent(const LaurentFraction& x) {
  const auto& den = x.denominator();
  return den.terms().size() == 1 && boost::multiprecision::abs(den.terms().begin()->second) == 1;
}

}  // namespace quiverkit
