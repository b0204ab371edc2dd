#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace quiverkit {

using Integer = boost::multiprecision::cpp_int;
using Exponents = std::vector<std::uint32_t>;

// Graded lexicographic order with u_1 < u_2 < ... < u_n: total degree first,
// then the exponent of the last variable decides.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse polynomial over the integers in the variables u_1..u_n.
class Polynomial {
 public:
  using Terms = std::map<Exponents, Integer, GradedLexLess>;

  explicit Polynomial(std::size_t variables = 0) : variables_(variables) {}

  static Polynomial constant(std::size_t variables, const Integer& c);
  // u_{index+1}
  static Polynomial variable(std::size_t variables, std::size_t index);
  static Polynomial monomial(std::size_t variables, Exponents exponents, const Integer& c);

  std::size_t variables() const { return variables_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  std::uint32_t degree_in(std::size_t var) const;
  std::uint32_t total_degree() const;

  // Coefficient of the largest monomial in graded lex order; zero for 0.
  Integer leading_coefficient() const;
  // gcd of the integer coefficients (non-negative).
  Integer content() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const Integer& c) const;
  bool operator==(const Polynomial& other) const = default;

  void add_term(const Exponents& exponents, const Integer& c);

  // Terms in increasing graded lex order, e.g. "1 + u_1 + 2*u_1^2*u_2".
  std::string to_string() const;

 private:
  void require_compatible(const Polynomial& other) const;

  std::size_t variables_;
  Terms terms_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

// a / b when b divides a exactly in Z[u], otherwise nullopt. Throws on b = 0.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

// Greatest common divisor in Z[u_1..u_n], normalized to a positive leading
// coefficient. gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Reduced quotient of two polynomials: gcd(numerator, denominator) = 1 and
// the denominator has a positive leading coefficient, so equal fractions have
// identical storage.
class LaurentFraction {
 public:
  LaurentFraction() : LaurentFraction(Polynomial(0), Polynomial::constant(0, 1)) {}
  LaurentFraction(Polynomial numerator, Polynomial denominator);
  explicit LaurentFraction(Polynomial numerator);

  static LaurentFraction variable(std::size_t variables, std::size_t index);

  const Polynomial& numerator() const { return numerator_; }
  const Polynomial& denominator() const { return denominator_; }
  std::size_t variables() const { return numerator_.variables(); }
  bool is_zero() const { return numerator_.is_zero(); }

  LaurentFraction operator+(const LaurentFraction& other) const;
  LaurentFraction operator-(const LaurentFraction& other) const;
  LaurentFraction operator*(const LaurentFraction& other) const;
  LaurentFraction operator/(const LaurentFraction& other) const;
  bool operator==(const LaurentFraction& other) const = default;

  // "num / den"; multi-term parts are parenthesized, a unit denominator is
  // omitted.
  std::string to_string() const;

 private:
  Polynomial numerator_;
  Polynomial denominator_;
};

// Reduced denominator is +-1 times a monomial.
bool is_laurent(const LaurentFraction& x);

}  // namespace quiverkit
