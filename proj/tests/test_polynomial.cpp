#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "quiverkit/polynomial.hpp"

using namespace quiverkit;
using Rational = boost::multiprecision::cpp_rational;

namespace {

Rational evaluate(const Polynomial& p, const std::vector<Rational>& point) {
  Rational total = 0;
  for (const auto& [exps, coeff] : p.terms()) {
    Rational term(coeff);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      for (std::uint32_t e = 0; e < exps[i]; ++e) term *= point[i];
    }
    total += term;
  }
  return total;
}

Rational evaluate(const LaurentFraction& f, const std::vector<Rational>& point) {
  return evaluate(f.numerator(), point) / evaluate(f.denominator(), point);
}

struct Generator {
  std::mt19937_64 rng;
  std::size_t vars;

  Polynomial polynomial(int max_terms, int max_degree) {
    std::uniform_int_distribution<int> terms(1, max_terms);
    std::uniform_int_distribution<int> degree(0, max_degree);
    std::uniform_int_distribution<int> coeff(-5, 5);
    Polynomial p(vars);
    for (int t = terms(rng); t > 0; --t) {
      Exponents e(vars);
      for (auto& x : e) x = static_cast<std::uint32_t>(degree(rng));
      p.add_term(e, coeff(rng));
    }
    return p;
  }

  Polynomial nonzero(int max_terms, int max_degree) {
    for (;;) {
      Polynomial p = polynomial(max_terms, max_degree);
      if (!p.is_zero()) return p;
    }
  }

  std::vector<Rational> point() {
    std::uniform_int_distribution<int> value(-7, 7);
    std::vector<Rational> out(vars);
    for (auto& x : out) x = value(rng);
    return out;
  }
};

}  // namespace

TEST_CASE("graded lexicographic order and rendering") {
  GradedLexLess less;
  CHECK(less({1, 0}, {0, 1}));
  CHECK(less({0, 1}, {2, 0}));
  CHECK(less({2, 0}, {1, 1}));
  CHECK_FALSE(less({1, 1}, {1, 1}));

  Polynomial u1 = Polynomial::variable(2, 0);
  Polynomial u2 = Polynomial::variable(2, 1);
  Polynomial one = Polynomial::constant(2, 1);
  Polynomial p = u1 * u1 * u2 * Polynomial::constant(2, 2) + u1 + one;
  CHECK(p.to_string() == "1 + u_1 + 2*u_1^2*u_2");
  CHECK((u1 - u2).to_string() == "u_1 - u_2");
  CHECK(Polynomial(2).to_string() == "0");
  CHECK(p.total_degree() == 3);
  CHECK(p.degree_in(0) == 2);
  CHECK(p.leading_coefficient() == 2);
  CHECK((p.scaled(6)).content() == 6);
  CHECK(pow(u1 + one, 3).to_string() == "1 + 3*u_1 + 3*u_1^2 + u_1^3");
}

TEST_CASE("ring operations agree with evaluation") {
  Generator gen{std::mt19937_64(11), 3};
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial a = gen.polynomial(4, 3);
    Polynomial b = gen.polynomial(4, 3);
    auto x = gen.point();
    CHECK(evaluate(a + b, x) == evaluate(a, x) + evaluate(b, x));
    CHECK(evaluate(a - b, x) == evaluate(a, x) - evaluate(b, x));
    CHECK(evaluate(a * b, x) == evaluate(a, x) * evaluate(b, x));
    CHECK(evaluate(pow(a, 2), x) == evaluate(a, x) * evaluate(a, x));
  }
}

TEST_CASE("exact division and gcd") {
  Generator gen{std::mt19937_64(12), 3};
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial a = gen.nonzero(3, 2);
    Polynomial b = gen.nonzero(3, 2);
    Polynomial c = gen.nonzero(3, 2);
    CHECK(divide_exact(a * c, c) == a);
    Polynomial g = gcd(a * c, b * c);
    CHECK(g.leading_coefficient() > 0);
    CHECK(divide_exact(g, c).has_value());
    CHECK(divide_exact(a * c, g).has_value());
    CHECK(divide_exact(b * c, g).has_value());
  }
  Polynomial u1 = Polynomial::variable(2, 0);
  Polynomial one = Polynomial::constant(2, 1);
  CHECK_FALSE(divide_exact(u1 + one, u1).has_value());
  CHECK(gcd(u1 * u1 - one, u1 * u1 + u1 * Polynomial::constant(2, 2) + one) == u1 + one);
  CHECK(gcd(Polynomial(2), Polynomial(2)).is_zero());
  CHECK_THROWS_AS(divide_exact(u1, Polynomial(2)), std::domain_error);
}

TEST_CASE("fractions reduce to a canonical form") {
  Generator gen{std::mt19937_64(13), 3};
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial a = gen.nonzero(3, 2);
    Polynomial b = gen.nonzero(3, 2);
    Polynomial c = gen.nonzero(3, 2);
    LaurentFraction reduced(a, b);
    CHECK(LaurentFraction(a * c, b * c) == reduced);
    CHECK(LaurentFraction(a.scaled(-1), b.scaled(-1)) == reduced);
    CHECK(reduced.denominator().leading_coefficient() > 0);
    CHECK(gcd(reduced.numerator(), reduced.denominator()).is_constant());
  }
}

TEST_CASE("fraction arithmetic agrees with evaluation") {
  Generator gen{std::mt19937_64(14), 2};
  int compared = 0;
  for (int trial = 0; trial < 100; ++trial) {
    LaurentFraction f(gen.nonzero(3, 2), gen.nonzero(2, 2));
    LaurentFraction g(gen.nonzero(3, 2), gen.nonzero(2, 2));
    auto x = gen.point();
    if (evaluate(f.denominator(), x) == 0 || evaluate(g.denominator(), x) == 0 || evaluate(g.numerator(), x) == 0) {
      continue;
    }
    ++compared;
    CHECK(evaluate(f + g, x) == evaluate(f, x) + evaluate(g, x));
    CHECK(evaluate(f - g, x) == evaluate(f, x) - evaluate(g, x));
    CHECK(evaluate(f * g, x) == evaluate(f, x) * evaluate(g, x));
    CHECK(evaluate(f / g, x) == evaluate(f, x) / evaluate(g, x));
  }
  CHECK(compared > 50);
}

TEST_CASE("fraction rendering and the Laurent test") {
  auto u1 = LaurentFraction::variable(2, 0);
  auto u2 = LaurentFraction::variable(2, 1);
  LaurentFraction one(Polynomial::constant(2, 1));
  CHECK(((one + u2) / u1).to_string() == "(1 + u_2) / u_1");
  CHECK(((one + u1 + u2) / (u1 * u2)).to_string() == "(1 + u_1 + u_2) / (u_1*u_2)");
  CHECK(u1.to_string() == "u_1");
  CHECK((u1 / u2).to_string() == "u_1 / u_2");
  CHECK(is_laurent((one + u2) / u1));
  CHECK_FALSE(is_laurent(u1 / (one + u2)));
  CHECK_FALSE(is_laurent(u1 / LaurentFraction(Polynomial::constant(2, 2))));
  CHECK((u1 - u1).is_zero());
  CHECK_THROWS_AS(u1 / (u2 - u2), std::domain_error);
}
