#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "momentkit/polynomial.hpp"
#include "momentkit/rng.hpp"

using momentkit::Error;
using momentkit::ErrorKind;
using momentkit::Exponent;
using momentkit::GradedLexLess;
using momentkit::Polynomial;
using momentkit::Rng;

namespace {

Polynomial random_int_poly(Rng& rng, int num_vars, int max_degree) {
  Polynomial p(num_vars);
  const int terms = rng.uniform_int(0, 6);
  for (int t = 0; t < terms; ++t) {
    Exponent e(num_vars, 0);
    int budget = max_degree;
    for (int i = 0; i < num_vars; ++i) {
      e[i] = rng.uniform_int(0, budget);
      budget -= e[i];
    }
    p.add_term(e, static_cast<double>(rng.uniform_int(-5, 5)));
  }
  return p;
}

}  // namespace

TEST_CASE("graded lex order") {
  GradedLexLess less;
  CHECK(less({0, 0}, {1, 0}));   // degree first
  CHECK(less({1, 0}, {0, 2}));
  CHECK(less({2, 0}, {1, 1}));   // within a degree, larger leading entry first
  CHECK(less({1, 1}, {0, 2}));
  CHECK_FALSE(less({0, 2}, {1, 1}));
  CHECK_FALSE(less({1, 1}, {1, 1}));
}

TEST_CASE("addition with cancellation and identity") {
  const Polynomial one_plus_x = Polynomial::parse("1 + x1");
  const Polynomial one_minus_x = Polynomial::parse("1 - x1");
  CHECK(one_plus_x + one_minus_x == Polynomial::constant(1, 2.0));

  const Polynomial p = Polynomial::parse("3 + 2 * x1^2");
  CHECK(p + Polynomial(1) == p);

  const Polynomial x1 = Polynomial::variable(2, 0);
  const Polynomial x2 = Polynomial::variable(2, 1);
  CHECK(x1 + x2 == Polynomial::parse("x1 + x2"));

  CHECK_THROWS_AS((void)(Polynomial::variable(2, 0) + Polynomial::variable(3, 0)), Error);
}

TEST_CASE("multiplication") {
  CHECK(Polynomial::parse("1 - x1") * Polynomial::parse("1 + x1") ==
        Polynomial::parse("1 - x1^2"));
  CHECK(Polynomial::parse("1 + x1") * Polynomial::parse("1 + x1") ==
        Polynomial::parse("1 + 2 x1 + x1^2"));
  const Polynomial sum = Polynomial::parse("x1 + x2");
  CHECK(sum * sum == Polynomial::parse("x1^2 + 2 x1 x2 + x2^2"));
}

TEST_CASE("powers") {
  CHECK(Polynomial::parse("1 + x1").pow(2) == Polynomial::parse("1 + 2 x1 + x1^2"));
  CHECK(Polynomial::parse("7 - 3 x1 x2").pow(0) == Polynomial::constant(2, 1.0));
  CHECK(Polynomial::parse("1 - x1^2").pow(2) == Polynomial::parse("1 - 2 x1^2 + x1^4"));
  CHECK_THROWS_AS((void)Polynomial::parse("x1").pow(-1), Error);
}

TEST_CASE("pow matches iterated multiplication exactly on integer coefficients") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int num_vars = rng.uniform_int(1, 3);
    const Polynomial p = random_int_poly(rng, num_vars, 4);
    Polynomial iterated = Polynomial::constant(num_vars, 1.0);
    for (int k = 0; k <= 8; ++k) {
      CHECK(p.pow(k) == iterated);
      iterated = iterated * p;
    }
  }
}

TEST_CASE("ring axioms on random integer polynomials") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int num_vars = rng.uniform_int(1, 3);
    const Polynomial a = random_int_poly(rng, num_vars, 4);
    const Polynomial b = random_int_poly(rng, num_vars, 4);
    const Polynomial c = random_int_poly(rng, num_vars, 4);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("evaluation") {
  const Polynomial p = Polynomial::parse("1 - x1^2");
  CHECK(p.evaluate(std::vector<double>{0.5}) == doctest::Approx(0.75).epsilon(1e-14));

  const Polynomial q = Polynomial::parse("4.5 - 2 x1 x2 + x2^3");
  CHECK(q.evaluate(std::vector<double>{0.0, 0.0}) == 4.5);

  const Polynomial norm2 = Polynomial::parse("x1^2 + x2^2");
  CHECK(norm2.evaluate(std::vector<double>{0.6, 0.8}) == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS((void)p.evaluate(std::vector<double>{0.1, 0.2}), Error);
}

TEST_CASE("evaluation is a ring homomorphism within 1e-12") {
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int num_vars = rng.uniform_int(1, 3);
    Polynomial a(num_vars);
    Polynomial b(num_vars);
    for (int t = 0; t < 4; ++t) {
      Exponent ea(num_vars, 0);
      Exponent eb(num_vars, 0);
      int budget_a = 4;
      int budget_b = 4;
      for (int i = 0; i < num_vars; ++i) {
        ea[i] = rng.uniform_int(0, budget_a);
        budget_a -= ea[i];
        eb[i] = rng.uniform_int(0, budget_b);
        budget_b -= eb[i];
      }
      a.add_term(ea, rng.uniform(-1000.0, 1000.0));
      b.add_term(eb, rng.uniform(-1000.0, 1000.0));
    }
    std::vector<double> point(num_vars);
    for (double& x : point) x = rng.uniform(-1.0, 1.0);
    const double sum_direct = (a + b).evaluate(point);
    const double sum_split = a.evaluate(point) + b.evaluate(point);
    const double prod_direct = (a * b).evaluate(point);
    const double prod_split = a.evaluate(point) * b.evaluate(point);
    const double sum_scale = std::max({1.0, std::abs(sum_direct), std::abs(sum_split)});
    const double prod_scale = std::max({1.0, std::abs(prod_direct), std::abs(prod_split)});
    CHECK(std::abs(sum_direct - sum_split) / sum_scale <= 1e-12);
    CHECK(std::abs(prod_direct - prod_split) / prod_scale <= 1e-12);
  }
}

TEST_CASE("binomial products") {
  const Polynomial x = Polynomial::variable(1, 0);
  CHECK(momentkit::binomial_product(1.0, x, 1, 1) == Polynomial::parse("1 - x1^2"));
  CHECK(momentkit::binomial_product(2.0, x, 0, 0) == Polynomial::constant(1, 1.0));
  CHECK(momentkit::binomial_product(1.0, x, 2, 0) == Polynomial::parse("1 - 2 x1 + x1^2"));
}

TEST_CASE("canonical form drops zero coefficients") {
  Polynomial p(2);
  p.add_term({1, 0}, 2.5);
  p.add_term({1, 0}, -2.5);
  CHECK(p.is_zero());
  CHECK(p.terms().empty());
  CHECK(p.degree() == 0);
}

TEST_CASE("printing") {
  CHECK(Polynomial::parse("1 - x1^2 - x2^2").str() == "1 - x1^2 - x2^2");
  CHECK(Polynomial(3).str() == "0");
  CHECK(Polynomial::parse("-x1 + 0.5 * x2^3").str() == "-x1 + 0.5 * x2^3");
  CHECK(Polynomial::parse("2*x1*x2").str() == "2 * x1 x2");
  // graded-lex print order: constant, degree 1, degree 2 with x1-major first
  CHECK(Polynomial::parse("x2^2 + x1^2 + 1 + x1 x2").str() == "1 + x1^2 + x1 x2 + x2^2");
}

TEST_CASE("parse round trip reproduces the exact term map") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int num_vars = rng.uniform_int(1, 4);
    Polynomial p(num_vars);
    const int terms = rng.uniform_int(0, 8);
    for (int t = 0; t < terms; ++t) {
      Exponent e(num_vars, 0);
      int budget = 6;
      for (int i = 0; i < num_vars; ++i) {
        e[i] = rng.uniform_int(0, budget);
        budget -= e[i];
      }
      p.add_term(e, rng.uniform(-10.0, 10.0));
    }
    const Polynomial back = Polynomial::parse(p.str(), num_vars);
    CHECK(back == p);
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS((void)Polynomial::parse(""), Error);
  CHECK_THROWS_AS((void)Polynomial::parse("1 +"), Error);
  CHECK_THROWS_AS((void)Polynomial::parse("x0"), Error);
  CHECK_THROWS_AS((void)Polynomial::parse("x^2"), Error);
  CHECK_THROWS_AS((void)Polynomial::parse("1 & x1"), Error);
  CHECK_THROWS_AS((void)Polynomial::parse("x3", 2), Error);
  CHECK_NOTHROW((void)Polynomial::parse("x1^1"));
  CHECK(Polynomial::parse("1e-3 * x1") == Polynomial::parse("0.001 x1"));
  CHECK(Polynomial::parse("x1 * x1") == Polynomial::parse("x1^2"));
}
