#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qsym/cyclotomic.hpp"
#include "qsym/polynomial.hpp"
#include "qsym/xy_polynomial.hpp"

using namespace qsym;

TEST_CASE("rational arithmetic and canonical form") {
  Rational a(1, 3), b(2, 5);
  CHECK(a + b == Rational(11, 15));
  CHECK(a * b == Rational(2, 15));
  CHECK((a - a).is_zero());
  CHECK(Rational(4, 6) == Rational(2, 3));
  CHECK(Rational(-4, 6).str() == "-2/3");
  CHECK(Rational(2, 3).inverse() == Rational(3, 2));
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK(Rational::from_string("-7/4") == Rational(-7, 4));
}

TEST_CASE("polynomial ring basics") {
  QPolynomial q = q_variable();
  QPolynomial p = (q - QPolynomial(1L)) * (q - QPolynomial(1L));
  CHECK(p.str("q") == "q^2-2*q+1");
  CHECK(p.coeff(2) == Rational(1));
  CHECK(p.coeff(1) == Rational(-2));
  auto [quot, rem] = p.divmod(q - QPolynomial(1L));
  CHECK(quot == q - QPolynomial(1L));
  CHECK(rem.is_zero());
  CHECK_THROWS_AS(p.exact_div(q + QPolynomial(1L)), std::domain_error);
  CHECK((-q).str("q") == "-q");
  CHECK((QPolynomial(Rational(3, 2)) * q).str("q") == "(3/2)*q");
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1).str() == "x-1");
  CHECK(cyclotomic_polynomial(2).str() == "x+1");
  CHECK(cyclotomic_polynomial(3).str() == "x^2+x+1");
  CHECK(cyclotomic_polynomial(4).str() == "x^2+1");
  CHECK(cyclotomic_polynomial(6).str() == "x^2-x+1");
  for (int m = 1; m <= 12; ++m) {
    // product over divisors reconstructs x^m - 1
    Polynomial<BigInt> prod(1L);
    for (int d = 1; d <= m; ++d) {
      if (m % d == 0) prod = prod * cyclotomic_polynomial(d);
    }
    std::vector<BigInt> xm(static_cast<size_t>(m) + 1, BigInt(0));
    xm[0] = BigInt(-1);
    xm.back() = BigInt(1);
    CHECK(prod == Polynomial<BigInt>(std::move(xm)));
    CHECK(cyclotomic_polynomial(m).leading() == BigInt(1));
  }
  CHECK(euler_phi(5) == 4);
  CHECK(euler_phi(8) == 4);
}

TEST_CASE("rho is minus a primitive root of unity") {
  CHECK(rho(1).is_rational());
  CHECK(rho(1).rational_value() == Rational(1));
  CHECK(rho(1).conductor() == 2);
  CHECK(rho(2) == -CyclotomicNumber::zeta(3));
  for (int p = 1; p <= 6; ++p) {
    const CyclotomicNumber mr = -rho(p);
    CHECK(ring_pow(mr, p + 1) == CyclotomicNumber(1L));
    for (int j = 1; j <= p; ++j) CHECK(ring_pow(mr, j) != CyclotomicNumber(1L));
  }
}

TEST_CASE("q-integers") {
  CHECK(q_integer(5, Rational(1)) == Rational(5));
  CHECK(q_integer(0, Rational(7)).is_zero());
  QPolynomial q = q_variable();
  CHECK(q_integer(3, -q).str("q") == "q^2-q+1");
  for (int p = 1; p <= 6; ++p) {
    CHECK(q_integer(p + 1, -rho(p)).is_zero());
    for (int n = 1; n <= p; ++n) CHECK(!q_integer(n, -rho(p)).is_zero());
  }
}

TEST_CASE("cyclotomic field axioms at random elements") {
  std::mt19937 gen(20240911);
  std::uniform_int_distribution<int> coeff(-6, 6);
  for (int m = 1; m <= 8; ++m) {
    const int deg = euler_phi(m);
    auto random_element = [&] {
      while (true) {
        std::vector<Rational> cs;
        for (int i = 0; i < deg; ++i) cs.emplace_back(coeff(gen), 1 + (coeff(gen) & 3));
        CyclotomicNumber x = CyclotomicNumber::from_polynomial(m, Polynomial<Rational>(std::move(cs)));
        if (!x.is_zero()) return x;
      }
    };
    for (int trial = 0; trial < 200; ++trial) {
      const CyclotomicNumber a = random_element(), b = random_element();
      CHECK((a * b) * a.inverse() == b);
      CHECK(a * a.inverse() == CyclotomicNumber(1L));
      CHECK((a + b) - b == a);
    }
  }
}

TEST_CASE("specialization commutes with ring operations") {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> coeff(-5, 5);
  auto random_poly = [&] {
    std::vector<Rational> cs;
    for (int i = 0; i < 5; ++i) cs.emplace_back(coeff(gen), 1);
    return QPolynomial(std::move(cs));
  };
  for (int p = 1; p <= 4; ++p) {
    const CyclotomicNumber root = rho(p);
    for (int trial = 0; trial < 50; ++trial) {
      const QPolynomial f = random_poly(), g = random_poly();
      CHECK((f + g).evaluate(root) == f.evaluate(root) + g.evaluate(root));
      CHECK((f * g).evaluate(root) == f.evaluate(root) * g.evaluate(root));
      const Rational at(3, 7);
      CHECK((f * g).evaluate(at) == f.evaluate(at) * g.evaluate(at));
    }
  }
}

TEST_CASE("conductor rules") {
  const CyclotomicNumber z3 = CyclotomicNumber::zeta(3);
  const CyclotomicNumber z4 = CyclotomicNumber::zeta(4);
  CHECK_THROWS_AS(z3 + z4, std::invalid_argument);
  CHECK(z3 + CyclotomicNumber(1L) == CyclotomicNumber::from_polynomial(
                                         3, Polynomial<Rational>(std::vector<Rational>{1, 1})));
  CHECK(z3 != z4);
  // rationals embedded at different conductors still compare equal
  CHECK(CyclotomicNumber::constant(3, Rational(5)) == CyclotomicNumber::constant(4, Rational(5)));
  // zeta_2 reduces to the rational -1
  CHECK(CyclotomicNumber::zeta(2).is_rational());
  CHECK(CyclotomicNumber::zeta(2).rational_value() == Rational(-1));
}

TEST_CASE("bivariate integer polynomials") {
  const XYPolynomial x = XYPolynomial::x(), y = XYPolynomial::y();
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK(((x + y) * (x + y)).str() == "x^2+2xy+y^2");
  CHECK((x - x).is_zero());
}
