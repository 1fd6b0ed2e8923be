// Exact arithmetic in cyclotomic fields Q(zeta_m).
//
// An element is a rational polynomial in zeta_m reduced modulo the m-th
// cyclotomic polynomial, so zero-testing and equality are coefficient-vector
// comparisons. Elements of different conductors may be combined only when one
// of them is a plain rational (which embeds into every conductor).
#pragma once

#include <string>
#include <vector>

#include "qsym/bigint.hpp"
#include "qsym/polynomial.hpp"
#include "qsym/ring.hpp"

namespace qsym {

// m-th cyclotomic polynomial, monic of degree phi(m), computed by dividing
// x^m - 1 by the cyclotomic polynomials of the proper divisors of m.
Polynomial<BigInt> cyclotomic_polynomial(int m);

// Euler phi(m) = degree of the m-th cyclotomic polynomial.
int euler_phi(int m);

class CyclotomicNumber {
 public:
  CyclotomicNumber() : conductor_(1), coeffs_(1, Rational(0)) {}
  CyclotomicNumber(long n) : conductor_(1), coeffs_(1, Rational(n)) {}  // NOLINT
  explicit CyclotomicNumber(Rational r) : conductor_(1), coeffs_(1, std::move(r)) {}

  // zeta_m, a primitive m-th root of unity.
  static CyclotomicNumber zeta(int m);
  static CyclotomicNumber constant(int m, const Rational& r);
  // Value of a rational polynomial at zeta_m.
  static CyclotomicNumber from_polynomial(int m, const Polynomial<Rational>& p);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;       // lies in Q (conductor 1/2 or higher-degree coeffs vanish)
  Rational rational_value() const;  // throws when not rational

  CyclotomicNumber operator-() const;
  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

  CyclotomicNumber inverse() const;  // extended Euclid against the defining polynomial

  // Printed as a polynomial in z (the conductor travels separately).
  std::string str() const;

 private:
  CyclotomicNumber(int m, std::vector<Rational> reduced)
      : conductor_(m), coeffs_(std::move(reduced)) {}

  // Re-express in conductor m; only rational values can move between
  // conductors, anything else throws.
  CyclotomicNumber promoted(int m) const;

  int conductor_;
  std::vector<Rational> coeffs_;  // length phi(conductor), basis 1, z, ..., z^{phi-1}
};

// rho_p = -zeta_{p+1}: the deformation parameter whose negation is a
// primitive (p+1)-th root of unity.
CyclotomicNumber rho(int p);

}  // namespace qsym
