// Arbitrary-precision integers and rationals, thin value wrappers over GMP.
// Wrapping (rather than using mpz_class/mpq_class directly) keeps expression
// templates out of generic ring code and pins down a single canonical form.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace qsym {

class BigInt {
 public:
  BigInt() : v_(0) {}
  BigInt(long n) : v_(n) {}           // NOLINT: implicit by design, ring literal
  explicit BigInt(const std::string& s) : v_(s) {}
  explicit BigInt(mpz_class z) : v_(std::move(z)) {}

  const mpz_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  BigInt operator-() const { return BigInt(mpz_class(-v_)); }
  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }

  friend BigInt operator+(BigInt a, const BigInt& b) { a += b; return a; }
  friend BigInt operator-(BigInt a, const BigInt& b) { a -= b; return a; }
  friend BigInt operator*(BigInt a, const BigInt& b) { a *= b; return a; }

  // Quotient of an exact division; throws if the division leaves a remainder.
  BigInt exact_div(const BigInt& d) const {
    if (d.is_zero()) throw std::domain_error("BigInt: division by zero");
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
    if (sgn(r) != 0) throw std::domain_error("BigInt: inexact division");
    return BigInt(std::move(q));
  }

  static BigInt gcd(const BigInt& a, const BigInt& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return BigInt(std::move(g));
  }

  friend bool operator==(const BigInt& a, const BigInt& b) { return a.v_ == b.v_; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return a.v_ != b.v_; }
  friend bool operator<(const BigInt& a, const BigInt& b) { return a.v_ < b.v_; }

  bool fits_int64() const { return v_.fits_slong_p(); }
  int64_t to_int64() const { return v_.get_si(); }
  std::string str() const { return v_.get_str(); }

 private:
  mpz_class v_;
};

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}         // NOLINT: implicit by design, ring literal
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  Rational(const BigInt& num, const BigInt& den) : v_(num.raw(), den.raw()) {
    if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const BigInt& n) : v_(n.raw()) {}
  explicit Rational(mpq_class q) : v_(std::move(q)) {}

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  BigInt numerator() const { return BigInt(mpz_class(v_.get_num())); }
  BigInt denominator() const { return BigInt(mpz_class(v_.get_den())); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  // "a" when integral, otherwise "a/b".
  std::string str() const { return v_.get_str(); }

  static Rational from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: bad literal '" + s + "'");
    q.canonicalize();
    return Rational(std::move(q));
  }

 private:
  mpq_class v_;
};

}  // namespace qsym
