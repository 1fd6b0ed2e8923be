// Dense univariate polynomials over an exact coefficient ring.
// Coefficients are stored constant term first with no trailing zeros, so
// equality of coefficient vectors is equality of polynomials.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qsym/bigint.hpp"
#include "qsym/ring.hpp"

namespace qsym {

template <Ring C>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long n) {  // NOLINT: implicit by design, ring literal
    if (n != 0) c_.emplace_back(n);
  }
  explicit Polynomial(C constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
  }
  explicit Polynomial(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial variable() {
    Polynomial p;
    p.c_ = {C(0L), C(1L)};
    return p;
  }

  // c * x^k
  static Polynomial term(C coeff, int k) {
    Polynomial p;
    if (coeff.is_zero()) return p;
    p.c_.assign(static_cast<size_t>(k) + 1, C(0L));
    p.c_.back() = std::move(coeff);
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<C>& coeffs() const { return c_; }
  C coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return C(0L);
    return c_[static_cast<size_t>(k)];
  }
  C leading() const { return is_zero() ? C(0L) : c_.back(); }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<C> out(std::max(a.c_.size(), b.c_.size()), C(0L));
    for (size_t i = 0; i < a.c_.size(); ++i) out[i] = out[i] + a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) out[i] = out[i] + b.c_[i];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<C> out(a.c_.size() + b.c_.size() - 1, C(0L));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Euclidean division; requires an invertible (for fields) or unit leading
  // coefficient of d. Returns {quotient, remainder}.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("Polynomial: division by zero");
    Polynomial q;
    Polynomial r = *this;
    const int dd = d.degree();
    while (!r.is_zero() && r.degree() >= dd) {
      C factor = div_coeff(r.leading(), d.leading());
      int shift = r.degree() - dd;
      Polynomial t = term(factor, shift);
      q = q + t;
      r = r - t * d;
      if (r.degree() >= dd + shift) throw std::domain_error("Polynomial: leading coefficient not invertible");
    }
    return {std::move(q), std::move(r)};
  }

  // Quotient of an exact division; throws when a remainder is left.
  Polynomial exact_div(const Polynomial& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::domain_error("Polynomial: inexact division");
    return q;
  }

  // Evaluate at a point of any ring R admitting coefficients of C; this is
  // the specialization homomorphism (e.g. q -> a rational or a root of unity).
  template <Ring R>
  R evaluate(const R& x) const {
    R acc(0L);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + R(c_[i]);
    return acc;
  }

  std::string str(const char* var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const C& a = c_[static_cast<size_t>(k)];
      if (a.is_zero()) continue;
      std::string s = a.str();
      bool neg = !s.empty() && s[0] == '-';
      std::string mag = neg ? s.substr(1) : s;
      // Parenthesize fractions next to a variable so 3/2*q stays unambiguous.
      if (k > 0 && mag.find('/') != std::string::npos) mag = "(" + mag + ")";
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? "-" : "+";
      }
      if (k == 0) {
        out += mag;
      } else {
        if (mag != "1") {
          out += mag;
          out += "*";
        }
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  static C div_coeff(const C& a, const C& b) { return divide_exact(a, b); }

  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<C> c_;
};

// The symbolic deformation parameter q lives in this ring.
using QPolynomial = Polynomial<Rational>;

inline QPolynomial q_variable() { return QPolynomial::variable(); }

}  // namespace qsym
