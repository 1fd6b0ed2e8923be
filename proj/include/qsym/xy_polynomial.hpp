// Bivariate integer polynomials in x and y, kept in sorted term order.
#pragma once

#include <map>
#include <string>
#include <utility>

#include "qsym/bigint.hpp"

namespace qsym {

class XYPolynomial {
 public:
  XYPolynomial() = default;
  XYPolynomial(long n) {  // NOLINT: implicit by design, ring literal
    if (n != 0) terms_[{0, 0}] = BigInt(n);
  }

  static XYPolynomial x() { return term(BigInt(1), 1, 0); }
  static XYPolynomial y() { return term(BigInt(1), 0, 1); }
  static XYPolynomial term(BigInt coeff, int dx, int dy) {
    XYPolynomial p;
    if (!coeff.is_zero()) p.terms_[{dx, dy}] = std::move(coeff);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<int, int>, BigInt>& terms() const { return terms_; }

  XYPolynomial operator-() const {
    XYPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend XYPolynomial operator+(const XYPolynomial& a, const XYPolynomial& b) {
    XYPolynomial r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e.first, e.second, c);
    return r;
  }
  friend XYPolynomial operator-(const XYPolynomial& a, const XYPolynomial& b) { return a + (-b); }
  friend XYPolynomial operator*(const XYPolynomial& a, const XYPolynomial& b) {
    XYPolynomial r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
      }
    }
    return r;
  }
  friend bool operator==(const XYPolynomial& a, const XYPolynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const XYPolynomial& a, const XYPolynomial& b) { return !(a == b); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      std::string s = c.str();
      bool neg = s[0] == '-';
      std::string mag = neg ? s.substr(1) : s;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? "-" : "+";
      }
      bool has_var = e.first > 0 || e.second > 0;
      if (!has_var || mag != "1") out += mag;
      if (e.first > 0) {
        out += "x";
        if (e.first > 1) out += "^" + std::to_string(e.first);
      }
      if (e.second > 0) {
        out += "y";
        if (e.second > 1) out += "^" + std::to_string(e.second);
      }
    }
    return out;
  }

 private:
  void add_term(int dx, int dy, const BigInt& c) {
    auto key = std::make_pair(dx, dy);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(key, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<std::pair<int, int>, BigInt> terms_;
};

}  // namespace qsym
