#include "qsym/cyclotomic.hpp"

#include <map>
#include <stdexcept>

namespace qsym {

namespace {

Polynomial<BigInt> compute_cyclotomic(int m, const std::map<int, Polynomial<BigInt>>& lower) {
  // x^m - 1 divided by Phi_d for every proper divisor d of m.
  std::vector<BigInt> xm(static_cast<size_t>(m) + 1, BigInt(0));
  xm[0] = BigInt(-1);
  xm[static_cast<size_t>(m)] = BigInt(1);
  Polynomial<BigInt> num{std::vector<BigInt>(xm)};
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) num = num.exact_div(lower.at(d));
  }
  return num;
}

const std::map<int, Polynomial<BigInt>>& cyclotomic_table() {
  static const std::map<int, Polynomial<BigInt>> table = [] {
    std::map<int, Polynomial<BigInt>> t;
    for (int m = 1; m <= 64; ++m) t.emplace(m, compute_cyclotomic(m, t));
    return t;
  }();
  return table;
}

// Reduction data for one conductor: Phi_m over Q plus its degree.
struct FieldData {
  Polynomial<Rational> modulus;
  int degree;
};

// Read-only after first use, so concurrent reductions need no locking.
const FieldData& field_data(int m) {
  static const std::map<int, FieldData> table = [] {
    std::map<int, FieldData> t;
    for (const auto& [cond, phi] : cyclotomic_table()) {
      std::vector<Rational> coeffs;
      coeffs.reserve(static_cast<size_t>(phi.degree()) + 1);
      for (const auto& c : phi.coeffs()) coeffs.emplace_back(c, BigInt(1));
      t.emplace(cond, FieldData{Polynomial<Rational>(std::move(coeffs)), phi.degree()});
    }
    return t;
  }();
  auto it = table.find(m);
  if (it == table.end()) throw std::domain_error("CyclotomicNumber: conductor too large");
  return it->second;
}

std::vector<Rational> reduce_mod_phi(int m, const Polynomial<Rational>& p) {
  const FieldData& fd = field_data(m);
  Polynomial<Rational> r = p.divmod(fd.modulus).second;
  std::vector<Rational> out(static_cast<size_t>(fd.degree), Rational(0));
  for (int k = 0; k <= r.degree(); ++k) out[static_cast<size_t>(k)] = r.coeff(k);
  return out;
}

}  // namespace

Polynomial<BigInt> cyclotomic_polynomial(int m) {
  if (m < 1) throw std::domain_error("cyclotomic_polynomial: m must be positive");
  if (m <= 64) return cyclotomic_table().at(m);
  // Large conductors are computed on the fly; nothing here needs them.
  std::map<int, Polynomial<BigInt>> t;
  for (int d = 1; d <= m; ++d) {
    if (m % d == 0) t.emplace(d, compute_cyclotomic(d, t));
  }
  return t.at(m);
}

int euler_phi(int m) { return cyclotomic_polynomial(m).degree(); }

CyclotomicNumber CyclotomicNumber::zeta(int m) {
  if (m < 1) throw std::domain_error("CyclotomicNumber: conductor must be positive");
  return from_polynomial(m, Polynomial<Rational>::variable());
}

CyclotomicNumber CyclotomicNumber::constant(int m, const Rational& r) {
  return from_polynomial(m, Polynomial<Rational>(r));
}

CyclotomicNumber CyclotomicNumber::from_polynomial(int m, const Polynomial<Rational>& p) {
  if (m < 1) throw std::domain_error("CyclotomicNumber: conductor must be positive");
  return CyclotomicNumber(m, reduce_mod_phi(m, p));
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return false;
  }
  // In conductor 2 the basis element is 1 (zeta = -1 is already reduced away),
  // so a constant coefficient vector is rational for every conductor.
  return true;
}

Rational CyclotomicNumber::rational_value() const {
  if (!is_rational()) throw std::domain_error("CyclotomicNumber: not rational");
  return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::promoted(int m) const {
  if (conductor_ == m) return *this;
  if (!is_rational()) throw std::invalid_argument("CyclotomicNumber: conductor mismatch");
  return constant(m, coeffs_[0]);
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c = -c;
  return CyclotomicNumber(conductor_, std::move(out));
}

namespace {
// Pick the common conductor for a binary operation.
int unified_conductor(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.conductor() == b.conductor()) return a.conductor();
  if (a.is_rational()) return b.conductor();
  if (b.is_rational()) return a.conductor();
  throw std::invalid_argument("CyclotomicNumber: conductor mismatch");
}
}  // namespace

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  int m = unified_conductor(a, b);
  CyclotomicNumber x = a.promoted(m), y = b.promoted(m);
  for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
  return x;
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  return a + (-b);
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  int m = unified_conductor(a, b);
  CyclotomicNumber x = a.promoted(m), y = b.promoted(m);
  const size_t deg = x.coeffs_.size();
  if (deg == 1) {
    return CyclotomicNumber(m, {x.coeffs_[0] * y.coeffs_[0]});
  }
  std::vector<Rational> prod(2 * deg - 1, Rational(0));
  for (size_t i = 0; i < deg; ++i) {
    if (x.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < deg; ++j) {
      if (y.coeffs_[j].is_zero()) continue;
      prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  return CyclotomicNumber(m, reduce_mod_phi(m, Polynomial<Rational>(std::move(prod))));
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.conductor() == b.conductor()) return a.coeffs_ == b.coeffs_;
  if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
  return false;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw std::domain_error("CyclotomicNumber: inverse of zero");
  if (is_rational()) return constant(conductor_, coeffs_[0].inverse());
  // Extended Euclid over Q[x]: u*a + v*Phi = gcd = nonzero constant.
  const Polynomial<Rational>& phi = field_data(conductor_).modulus;
  Polynomial<Rational> a{std::vector<Rational>(coeffs_)};
  Polynomial<Rational> r0 = phi, r1 = a;
  Polynomial<Rational> t0, t1 = Polynomial<Rational>(1L);
  while (!r1.is_zero() && r1.degree() > 0) {
    auto [q, r] = r0.divmod(r1);
    r0 = r1;
    r1 = r;
    Polynomial<Rational> t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r1.is_zero()) throw std::domain_error("CyclotomicNumber: not invertible");
  // r1 is a nonzero constant: t1 * a = r1 (mod Phi).
  Rational scale = r1.coeff(0).inverse();
  std::vector<Rational> out;
  out.reserve(static_cast<size_t>(t1.degree()) + 1);
  for (const auto& c : t1.coeffs()) out.push_back(c * scale);
  return from_polynomial(conductor_, Polynomial<Rational>(std::move(out)));
}

std::string CyclotomicNumber::str() const {
  return Polynomial<Rational>(std::vector<Rational>(coeffs_)).str("z");
}

CyclotomicNumber rho(int p) {
  if (p < 1) throw std::domain_error("rho: p must be positive");
  return -CyclotomicNumber::zeta(p + 1);
}

}  // namespace qsym
