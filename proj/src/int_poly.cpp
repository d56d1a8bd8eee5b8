#include "kmps/int_poly.hpp"

#include <algorithm>
#include <sstream>

#include "kmps/error.hpp"

namespace kmps {

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPoly IntPoly::constant(BigInt c) {
  IntPoly p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

IntPoly IntPoly::variable() { return IntPoly{0, 1}; }

bool IntPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

BigInt IntPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

const BigInt& IntPoly::leading() const {
  if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
  return coeffs_.back();
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

IntPoly IntPoly::times(const BigInt& c) const {
  if (c == 0) return {};
  IntPoly r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

IntPoly IntPoly::shifted(int k) const {
  if (is_zero()) return {};
  IntPoly r;
  r.coeffs_.assign(k, 0);
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

bool IntPoly::try_divide(const IntPoly& rhs, IntPoly* q) const {
  if (rhs.is_zero()) throw DomainError("polynomial division by zero");
  if (is_zero()) {
    *q = IntPoly{};
    return true;
  }
  if (degree() < rhs.degree()) return false;
  std::vector<BigInt> rem = coeffs_;
  std::vector<BigInt> quot(degree() - rhs.degree() + 1);
  const BigInt& lead = rhs.coeffs_.back();
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    BigInt top = rem[k + rhs.degree()];
    if (top == 0) continue;
    if (top % lead != 0) return false;
    BigInt c = top / lead;
    quot[k] = c;
    for (int j = 0; j <= rhs.degree(); ++j) rem[k + j] -= c * rhs.coeffs_[j];
  }
  for (const auto& c : rem)
    if (c != 0) return false;
  *q = IntPoly(std::move(quot));
  return true;
}

IntPoly IntPoly::divide_exact(const IntPoly& rhs) const {
  IntPoly q;
  if (!try_divide(rhs, &q)) throw DomainError("polynomial division is not exact");
  return q;
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (coeffs_.back() < 0) g = -g;
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c /= g;
  return r;
}

namespace {

// One step of pseudo-division: lead(b)^(da-db+1) * a = q*b + r. Only the
// remainder is needed for the gcd loop.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
  const BigInt& lead = b.coeffs().back();
  int db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    int shift = a.degree() - db;
    BigInt c = a.coeffs().back();
    a = a.times(lead) - b.times(c).shifted(shift);
  }
  return a;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.is_zero() ? IntPoly{} : b.primitive_part().times(b.content());
  if (b.is_zero()) return a.primitive_part().times(a.content());
  BigInt cont = boost::multiprecision::gcd(a.content(), b.content());
  IntPoly u = a.primitive_part();
  IntPoly v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPoly r = pseudo_rem(u, v).primitive_part();
    u = std::move(v);
    v = std::move(r);
  }
  return u.primitive_part().times(cont);
}

IntPoly poly_lcm(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("lcm of zero polynomial");
  IntPoly l = (a * b).divide_exact(poly_gcd(a, b)).primitive_part();
  BigInt c0 = l.coeff(0);
  if (c0 < 0 || (c0 == 0 && l.leading() < 0)) l = -l;
  return l;
}

IntPoly bracket(int d) {
  if (d < 1) throw DomainError("bracket requires d >= 1");
  std::vector<BigInt> c(d, 1);
  return IntPoly(std::move(c));
}

std::string IntPoly::pretty(const std::string& var, int exponent_scale) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    size_t e = k * exponent_scale;
    if (k == 0) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str() << "*";
      out << var;
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

}  // namespace kmps
