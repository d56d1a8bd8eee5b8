#include "kmps/rat_func.hpp"

#include <algorithm>

#include "kmps/error.hpp"

namespace kmps {

RatFunc::RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = IntPoly{1};
    return;
  }
  IntPoly g = poly_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
  }
  BigInt c0 = den_.coeff(0);
  if (c0 == 0) throw PoleError("reduced denominator vanishes at t = 0");
  if (c0 < 0) {
    num_ = -num_;
    den_ = -den_;
    c0 = -c0;
  }
  if (c0 != 1) throw DomainError("reduced denominator has non-unit constant term");
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DomainError("division by zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

Series RatFunc::expand(int order) const {
  // den(0) = 1 by the canonical form, so s_k = num_k - sum den_i s_{k-i}.
  Series s(order);
  for (int k = 0; k <= order; ++k) {
    BigInt acc = num_.coeff(k);
    int top = std::min(k, den_.degree());
    for (int i = 1; i <= top; ++i) acc -= den_.coeff(i) * s[k - i];
    s[k] = acc;
  }
  return s;
}

RatFunc reverse_variable(const RatFunc& r) {
  if (r.is_zero()) return r;
  int d = std::max(r.num().degree(), r.den().degree());
  auto rev = [d](const IntPoly& p) {
    std::vector<BigInt> out(d + 1);
    for (int k = 0; k <= p.degree(); ++k) out[d - k] = p.coeff(k);
    return IntPoly(std::move(out));
  };
  return RatFunc(rev(r.num()), rev(r.den()));
}

std::string RatFunc::pretty(const std::string& var, int exponent_scale) const {
  if (den_.is_one()) return num_.pretty(var, exponent_scale);
  return "(" + num_.pretty(var, exponent_scale) + ") / (" + den_.pretty(var, exponent_scale) + ")";
}

}  // namespace kmps
