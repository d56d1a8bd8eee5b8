#include "kmps/series.hpp"

#include <algorithm>

#include "kmps/error.hpp"

namespace kmps {

Series::Series(int order, std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

Series Series::one(int order) {
  Series s(order);
  s.coeffs_[0] = 1;
  return s;
}

Series Series::from_poly(const IntPoly& p, int order) {
  Series s(order);
  for (int k = 0; k <= std::min(order, p.degree()); ++k) s.coeffs_[k] = p.coeff(k);
  return s;
}

Series Series::truncated(int order) const {
  Series s(order);
  for (int k = 0; k <= std::min(order, this->order()); ++k) s.coeffs_[k] = coeffs_[k];
  return s;
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Series operator+(const Series& a, const Series& b) {
  int n = std::min(a.order(), b.order());
  Series r(n);
  for (int k = 0; k <= n; ++k) r[k] = a[k] + b[k];
  return r;
}

Series operator-(const Series& a, const Series& b) {
  int n = std::min(a.order(), b.order());
  Series r(n);
  for (int k = 0; k <= n; ++k) r[k] = a[k] - b[k];
  return r;
}

Series operator*(const Series& a, const Series& b) {
  int n = std::min(a.order(), b.order());
  Series r(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

Series Series::inverse() const {
  const BigInt& c0 = coeffs_[0];
  if (c0 != 1 && c0 != -1) throw DomainError("series inverse requires unit constant term");
  int n = order();
  Series r(n);
  r[0] = c0;  // 1/c0 == c0 for units
  for (int k = 1; k <= n; ++k) {
    BigInt s = 0;
    for (int i = 1; i <= k; ++i) s += coeffs_[i] * r[k - i];
    r[k] = -s * c0;
  }
  return r;
}

bool Series::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

int Series::first_negative() const {
  for (int k = 0; k <= order(); ++k)
    if (coeffs_[k] < 0) return k;
  return -1;
}

}  // namespace kmps
