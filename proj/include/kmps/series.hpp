#pragma once

#include <vector>

#include "kmps/bigint.hpp"
#include "kmps/int_poly.hpp"

namespace kmps {

// Truncated power series: coefficients of t^0 .. t^order, exact integers.
// Binary operations between different orders truncate to the smaller one.
class Series {
 public:
  Series() : coeffs_(1) {}
  explicit Series(int order) : coeffs_(order + 1) {}
  Series(int order, std::vector<BigInt> coeffs);
  static Series one(int order);
  static Series from_poly(const IntPoly& p, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& operator[](int k) const { return coeffs_[k]; }
  BigInt& operator[](int k) { return coeffs_[k]; }

  Series truncated(int order) const;

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend bool operator==(const Series& a, const Series& b) = default;

  // Multiplicative inverse; requires unit constant term (+-1).
  Series inverse() const;
  friend Series operator/(const Series& a, const Series& b) {
    return a * b.inverse();
  }

  bool is_zero() const;
  // Smallest k with coeff < 0, or -1 when all are nonnegative.
  int first_negative() const;

 private:
  std::vector<BigInt> coeffs_;
};

}  // namespace kmps
