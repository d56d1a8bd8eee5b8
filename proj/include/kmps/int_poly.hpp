#pragma once

#include <string>
#include <vector>

#include "kmps/bigint.hpp"

namespace kmps {

// Univariate polynomial over arbitrary-precision integers, in the variable t.
// Coefficients are stored ascending; the invariant is that the last stored
// coefficient is nonzero (the zero polynomial stores nothing).
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long long> coeffs);
  explicit IntPoly(std::vector<BigInt> coeffs);
  static IntPoly constant(BigInt c);
  static IntPoly variable();  // t

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int k) const;
  const BigInt& leading() const;

  BigInt eval(const BigInt& x) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  IntPoly times(const BigInt& c) const;
  IntPoly shifted(int k) const;  // multiply by t^k

  // True iff rhs divides *this exactly over the integers; quotient in *q.
  bool try_divide(const IntPoly& rhs, IntPoly* q) const;
  // Exact division; throws DomainError when not divisible.
  IntPoly divide_exact(const IntPoly& rhs) const;

  BigInt content() const;               // gcd of coefficients, >= 0
  IntPoly primitive_part() const;       // content divided out, leading > 0

  std::string pretty(const std::string& var = "t", int exponent_scale = 1) const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

// gcd over Z[t]: contains both the coefficient gcd and the primitive gcd;
// normalized with positive leading coefficient (gcd(0,0) = 0).
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// a*b / gcd(a,b), primitive, sign-normalized to a positive constant term
// (positive leading coefficient when the constant term is zero).
IntPoly poly_lcm(const IntPoly& a, const IntPoly& b);

// [d] = 1 + t + ... + t^{d-1}; requires d >= 1.
IntPoly bracket(int d);

}  // namespace kmps
