#pragma once

#include <string>

#include "kmps/int_poly.hpp"
#include "kmps/series.hpp"

namespace kmps {

// Reduced rational function num/den over Z[t], canonical on construction:
// gcd(num, den) = 1 and den(0) = +1 (sign and content live in the numerator).
// Every integer-coefficient rational power series has such a form; inputs
// whose reduced denominator has constant term 0 raise PoleError, any other
// non-unit constant raises DomainError.
class RatFunc {
 public:
  RatFunc() : num_{}, den_{1} {}
  RatFunc(IntPoly num, IntPoly den);
  explicit RatFunc(IntPoly num) : RatFunc(std::move(num), IntPoly{1}) {}
  static RatFunc one() { return RatFunc(IntPoly{1}); }

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

  // Maclaurin coefficients through t^order, by the denominator recurrence.
  Series expand(int order) const;

  std::string pretty(const std::string& var = "t", int exponent_scale = 1) const;

 private:
  IntPoly num_, den_;
};

// r(1/t) rewritten with polynomial numerator and denominator; an involution
// on its domain. Raises PoleError when the result has den(0) = 0.
RatFunc reverse_variable(const RatFunc& r);

}  // namespace kmps
