#pragma once

#include <vector>

#include "kmps/bigint.hpp"
#include "kmps/series.hpp"

namespace kmps {

// Exponent map of an infinite product: value k -> e_k represents
// prod_{k=1..order} (1 - t^k)^{-e_k}, exponents possibly negative.
class ProductForm {
 public:
  ProductForm() : exps_(1) {}
  explicit ProductForm(int order) : exps_(order + 1) {}

  int order() const { return static_cast<int>(exps_.size()) - 1; }
  // Exponent e_k for 1 <= k <= order.
  const BigInt& exponent(int k) const { return exps_.at(k); }
  BigInt& exponent(int k) { return exps_.at(k); }

  friend bool operator==(const ProductForm& a, const ProductForm& b) = default;

  // Smallest k with e_k < 0, or -1 when all are nonnegative.
  int first_negative() const;

 private:
  std::vector<BigInt> exps_;  // index 0 unused
};

// Unique exponents with prod (1-t^k)^{-e_k} = f (mod t^{order+1}).
// Requires f(0) = 1. Uses the integer recurrence b_n = n f_n - sum b_k f_{n-k}
// for b_n = n [t^n] log f, then Moebius inversion n e_n = sum_{d|n} mu(n/d) b_d.
ProductForm product_decompose(const Series& f);

// Expansion of prod (1-t^k)^{-e_k} through the form's order.
Series product_compose(const ProductForm& p);

}  // namespace kmps
