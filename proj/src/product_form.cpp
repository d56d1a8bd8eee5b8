#include "kmps/product_form.hpp"

#include <vector>

#include "kmps/error.hpp"

namespace kmps {

namespace {

std::vector<int> moebius_table(int n) {
  std::vector<int> mu(n + 1, 1);
  std::vector<bool> composite(n + 1, false);
  std::vector<int> primes;
  for (int i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (int p : primes) {
      long long ip = 1LL * i * p;
      if (ip > n) break;
      composite[ip] = true;
      if (i % p == 0) {
        mu[ip] = 0;
        break;
      }
      mu[ip] = -mu[i];
    }
  }
  return mu;
}

}  // namespace

int ProductForm::first_negative() const {
  for (int k = 1; k <= order(); ++k)
    if (exps_[k] < 0) return k;
  return -1;
}

ProductForm product_decompose(const Series& f) {
  if (f[0] != 1) throw DomainError("product decomposition requires constant term 1");
  int n = f.order();
  std::vector<BigInt> b(n + 1);
  for (int m = 1; m <= n; ++m) {
    BigInt s = m * f[m];
    for (int k = 1; k < m; ++k) s -= b[k] * f[m - k];
    b[m] = s;
  }
  std::vector<int> mu = moebius_table(n);
  ProductForm p(n);
  for (int m = 1; m <= n; ++m) {
    BigInt s = 0;
    for (int d = 1; d <= m; ++d)
      if (m % d == 0 && mu[m / d] != 0) s += mu[m / d] * b[d];
    if (s % m != 0)
      throw DomainError("non-integral product exponent at k = " + std::to_string(m));
    p.exponent(m) = s / m;
  }
  return p;
}

Series product_compose(const ProductForm& p) {
  int n = p.order();
  Series result = Series::one(n);
  for (int k = 1; k <= n; ++k) {
    const BigInt& e = p.exponent(k);
    if (e == 0) continue;
    // factor (1 - t^k)^{-e} as a binomial series in t^k
    Series factor(n);
    factor[0] = 1;
    if (e > 0) {
      BigInt binom = 1;
      for (int j = 1; j * k <= n; ++j) {
        // C(e+j-1, j) built incrementally
        binom = binom * (e + j - 1) / j;
        factor[j * k] = binom;
      }
    } else {
      BigInt m = -e;
      BigInt binom = 1;
      for (int j = 1; j * k <= n; ++j) {
        if (j > m) break;
        binom = binom * (m - j + 1) / j;
        factor[j * k] = (j % 2 == 0) ? binom : -binom;
      }
    }
    result = result * factor;
  }
  return result;
}

}  // namespace kmps
