#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kmps/cartan.hpp"
#include "kmps/product_form.hpp"
#include "kmps/rat_func.hpp"

namespace kmps {

// Hilbert series of the even-generator subring: C(t) = P(t) (1-t)^n / (1-t^2)^eps.
RatFunc chow_hilbert(const RatFunc& flag, int rank, int epsilon);

struct EvenRanks {
  std::map<int, BigInt> ranks;          // k -> i_{2k}, k >= 2
  bool k1_zero = true;                  // exponent at k = 1 must vanish
  std::optional<int> first_negative;    // k with i_{2k} < 0, if any
};

// Product-form exponents of C through the given order; k = 1 must come out 0.
EvenRanks even_ranks_from_chow(const RatFunc& chow, int order);

struct QFactorization {
  std::vector<int> brackets;   // multiset {t_i}, ascending
  IntPoly q;                   // P = prod [t_i] / Q, Q(0) = 1
  IntPoly remainder;           // 1 unless bracket peeling stalled
};

// Splits P as prod [t_i] / Q where prod [t_i] is the lcm of the finite-type
// parabolic Poincare polynomials and Q(0) = 1.
QFactorization q_factorization(const RatFunc& flag, const CoxeterMatrix& x);

struct RankReport {
  int epsilon = 0;
  RatFunc flag;
  std::vector<int> numerator_brackets;
  IntPoly q;
  ProductForm lie_dims;                 // j_k of 1/Q
  std::map<int, BigInt> even_ranks;     // k -> i_{2k} (route B, asserted == route A)
  int odd_rank3 = 0;                    // i_3 = epsilon; other odd ranks vanish
  bool route_consistent = false;
  IntPoly bracket_remainder;
  std::vector<std::string> warnings;
};

// Full pipeline: epsilon, flag series, Q-factorization, lie dimensions and
// both rank routes. Degenerate inputs (finite, affine, decomposable) are
// computed anyway and carry an outside-hypotheses warning.
RankReport ranks(const CartanMatrix& c, int order);

struct FreeCoxeterReport {
  RatFunc hilbert;              // (1+t) / (1 - (n-1) t)
  std::map<int, BigInt> a;      // k -> a_k, k >= 2
};

// Closed forms for the rank-n diagram with every bond infinite:
// a_k = (n-1) C(k+n-3, k-1) - C(k+n-2, k), checked against
// 1/(1 - sum a_k t^k) = (1-t)^{n-1} / (1 - (n-1) t) through the given order.
FreeCoxeterReport free_coxeter(int n, int order);

// a_k > 0 for 2 <= k <= order; requires n >= 3 (a_k = 0 identically at n = 2).
bool free_coxeter_positivity(int n, int order);

}  // namespace kmps
