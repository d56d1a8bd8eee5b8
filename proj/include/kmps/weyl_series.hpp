#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "kmps/cartan.hpp"
#include "kmps/rat_func.hpp"
#include "kmps/series.hpp"

namespace kmps {

// Poincare polynomial of a finite-type diagram: prod over catalog degrees of
// [d], all components pooled. Throws DomainError on non-finite input.
IntPoly poincare_finite(const CoxeterMatrix& x);

// Flag-manifold Poincare series computed per connected component; infinite
// components use the alternating sum over finite-type subsets
//   R(t) = sum_{I finite type} (-1)^{|I|} / P_I(t),   P = 1 / R(1/t).
// A memo of component series keyed by canonical diagram makes the subset
// recursion in residual() reuse isomorphic sub-diagrams. Instances are not
// shared between threads; each task builds its own engine.
class FlagSeriesEngine {
 public:
  RatFunc flag_series(const CoxeterMatrix& x);

  // sum_{I subset S} (-1)^{|I|} expand(P/P_I, order); identically zero.
  Series residual(const CoxeterMatrix& x, int order);

 private:
  RatFunc component_series(const CoxeterMatrix& comp);
  std::unordered_map<std::string, RatFunc> memo_;
};

// One-shot helpers over a fresh engine.
RatFunc poincare_flag(const CoxeterMatrix& x);
Series steinberg_residual(const CoxeterMatrix& x, int order);

struct GrowthCounts {
  std::vector<long long> counts;  // counts[l] = #{w : l(w) = l}
  bool complete = true;           // false when the state budget ran out
  int completed_length = 0;       // last fully counted length
};

inline constexpr std::int64_t kDefaultBfsBudget = 5'000'000;

// Breadth-first enumeration of the Weyl group as integer matrices acting on
// the simple-root basis; discovery depth equals Coxeter length.
GrowthCounts bfs_growth(const CartanMatrix& c, int max_length,
                        std::int64_t state_budget = kDefaultBfsBudget);

}  // namespace kmps
