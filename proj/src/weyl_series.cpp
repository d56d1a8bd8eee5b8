#include "kmps/weyl_series.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "kmps/error.hpp"

namespace kmps {

IntPoly poincare_finite(const CoxeterMatrix& x) {
  IntPoly p{1};
  for (int d : finite_degrees(x)) p *= bracket(d);
  return p;
}

RatFunc FlagSeriesEngine::flag_series(const CoxeterMatrix& x) {
  RatFunc p = RatFunc::one();
  for (const auto& comp : components(x)) p = p * component_series(x.induced(comp));
  return p;
}

RatFunc FlagSeriesEngine::component_series(const CoxeterMatrix& comp) {
  std::string key = comp.canonical_key();
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  RatFunc result;
  std::vector<int> all(comp.n);
  for (int i = 0; i < comp.n; ++i) all[i] = i;
  if (auto entry = finite_catalog_match(comp, all)) {
    IntPoly p{1};
    for (int d : entry->degrees) p *= bracket(d);
    result = RatFunc(p);
  } else {
    // group the finite-type subsets by their degree multiset: the alternating
    // sum then has one term per distinct subgroup Poincare polynomial
    std::map<std::vector<int>, long long> weight;
    for (std::uint32_t mask = 0; mask < (1u << comp.n); ++mask) {
      std::vector<int> verts;
      for (int i = 0; i < comp.n; ++i)
        if (mask & (1u << i)) verts.push_back(i);
      CoxeterMatrix sub = comp.induced(verts);
      bool finite = true;
      std::vector<int> degrees;
      for (const auto& sc : components(sub)) {
        auto entry = finite_catalog_match(sub, sc);
        if (!entry) {
          finite = false;
          break;
        }
        degrees.insert(degrees.end(), entry->degrees.begin(), entry->degrees.end());
      }
      if (!finite) continue;
      std::sort(degrees.begin(), degrees.end());
      weight[degrees] += (verts.size() % 2 == 0) ? 1 : -1;
    }
    RatFunc r;
    for (const auto& [degrees, w] : weight) {
      if (w == 0) continue;
      IntPoly p{1};
      for (int d : degrees) p *= bracket(d);
      r = r + RatFunc(IntPoly::constant(w), p);
    }
    if (r.is_zero()) throw Error("Steinberg sum vanished for an infinite group");
    result = RatFunc::one() / reverse_variable(r);
  }
  memo_.emplace(std::move(key), result);
  return result;
}

Series FlagSeriesEngine::residual(const CoxeterMatrix& x, int order) {
  RatFunc whole = flag_series(x);
  Series acc(order);
  for (std::uint32_t mask = 0; mask < (1u << x.n); ++mask) {
    std::vector<int> verts;
    for (int i = 0; i < x.n; ++i)
      if (mask & (1u << i)) verts.push_back(i);
    RatFunc sub = flag_series(x.induced(verts));
    Series term = (whole / sub).expand(order);
    if (verts.size() % 2 == 0)
      acc = acc + term;
    else
      acc = acc - term;
  }
  return acc;
}

RatFunc poincare_flag(const CoxeterMatrix& x) {
  FlagSeriesEngine engine;
  return engine.flag_series(x);
}

Series steinberg_residual(const CoxeterMatrix& x, int order) {
  FlagSeriesEngine engine;
  return engine.residual(x, order);
}

namespace {

std::string state_key(const std::vector<BigInt>& m) {
  std::string s;
  s.reserve(m.size() * 4);
  for (const auto& v : m) {
    s += v.str();
    s.push_back(',');
  }
  return s;
}

}  // namespace

GrowthCounts bfs_growth(const CartanMatrix& c, int max_length, std::int64_t state_budget) {
  const int n = c.n;
  const int nn = n * n;
  // generator matrices: sigma_i maps alpha_j -> alpha_j - a_ij alpha_i,
  // i.e. row i of the identity is replaced by (e_i - a_i)
  std::vector<std::vector<long long>> gen(n, std::vector<long long>(nn, 0));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) gen[i][k * n + k] = 1;
    for (int j = 0; j < n; ++j) gen[i][i * n + j] -= c.a[i][j];
  }

  std::vector<BigInt> identity(nn, 0);
  for (int k = 0; k < n; ++k) identity[k * n + k] = 1;

  std::unordered_set<std::string> seen;
  seen.insert(state_key(identity));
  std::vector<std::vector<BigInt>> frontier{identity};

  GrowthCounts out;
  out.counts.push_back(1);
  out.completed_length = 0;
  for (int depth = 1; depth <= max_length; ++depth) {
    std::vector<std::vector<BigInt>> next;
    for (const auto& m : frontier) {
      for (int i = 0; i < n; ++i) {
        // left-multiply by generator i: only row i changes
        std::vector<BigInt> w = m;
        for (int j = 0; j < n; ++j) {
          BigInt acc = 0;
          for (int k = 0; k < n; ++k)
            if (gen[i][i * n + k] != 0) acc += gen[i][i * n + k] * m[k * n + j];
          w[i * n + j] = acc;
        }
        if (seen.insert(state_key(w)).second) {
          next.push_back(std::move(w));
          if (static_cast<std::int64_t>(seen.size()) > state_budget) {
            out.complete = false;
            return out;
          }
        }
      }
    }
    out.counts.push_back(static_cast<long long>(next.size()));
    out.completed_length = depth;
    frontier = std::move(next);
    if (frontier.empty()) {
      // finite group fully enumerated; remaining levels are empty
      for (int d = depth + 1; d <= max_length; ++d) {
        out.counts.push_back(0);
        out.completed_length = d;
      }
      break;
    }
  }
  return out;
}

}  // namespace kmps
