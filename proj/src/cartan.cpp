#include "kmps/cartan.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "kmps/error.hpp"

namespace kmps {

CartanValidation validate_cartan(const std::vector<std::vector<long long>>& grid) {
  CartanValidation result;
  int n = static_cast<int>(grid.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(grid[i].size()) != n) {
      result.violations.push_back({i + 1, 0, "row has wrong length; matrix must be square"});
      return result;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (grid[i][i] != 2)
      result.violations.push_back({i + 1, i + 1, "diagonal entry must be 2"});
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (grid[i][j] > 0)
        result.violations.push_back({i + 1, j + 1, "off-diagonal entry must be <= 0"});
      if (i < j && (grid[i][j] == 0) != (grid[j][i] == 0))
        result.violations.push_back({i + 1, j + 1,
                                     "zero pattern must be symmetric: a_ij = 0 iff a_ji = 0"});
    }
  }
  if (result.violations.empty()) result.matrix = CartanMatrix{n, grid};
  return result;
}

CoxeterMatrix CoxeterMatrix::induced(const std::vector<int>& verts) const {
  CoxeterMatrix sub;
  sub.n = static_cast<int>(verts.size());
  sub.m.assign(sub.n, std::vector<int>(sub.n, 2));
  for (int i = 0; i < sub.n; ++i) {
    sub.m[i][i] = 1;
    for (int j = 0; j < sub.n; ++j)
      if (i != j) sub.m[i][j] = m[verts[i]][verts[j]];
  }
  return sub;
}

CoxeterMatrix CoxeterMatrix::relabeled(const std::vector<int>& perm) const {
  CoxeterMatrix out;
  out.n = n;
  out.m.assign(n, std::vector<int>(n, 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.m[perm[i]][perm[j]] = m[i][j];
  return out;
}

std::string CoxeterMatrix::canonical_key() const {
  auto triangle = [this](const std::vector<int>& perm) {
    std::string s;
    s.reserve(n * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s.push_back(static_cast<char>('0' + m[perm[i]][perm[j]]));
    return s;
  };
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (n > 8) return triangle(perm);
  std::string best = triangle(perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::string s = triangle(perm);
    if (s < best) best = std::move(s);
  }
  return best;
}

CoxeterMatrix coxeter_from_edges(int n, const std::vector<std::array<int, 3>>& edges) {
  CoxeterMatrix x;
  x.n = n;
  x.m.assign(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) x.m[i][i] = 1;
  for (const auto& e : edges) {
    int i = e[0] - 1, j = e[1] - 1, m = e[2];
    if (i < 0 || j < 0 || i >= n || j >= n || i == j)
      throw ParseError("edge endpoints out of range");
    if (m != kInfiniteBond && (m < 2 || m == 5 || m > 6))
      throw ParseError("bond order must be 2, 3, 4, 6 or 0 (infinity)");
    x.m[i][j] = x.m[j][i] = m;
  }
  return x;
}

CoxeterMatrix coxeter_of(const CartanMatrix& c) {
  CoxeterMatrix x;
  x.n = c.n;
  x.m.assign(c.n, std::vector<int>(c.n, 1));
  for (int i = 0; i < c.n; ++i)
    for (int j = 0; j < c.n; ++j) {
      if (i == j) continue;
      long long prod = c.a[i][j] * c.a[j][i];
      int m = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : prod == 3 ? 6 : kInfiniteBond;
      x.m[i][j] = m;
    }
  return x;
}

CartanMatrix canonical_cartan(const CoxeterMatrix& x) {
  CartanMatrix c;
  c.n = x.n;
  c.a.assign(x.n, std::vector<long long>(x.n, 0));
  for (int i = 0; i < x.n; ++i) c.a[i][i] = 2;
  for (int i = 0; i < x.n; ++i)
    for (int j = i + 1; j < x.n; ++j) {
      std::pair<long long, long long> p;
      switch (x.m[i][j]) {
        case 2: p = {0, 0}; break;
        case 3: p = {-1, -1}; break;
        case 4: p = {-1, -2}; break;
        case 6: p = {-1, -3}; break;
        case kInfiniteBond: p = {-2, -2}; break;
        default: throw DomainError("unsupported bond order in canonical Cartan matrix");
      }
      c.a[i][j] = p.first;
      c.a[j][i] = p.second;
    }
  return c;
}

std::vector<std::vector<int>> components(const CoxeterMatrix& x) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(x.n, false);
  for (int s = 0; s < x.n; ++s) {
    if (seen[s]) continue;
    std::vector<int> stack{s}, comp;
    seen[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w = 0; w < x.n; ++w)
        if (!seen[w] && v != w && x.m[v][w] != 2) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

BigInt FiniteCatalogEntry::group_order() const {
  BigInt o = 1;
  for (int d : degrees) o *= d;
  return o;
}

int FiniteCatalogEntry::positive_roots() const {
  int s = 0;
  for (int d : degrees) s += d - 1;
  return s;
}

namespace {

std::vector<int> degrees_a(int n) {
  std::vector<int> d(n);
  std::iota(d.begin(), d.end(), 2);
  return d;
}

std::vector<int> degrees_b(int n) {
  std::vector<int> d(n);
  for (int i = 0; i < n; ++i) d[i] = 2 * (i + 1);
  return d;
}

std::vector<int> degrees_d(int n) {
  std::vector<int> d;
  for (int i = 1; i < n; ++i) d.push_back(2 * i);
  d.push_back(n);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

std::optional<FiniteCatalogEntry> finite_catalog_match(const CoxeterMatrix& x,
                                                       const std::vector<int>& comp) {
  int n = static_cast<int>(comp.size());
  if (n == 0) return std::nullopt;
  if (n == 1) return FiniteCatalogEntry{"A", 1, {2}};
  std::vector<int> labels;
  std::vector<int> degree(n, 0);
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int m = x.m[comp[i]][comp[j]];
      if (m == 2) continue;
      if (m == kInfiniteBond) return std::nullopt;
      labels.push_back(m);
      ++degree[i];
      ++degree[j];
      adj[i].push_back(j);
      adj[j].push_back(i);
    }
  // a connected finite diagram is a tree
  if (static_cast<int>(labels.size()) != n - 1) return std::nullopt;
  int n4 = static_cast<int>(std::count(labels.begin(), labels.end(), 4));
  int n6 = static_cast<int>(std::count(labels.begin(), labels.end(), 6));
  int maxdeg = *std::max_element(degree.begin(), degree.end());
  if (n6 > 0) {
    if (n == 2 && n6 == 1) return FiniteCatalogEntry{"G2", 2, {2, 6}};
    return std::nullopt;
  }
  if (n4 > 1) return std::nullopt;
  if (n4 == 1) {
    if (maxdeg > 2) return std::nullopt;  // must be a path
    if (n == 2) return FiniteCatalogEntry{"B", 2, degrees_b(2)};
    // locate the 4-bond along the path
    for (int i = 0; i < n; ++i)
      for (int j : adj[i]) {
        if (i > j || x.m[comp[i]][comp[j]] != 4) continue;
        bool at_end = degree[i] == 1 || degree[j] == 1;
        if (at_end) return FiniteCatalogEntry{"B", n, degrees_b(n)};
        if (n == 4 && degree[i] == 2 && degree[j] == 2)
          return FiniteCatalogEntry{"F4", 4, {2, 6, 8, 12}};
        return std::nullopt;
      }
    return std::nullopt;
  }
  // simply laced
  if (maxdeg <= 2) return FiniteCatalogEntry{"A", n, degrees_a(n)};
  if (maxdeg > 3 || std::count(degree.begin(), degree.end(), 3) > 1) return std::nullopt;
  int branch = static_cast<int>(std::find(degree.begin(), degree.end(), 3) - degree.begin());
  std::vector<int> arms;
  for (int s : adj[branch]) {
    int len = 1, prev = branch, cur = s;
    while (true) {
      int next = -1;
      for (int w : adj[cur])
        if (w != prev) next = w;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return FiniteCatalogEntry{"D", n, degrees_d(n)};
  if (arms == std::vector<int>{1, 2, 2}) return FiniteCatalogEntry{"E6", 6, {2, 5, 6, 8, 9, 12}};
  if (arms == std::vector<int>{1, 2, 3})
    return FiniteCatalogEntry{"E7", 7, {2, 6, 8, 10, 12, 14, 18}};
  if (arms == std::vector<int>{1, 2, 4})
    return FiniteCatalogEntry{"E8", 8, {2, 8, 12, 14, 18, 20, 24, 30}};
  return std::nullopt;
}

std::vector<int> finite_degrees(const CoxeterMatrix& x) {
  std::vector<int> all;
  for (const auto& comp : components(x)) {
    auto entry = finite_catalog_match(x, comp);
    if (!entry) throw DomainError("diagram component is not of finite type");
    all.insert(all.end(), entry->degrees.begin(), entry->degrees.end());
  }
  std::sort(all.begin(), all.end());
  return all;
}

std::string to_string(TypeKind k) {
  switch (k) {
    case TypeKind::Finite: return "finite";
    case TypeKind::Affine: return "affine";
    case TypeKind::Indefinite: return "indefinite";
  }
  return "?";
}

namespace {

// Exact determinant by fraction-free elimination.
BigInt integer_determinant(std::vector<std::vector<BigInt>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

int integer_rank(std::vector<std::vector<BigRat>> m) {
  int n = static_cast<int>(m.size());
  int rank = 0;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int p = -1;
    for (int i = row; i < n; ++i)
      if (m[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[row], m[p]);
    for (int i = row + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      BigRat f = m[i][col] / m[row][col];
      for (int j = col; j < n; ++j) m[i][j] -= f * m[row][j];
    }
    ++rank;
    ++row;
  }
  return rank;
}

std::vector<std::vector<BigInt>> principal_submatrix(const CartanMatrix& c,
                                                     const std::vector<int>& idx) {
  std::vector<std::vector<BigInt>> m(idx.size(), std::vector<BigInt>(idx.size()));
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j) m[i][j] = c.a[idx[i]][idx[j]];
  return m;
}

// Symmetrizer weights along a spanning forest; nullopt when no consistent
// assignment exists.
std::optional<std::vector<BigRat>> symmetrizer_weights(const CartanMatrix& c) {
  int n = c.n;
  std::vector<BigRat> d(n, 0);
  std::vector<bool> seen(n, false);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    d[s] = 1;
    seen[s] = true;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w) {
        if (v == w || c.a[v][w] == 0) continue;
        // want d_w * a_wv = d_v * a_vw
        BigRat required = d[v] * c.a[v][w] / c.a[w][v];
        if (!seen[w]) {
          d[w] = required;
          seen[w] = true;
          stack.push_back(w);
        } else if (d[w] != required) {
          return std::nullopt;
        }
      }
    }
  }
  return d;
}

// Leading principal minors of the symmetrized form B = D^{-1} A.
bool symmetrized_minors_positive(const CartanMatrix& c, const std::vector<BigRat>& d) {
  int n = c.n;
  std::vector<std::vector<BigRat>> b(n, std::vector<BigRat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i][j] = BigRat(c.a[i][j]) / d[i];
  // running fraction-based Gaussian elimination: minors positive iff all
  // pivots positive
  for (int k = 0; k < n; ++k) {
    if (b[k][k] <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      if (b[i][k] == 0) continue;
      BigRat f = b[i][k] / b[k][k];
      for (int j = k; j < n; ++j) b[i][j] -= f * b[k][j];
    }
  }
  return true;
}

}  // namespace

bool is_symmetrizable(const CartanMatrix& c) {
  return symmetrizer_weights(c).has_value();
}

Classification classify(const CartanMatrix& c) {
  CoxeterMatrix cox = coxeter_of(c);
  Classification result;
  for (const auto& comp : components(cox)) {
    ComponentClass cls;
    cls.indices = comp;
    auto entry = finite_catalog_match(cox, comp);
    if (entry) {
      cls.kind = TypeKind::Finite;
      cls.catalog = entry;
    } else {
      // affine: singular, corank 1, and every vertex-deleted principal
      // submatrix of the component is finite type
      auto sub = principal_submatrix(c, comp);
      bool affine = integer_determinant(sub) == 0;
      if (affine) {
        std::vector<std::vector<BigRat>> q(sub.size(), std::vector<BigRat>(sub.size()));
        for (size_t i = 0; i < sub.size(); ++i)
          for (size_t j = 0; j < sub.size(); ++j) q[i][j] = sub[i][j];
        affine = integer_rank(q) == static_cast<int>(comp.size()) - 1;
      }
      if (affine) {
        for (size_t drop = 0; affine && drop < comp.size(); ++drop) {
          std::vector<int> rest;
          for (size_t i = 0; i < comp.size(); ++i)
            if (i != drop) rest.push_back(comp[i]);
          CoxeterMatrix sub_cox = cox.induced(rest);
          for (const auto& sc : components(sub_cox))
            if (!finite_catalog_match(sub_cox, sc)) affine = false;
        }
      }
      cls.kind = affine ? TypeKind::Affine : TypeKind::Indefinite;
    }
    // cross-check the catalog answer against the symmetrized quadratic form
    auto comp_matrix = [&] {
      CartanMatrix sub;
      sub.n = static_cast<int>(comp.size());
      sub.a.assign(sub.n, std::vector<long long>(sub.n));
      for (int i = 0; i < sub.n; ++i)
        for (int j = 0; j < sub.n; ++j) sub.a[i][j] = c.a[comp[i]][comp[j]];
      return sub;
    }();
    if (auto weights = symmetrizer_weights(comp_matrix)) {
      bool positive = symmetrized_minors_positive(comp_matrix, *weights);
      if (positive != (cls.kind == TypeKind::Finite))
        throw Error("finite-type catalog and symmetrized minor test disagree");
    }
    result.component_classes.push_back(std::move(cls));
  }
  result.overall = TypeKind::Finite;
  for (const auto& cls : result.component_classes)
    if (static_cast<int>(cls.kind) > static_cast<int>(result.overall)) result.overall = cls.kind;
  return result;
}

}  // namespace kmps
