#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kmps/bigint.hpp"

namespace kmps {

// In Coxeter matrices the bond order m lives in {1, 2, 3, 4, 6, infinity};
// infinity is stored as 0 (matching the JSON encoding).
inline constexpr int kInfiniteBond = 0;
inline bool bond_less_than_infinity(int m) { return m != kInfiniteBond; }

// Integer matrix with 2s on the diagonal, nonpositive off-diagonal entries
// and a symmetric zero pattern.
struct CartanMatrix {
  int n = 0;
  std::vector<std::vector<long long>> a;

  long long operator()(int i, int j) const { return a[i][j]; }
  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;
};

struct AxiomViolation {
  int row = 0, col = 0;   // 1-based, as reported to users
  std::string message;
};

struct CartanValidation {
  std::optional<CartanMatrix> matrix;  // set iff violations is empty
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the three axioms; reports every violation with its indices.
CartanValidation validate_cartan(const std::vector<std::vector<long long>>& grid);

// Symmetric matrix of bond orders m_ij with m_ii = 1.
struct CoxeterMatrix {
  int n = 0;
  std::vector<std::vector<int>> m;

  int operator()(int i, int j) const { return m[i][j]; }
  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

  CoxeterMatrix induced(const std::vector<int>& verts) const;
  CoxeterMatrix relabeled(const std::vector<int>& perm) const;  // vertex i -> perm[i]
  // Lexicographically minimal upper triangle over all relabelings (n <= 8),
  // used as a memoization key; the literal triangle for larger n.
  std::string canonical_key() const;
};

// Builds a Coxeter matrix from an edge list (1-based endpoints, m = 0 for
// infinity); absent pairs get m = 2.
CoxeterMatrix coxeter_from_edges(int n, const std::vector<std::array<int, 3>>& edges);

// m_ij = 2, 3, 4, 6, infinity as a_ij * a_ji = 0, 1, 2, 3, >= 4.
CoxeterMatrix coxeter_of(const CartanMatrix& c);

// Representative Cartan matrix with (a_ij, a_ji) = (0,0), (-1,-1), (-1,-2),
// (-1,-3), (-2,-2) for m = 2, 3, 4, 6, infinity (lower index carries the -1).
CartanMatrix canonical_cartan(const CoxeterMatrix& x);

// Connected components of the graph with edges m_ij >= 3, sorted index lists.
std::vector<std::vector<int>> components(const CoxeterMatrix& x);

// One entry of the finite Weyl catalog.
struct FiniteCatalogEntry {
  std::string family;       // "A", "B", "D", "E6", "E7", "E8", "F4", "G2"
  int rank = 0;
  std::vector<int> degrees;  // ascending

  BigInt group_order() const;        // prod degrees
  int positive_roots() const;        // sum (d - 1)
};

// Recognizes a connected diagram as finite type, by shape.
std::optional<FiniteCatalogEntry> finite_catalog_match(const CoxeterMatrix& x,
                                                       const std::vector<int>& comp);

// Degrees of a finite-type Coxeter matrix, all components pooled (ascending).
// Throws DomainError when some component is not finite type.
std::vector<int> finite_degrees(const CoxeterMatrix& x);

enum class TypeKind { Finite, Affine, Indefinite };
std::string to_string(TypeKind k);

struct ComponentClass {
  std::vector<int> indices;
  TypeKind kind = TypeKind::Indefinite;
  std::optional<FiniteCatalogEntry> catalog;  // set when kind == Finite
};

struct Classification {
  TypeKind overall = TypeKind::Finite;  // worst component, Finite < Affine < Indefinite
  std::vector<ComponentClass> component_classes;
  bool indecomposable() const { return component_classes.size() == 1; }
};

// Finite by catalog matching (cross-checked against the leading principal
// minors of the symmetrized form when one exists); affine = singular of
// corank 1 with every vertex-deleted principal submatrix finite.
Classification classify(const CartanMatrix& c);

// True iff a = D b with D diagonal invertible and b symmetric; decided by
// propagating weights along a spanning tree and checking every edge.
bool is_symmetrizable(const CartanMatrix& c);

}  // namespace kmps
