#pragma once

#include <map>
#include <optional>
#include <vector>

#include "kmps/int_poly.hpp"
#include "kmps/product_form.hpp"
#include "kmps/series.hpp"

namespace kmps {

// Generator and relation degree multisets of a graded presentation.
struct GradedPresentation {
  std::map<int, BigInt> gens;  // degree -> multiplicity, degrees >= 1
  std::map<int, BigInt> rels;  // degree -> multiplicity, degrees >= 2

  static GradedPresentation from_lists(const std::vector<int>& gen_degrees,
                                       const std::vector<int>& rel_degrees);
  friend bool operator==(const GradedPresentation&, const GradedPresentation&) = default;
};

// A Hilbert series is a Series with constant term 1; helpers below flag
// negative coefficients rather than silently accepting them.
struct FlaggedSeries {
  Series series;
  std::optional<int> first_negative;
  bool nonnegative() const { return !first_negative.has_value(); }
};

// 1/H = 1/H1 + 1/H2 - 1 (free product of connected graded algebras).
Series free_product(const Series& h1, const Series& h2);

// 1/(1 - sum_d mult_d t^d) for a generating set with the given degrees.
Series tensor_algebra(const std::vector<int>& degrees, int order);
Series tensor_algebra(const std::map<int, BigInt>& degree_counts, int order);

// 1/(1/h + sum t^{e_j}); a negative coefficient certifies that no strongly
// free set of those degrees exists in an algebra with Hilbert series h.
FlaggedSeries strongly_free_quotient(const Series& h, const std::vector<int>& rel_degrees);

// Quotient of the tensor algebra on p.gens by strongly free relations p.rels.
FlaggedSeries presented_hilbert(const GradedPresentation& p, int order);

struct LieDims {
  ProductForm dims;                   // j_k
  std::optional<int> first_negative;  // presentation not realizable when set
};

// Graded dimensions of the Lie algebra whose enveloping algebra has the
// presented Hilbert series (product-form exponents).
LieDims lie_dims(const GradedPresentation& p, int order);

enum class PositivityVerdict { NecessaryConditionsHold, Fails };

struct StrongPositivityCheck {
  PositivityVerdict verdict = PositivityVerdict::Fails;
  GradedPresentation presentation;    // sign-parse of Q
  std::optional<int> first_negative_coefficient;
  std::optional<int> first_negative_dim;
};

// Parses Q = 1 - sum a_i t^{d_i} + sum b_j t^{e_j} per-degree by sign and
// checks the computable necessary conditions: 1/Q nonnegative and all
// product-form exponents nonnegative through the given order.
StrongPositivityCheck strongly_positive_check(const IntPoly& q, int order);

}  // namespace kmps
