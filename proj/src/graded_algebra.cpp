#include "kmps/graded_algebra.hpp"

#include "kmps/error.hpp"
#include "kmps/rat_func.hpp"

namespace kmps {

GradedPresentation GradedPresentation::from_lists(const std::vector<int>& gen_degrees,
                                                  const std::vector<int>& rel_degrees) {
  GradedPresentation p;
  for (int d : gen_degrees) {
    if (d < 1) throw DomainError("generator degrees must be >= 1");
    p.gens[d] += 1;
  }
  for (int e : rel_degrees) {
    if (e < 2) throw DomainError("relation degrees must be >= 2");
    p.rels[e] += 1;
  }
  return p;
}

Series free_product(const Series& h1, const Series& h2) {
  if (h1[0] != 1 || h2[0] != 1)
    throw DomainError("free product requires connected algebras (constant term 1)");
  int order = std::min(h1.order(), h2.order());
  Series sum = h1.truncated(order).inverse() + h2.truncated(order).inverse() - Series::one(order);
  return sum.inverse();
}

Series tensor_algebra(const std::vector<int>& degrees, int order) {
  std::map<int, BigInt> counts;
  for (int d : degrees) {
    if (d < 1) throw DomainError("generator degrees must be >= 1");
    counts[d] += 1;
  }
  return tensor_algebra(counts, order);
}

Series tensor_algebra(const std::map<int, BigInt>& degree_counts, int order) {
  Series den = Series::one(order);
  for (const auto& [d, mult] : degree_counts) {
    if (d < 1) throw DomainError("generator degrees must be >= 1");
    if (d <= order) den[d] -= mult;
  }
  return den.inverse();
}

FlaggedSeries strongly_free_quotient(const Series& h, const std::vector<int>& rel_degrees) {
  if (h[0] != 1) throw DomainError("quotient requires constant term 1");
  Series inv = h.inverse();
  for (int e : rel_degrees) {
    if (e < 2) throw DomainError("relation degrees must be >= 2");
    if (e <= inv.order()) inv[e] += 1;
  }
  FlaggedSeries out{inv.inverse(), std::nullopt};
  if (int k = out.series.first_negative(); k >= 0) out.first_negative = k;
  return out;
}

FlaggedSeries presented_hilbert(const GradedPresentation& p, int order) {
  Series den = Series::one(order);
  for (const auto& [d, mult] : p.gens)
    if (d <= order) den[d] -= mult;
  for (const auto& [e, mult] : p.rels)
    if (e <= order) den[e] += mult;
  FlaggedSeries out{den.inverse(), std::nullopt};
  if (int k = out.series.first_negative(); k >= 0) out.first_negative = k;
  return out;
}

LieDims lie_dims(const GradedPresentation& p, int order) {
  FlaggedSeries h = presented_hilbert(p, order);
  LieDims out{product_decompose(h.series), std::nullopt};
  if (int k = out.dims.first_negative(); k >= 0) out.first_negative = k;
  return out;
}

StrongPositivityCheck strongly_positive_check(const IntPoly& q, int order) {
  if (q.coeff(0) != 1) throw DomainError("Q must have constant term 1");
  StrongPositivityCheck out;
  for (int d = 1; d <= q.degree(); ++d) {
    BigInt c = q.coeff(d);
    if (c < 0)
      out.presentation.gens[d] = -c;
    else if (c > 0)
      out.presentation.rels[d] = c;
  }
  Series inv = RatFunc(IntPoly{1}, q).expand(order);
  if (int k = inv.first_negative(); k >= 0) out.first_negative_coefficient = k;
  ProductForm dims = product_decompose(inv);
  if (int k = dims.first_negative(); k >= 0) out.first_negative_dim = k;
  out.verdict = (!out.first_negative_coefficient && !out.first_negative_dim)
                    ? PositivityVerdict::NecessaryConditionsHold
                    : PositivityVerdict::Fails;
  return out;
}

}  // namespace kmps
