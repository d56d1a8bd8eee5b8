#include "kmps/homotopy_ranks.hpp"

#include <algorithm>

#include "kmps/error.hpp"
#include "kmps/weyl_series.hpp"

namespace kmps {

RatFunc chow_hilbert(const RatFunc& flag, int rank, int epsilon) {
  IntPoly one_minus_t{1, -1};
  IntPoly num{1};
  for (int i = 0; i < rank; ++i) num *= one_minus_t;
  RatFunc c = flag * RatFunc(num);
  if (epsilon != 0) c = c / RatFunc(IntPoly{1, 0, -1});
  return c;
}

EvenRanks even_ranks_from_chow(const RatFunc& chow, int order) {
  Series s = chow.expand(order);
  if (s[0] != 1) throw DomainError("Hilbert series must have constant term 1");
  ProductForm p = product_decompose(s);
  EvenRanks out;
  out.k1_zero = (p.exponent(1) == 0);
  for (int k = 2; k <= p.order(); ++k) {
    out.ranks[k] = p.exponent(k);
    if (p.exponent(k) < 0 && !out.first_negative) out.first_negative = k;
  }
  return out;
}

QFactorization q_factorization(const RatFunc& flag, const CoxeterMatrix& x) {
  // lcm of the finite-type parabolic Poincare polynomials over all subsets;
  // distinct degree multisets only, since the polynomial depends on nothing else
  std::vector<std::vector<int>> seen;
  IntPoly m{1};
  for (std::uint32_t mask = 0; mask < (1u << x.n); ++mask) {
    std::vector<int> verts;
    for (int i = 0; i < x.n; ++i)
      if (mask & (1u << i)) verts.push_back(i);
    CoxeterMatrix sub = x.induced(verts);
    std::vector<int> degrees;
    bool finite = true;
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
    if (std::find(seen.begin(), seen.end(), degrees) != seen.end()) continue;
    seen.push_back(degrees);
    IntPoly p{1};
    for (int d : degrees) p *= bracket(d);
    m = poly_lcm(m, p);
  }

  QFactorization out;
  // peel brackets greedily from the largest candidate down; the largest
  // bracket dividing m is always part of the (unique) decomposition
  IntPoly rest = m;
  for (int d = rest.degree() + 1; d >= 2; --d) {
    IntPoly q;
    while (rest.try_divide(bracket(d), &q)) {
      out.brackets.push_back(d);
      rest = q;
      if (d > rest.degree() + 1) break;
    }
  }
  std::sort(out.brackets.begin(), out.brackets.end());
  out.remainder = rest;

  RatFunc q = RatFunc(m) / flag;
  if (!q.den().is_one()) throw Error("numerator lcm / flag series is not a polynomial");
  out.q = q.num();
  if (out.q.coeff(0) != 1) throw Error("Q must have constant term 1");
  return out;
}

RankReport ranks(const CartanMatrix& c, int order) {
  RankReport report;
  CoxeterMatrix cox = coxeter_of(c);
  Classification cls = classify(c);
  if (!cls.indecomposable())
    report.warnings.push_back("outside Theorem hypotheses: matrix is decomposable");
  if (cls.overall != TypeKind::Indefinite)
    report.warnings.push_back("outside Theorem hypotheses: type is " + to_string(cls.overall));

  report.epsilon = is_symmetrizable(c) ? 1 : 0;
  report.odd_rank3 = report.epsilon;
  report.flag = poincare_flag(cox);

  QFactorization qf = q_factorization(report.flag, cox);
  report.numerator_brackets = qf.brackets;
  report.q = qf.q;
  report.bracket_remainder = qf.remainder;
  if (!qf.remainder.is_one())
    report.warnings.push_back("numerator lcm is not a product of brackets; remainder kept");

  // route B: j from 1/Q, then i_4 = j_2 - l_2 + eps, i_{2k} = j_k - l_k
  report.lie_dims = product_decompose(RatFunc(IntPoly{1}, report.q).expand(order));
  std::map<int, long long> l;
  for (int d : qf.brackets) ++l[d];
  for (int k = 2; k <= order; ++k) {
    BigInt v = report.lie_dims.exponent(k) - (l.count(k) ? l[k] : 0);
    if (k == 2) v += report.epsilon;
    report.even_ranks[k] = v;
    if (v < 0)
      report.warnings.push_back("negative even rank at k = " + std::to_string(k));
  }

  // route A: product form of the even-subring Hilbert series
  EvenRanks route_a = even_ranks_from_chow(chow_hilbert(report.flag, c.n, report.epsilon), order);
  report.route_consistent = route_a.k1_zero;
  for (int k = 2; k <= order; ++k) {
    auto it = route_a.ranks.find(k);
    if (it == route_a.ranks.end() || it->second != report.even_ranks[k]) {
      report.route_consistent = false;
      break;
    }
  }
  if (!report.route_consistent)
    report.warnings.push_back("rank routes disagree (outside-hypotheses input)");
  return report;
}

namespace {

BigInt binomial(const BigInt& n, int k) {
  if (k < 0) return 0;
  BigInt b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - i + 1) / i;
  return b;
}

}  // namespace

FreeCoxeterReport free_coxeter(int n, int order) {
  if (n < 2) throw DomainError("free Coxeter closed form requires rank >= 2");
  FreeCoxeterReport out;
  out.hilbert = RatFunc(IntPoly{1, 1}, IntPoly{1, -(n - 1)});
  for (int k = 2; k <= order; ++k)
    out.a[k] = (n - 1) * binomial(k + n - 3, k - 1) - binomial(k + n - 2, k);

  // the displayed identity: 1/(1 - sum a_k t^k) = (1-t)^{n-1} / (1-(n-1)t)
  Series denom = Series::one(order);
  for (const auto& [k, a] : out.a) denom[k] = -a;
  IntPoly pow{1};
  for (int i = 0; i < n - 1; ++i) pow *= IntPoly{1, -1};
  Series rhs = RatFunc(pow, IntPoly{1, -(n - 1)}).expand(order);
  if (denom.inverse() != rhs)
    throw Error("free Coxeter closed form failed its defining identity");
  return out;
}

bool free_coxeter_positivity(int n, int order) {
  if (n < 3) throw DomainError("positivity check requires rank >= 3");
  FreeCoxeterReport r = free_coxeter(n, order);
  for (const auto& [k, a] : r.a)
    if (a <= 0) return false;
  return true;
}

}  // namespace kmps
