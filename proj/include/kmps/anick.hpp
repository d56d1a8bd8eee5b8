#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kmps/bigint.hpp"

namespace kmps {

struct GradedLetter {
  std::string name;
  int degree = 1;
};

// Ordered graded alphabet; the listed order is the total order on letters.
struct GradedAlphabet {
  std::vector<GradedLetter> letters;

  int find(const std::string& name) const;  // -1 when absent
};

// Word over the alphabet, stored as letter indices.
using Monomial = std::vector<int>;

int monomial_degree(const GradedAlphabet& alphabet, const Monomial& m);
std::string monomial_pretty(const GradedAlphabet& alphabet, const Monomial& m);

// Degree-then-lex total order: first by total degree, ties left-to-right by
// letter order with a proper prefix below any extension.
// Returns <0, 0, >0 like a three-way comparison.
int compare(const GradedAlphabet& alphabet, const Monomial& a, const Monomial& b);

// Integer linear combination of monomials of one homogeneous degree.
struct TensorElement {
  std::map<Monomial, BigInt> terms;

  bool is_zero() const { return terms.empty(); }
  int degree(const GradedAlphabet& alphabet) const;  // requires nonzero
  bool homogeneous(const GradedAlphabet& alphabet) const;

  static TensorElement monomial(Monomial m, BigInt coeff = 1);
  TensorElement operator-() const;
  friend TensorElement operator+(const TensorElement& a, const TensorElement& b);
  friend TensorElement operator-(const TensorElement& a, const TensorElement& b);
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);  // concatenation
  friend bool operator==(const TensorElement& a, const TensorElement& b) = default;
};

// [a, b] = ab - ba.
TensorElement commutator(const TensorElement& a, const TensorElement& b);

// Maximal monomial with nonzero coefficient under the degree-then-lex order.
Monomial high_term(const GradedAlphabet& alphabet, const TensorElement& x);

struct OverlapWitness {
  enum Kind { Submonomial, Overlap } kind = Submonomial;
  Monomial first, second;
  Monomial word;  // the contained monomial, or the shared suffix/prefix
};

struct CombinatorialFreeness {
  bool free = false;
  std::optional<OverlapWitness> witness;
};

// (a) no monomial is a contiguous subword of another and (b) no nonempty
// proper suffix of one equals a nonempty proper prefix of another (ordered
// pairs, self-pairs included). Duplicate monomials are collapsed as a set.
CombinatorialFreeness is_combinatorially_free(const std::vector<Monomial>& monomials);

enum class CertifyVerdict { Certified, Unknown };

struct Certification {
  CertifyVerdict verdict = CertifyVerdict::Unknown;
  std::vector<Monomial> high_terms;
  std::optional<OverlapWitness> witness;
};

// Strong-freeness certificate: the set is certified when its high terms are
// combinatorially free. The criterion is sufficient only, so the negative
// answer is Unknown (definitive only when the inputs are single monomials).
Certification certify_strongly_free(const GradedAlphabet& alphabet,
                                    const std::vector<TensorElement>& elements);

// Parses a relation line: either a bracket expression over letter names
// ("[x1, [x2, x4]]") or an integer linear combination of words
// ("x1 x2 - x2 x1", "2 x1*x2*x1 - x2 x1 x1").
TensorElement parse_relation(const GradedAlphabet& alphabet, const std::string& line);

// Relation file: "letter: name degree" lines (or "name:degree"), an optional
// "order:" line re-listing the names, then one relation per line.
struct RelationFile {
  GradedAlphabet alphabet;
  std::vector<TensorElement> relations;
};
RelationFile parse_relation_file(const std::string& text);

inline constexpr std::int64_t kDefaultOracleBudget = 2'000'000;

// Ground-truth dimensions of (free algebra on the alphabet) / (two-sided
// ideal generated by the relations), degree by degree: the ideal slice is
// spanned by u * r * v and ranks are computed by exact fraction-free
// elimination. Budget counts enumerated spanning rows.
std::vector<BigInt> quotient_hilbert_oracle(const GradedAlphabet& alphabet,
                                            const std::vector<TensorElement>& relations,
                                            int max_degree,
                                            std::int64_t budget = kDefaultOracleBudget);

}  // namespace kmps
