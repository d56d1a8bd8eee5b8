#include "kmps/anick.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

#include "kmps/error.hpp"

namespace kmps {

int GradedAlphabet::find(const std::string& name) const {
  for (size_t i = 0; i < letters.size(); ++i)
    if (letters[i].name == name) return static_cast<int>(i);
  return -1;
}

int monomial_degree(const GradedAlphabet& alphabet, const Monomial& m) {
  int d = 0;
  for (int letter : m) d += alphabet.letters.at(letter).degree;
  return d;
}

std::string monomial_pretty(const GradedAlphabet& alphabet, const Monomial& m) {
  if (m.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) s += " ";
    s += alphabet.letters.at(m[i]).name;
  }
  return s;
}

int compare(const GradedAlphabet& alphabet, const Monomial& a, const Monomial& b) {
  int da = monomial_degree(alphabet, a), db = monomial_degree(alphabet, b);
  if (da != db) return da < db ? -1 : 1;
  size_t k = std::min(a.size(), b.size());
  for (size_t i = 0; i < k; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

int TensorElement::degree(const GradedAlphabet& alphabet) const {
  if (terms.empty()) throw DomainError("degree of the zero element");
  return monomial_degree(alphabet, terms.begin()->first);
}

bool TensorElement::homogeneous(const GradedAlphabet& alphabet) const {
  if (terms.empty()) return true;
  int d = monomial_degree(alphabet, terms.begin()->first);
  for (const auto& [m, c] : terms)
    if (monomial_degree(alphabet, m) != d) return false;
  return true;
}

TensorElement TensorElement::monomial(Monomial m, BigInt coeff) {
  TensorElement x;
  if (coeff != 0) x.terms.emplace(std::move(m), std::move(coeff));
  return x;
}

TensorElement TensorElement::operator-() const {
  TensorElement r = *this;
  for (auto& [m, c] : r.terms) c = -c;
  return r;
}

TensorElement operator+(const TensorElement& a, const TensorElement& b) {
  TensorElement r = a;
  for (const auto& [m, c] : b.terms) {
    auto [it, inserted] = r.terms.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) r.terms.erase(it);
    }
  }
  return r;
}

TensorElement operator-(const TensorElement& a, const TensorElement& b) { return a + (-b); }

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  TensorElement r;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      auto [it, inserted] = r.terms.try_emplace(std::move(m), ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) r.terms.erase(it);
      }
    }
  return r;
}

TensorElement commutator(const TensorElement& a, const TensorElement& b) {
  return a * b - b * a;
}

Monomial high_term(const GradedAlphabet& alphabet, const TensorElement& x) {
  if (x.is_zero()) throw DomainError("high term of the zero element");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : x.terms)
    if (!best || compare(alphabet, m, *best) > 0) best = &m;
  return *best;
}

namespace {

bool is_subword(const Monomial& needle, const Monomial& haystack) {
  if (needle.size() > haystack.size()) return false;
  for (size_t start = 0; start + needle.size() <= haystack.size(); ++start)
    if (std::equal(needle.begin(), needle.end(), haystack.begin() + start)) return true;
  return false;
}

}  // namespace

CombinatorialFreeness is_combinatorially_free(const std::vector<Monomial>& monomials) {
  std::vector<Monomial> set;
  for (const auto& m : monomials) {
    if (m.empty()) throw DomainError("empty monomial in combinatorial freeness check");
    if (std::find(set.begin(), set.end(), m) == set.end()) set.push_back(m);
  }
  CombinatorialFreeness out;
  // (a) submonomial containment, i != j
  for (size_t i = 0; i < set.size(); ++i)
    for (size_t j = 0; j < set.size(); ++j) {
      if (i == j) continue;
      if (is_subword(set[i], set[j])) {
        out.witness = OverlapWitness{OverlapWitness::Submonomial, set[i], set[j], set[i]};
        return out;
      }
    }
  // (b) proper suffix of one equals proper prefix of another (self included)
  for (const auto& a : set)
    for (const auto& b : set) {
      size_t max_len = std::min(a.size(), b.size()) - 1;
      for (size_t len = 1; len <= max_len; ++len) {
        if (std::equal(a.end() - len, a.end(), b.begin())) {
          Monomial shared(b.begin(), b.begin() + len);
          out.witness = OverlapWitness{OverlapWitness::Overlap, a, b, shared};
          return out;
        }
      }
    }
  out.free = true;
  return out;
}

Certification certify_strongly_free(const GradedAlphabet& alphabet,
                                    const std::vector<TensorElement>& elements) {
  Certification out;
  for (const auto& x : elements) {
    if (x.is_zero()) throw DomainError("zero element cannot be strongly free");
    if (!x.homogeneous(alphabet)) throw DomainError("elements must be homogeneous");
    out.high_terms.push_back(high_term(alphabet, x));
  }
  CombinatorialFreeness cf = is_combinatorially_free(out.high_terms);
  out.verdict = cf.free ? CertifyVerdict::Certified : CertifyVerdict::Unknown;
  out.witness = cf.witness;
  return out;
}

namespace {

struct Tokenizer {
  std::string s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char take() {
    skip_ws();
    return s[pos++];
  }
  std::string word() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '\''))
      ++pos;
    return s.substr(start, pos - start);
  }
};

class RelationParser {
 public:
  RelationParser(const GradedAlphabet& alphabet, const std::string& line)
      : alphabet_(alphabet), tok_{line} {}

  TensorElement parse() {
    TensorElement result = parse_expr();
    if (!tok_.done()) throw ParseError("trailing input in relation: " + tok_.s);
    return result;
  }

 private:
  TensorElement parse_expr() {
    int sign = 1;
    if (tok_.peek() == '+' || tok_.peek() == '-') sign = tok_.take() == '-' ? -1 : 1;
    TensorElement acc = parse_term();
    if (sign < 0) acc = -acc;
    while (!tok_.done()) {
      char c = tok_.peek();
      if (c != '+' && c != '-') break;
      tok_.take();
      TensorElement term = parse_term();
      acc = (c == '-') ? acc - term : acc + term;
    }
    return acc;
  }

  TensorElement parse_term() {
    TensorElement acc = TensorElement::monomial({}, 1);
    bool any = false;
    while (true) {
      char c = tok_.peek();
      if (c == '[') {
        tok_.take();
        TensorElement left = parse_expr();
        if (tok_.take() != ',') throw ParseError("expected ',' inside bracket");
        TensorElement right = parse_expr();
        if (tok_.take() != ']') throw ParseError("expected ']'");
        acc = acc * commutator(left, right);
        any = true;
      } else if (c == '(') {
        tok_.take();
        TensorElement inner = parse_expr();
        if (tok_.take() != ')') throw ParseError("expected ')'");
        acc = acc * inner;
        any = true;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string w = tok_.word();
        acc = acc * TensorElement::monomial({}, BigInt(w));
        any = true;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string w = tok_.word();
        int idx = alphabet_.find(w);
        if (idx < 0) throw ParseError("unknown letter '" + w + "'");
        acc = acc * TensorElement::monomial({idx});
        any = true;
      } else if (c == '*') {
        tok_.take();
      } else {
        break;
      }
    }
    if (!any) throw ParseError("empty term in relation");
    return acc;
  }

  const GradedAlphabet& alphabet_;
  Tokenizer tok_;
};

}  // namespace

TensorElement parse_relation(const GradedAlphabet& alphabet, const std::string& line) {
  return RelationParser(alphabet, line).parse();
}

RelationFile parse_relation_file(const std::string& text) {
  RelationFile out;
  std::vector<std::string> relation_lines;
  std::istringstream in(text);
  std::string line;
  std::optional<std::vector<std::string>> order;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
    if (trimmed.empty()) continue;
    if (trimmed.rfind("order:", 0) == 0) {
      std::istringstream rest(trimmed.substr(6));
      std::vector<std::string> names;
      std::string name;
      while (rest >> name) names.push_back(name);
      order = names;
      continue;
    }
    if (trimmed.rfind("letter:", 0) == 0) trimmed = trimmed.substr(7);
    // alphabet line: "name: degree" or "name:degree" or "name degree"
    auto colon = trimmed.find(':');
    bool is_letter_line = false;
    if (colon != std::string::npos && trimmed.find_first_of("[]+-*,") == std::string::npos) {
      std::string name = trimmed.substr(0, colon);
      std::string deg = trimmed.substr(colon + 1);
      name.erase(name.find_last_not_of(" \t") + 1);
      deg.erase(0, deg.find_first_not_of(" \t"));
      if (!name.empty() && !deg.empty() &&
          deg.find_first_not_of("0123456789 \t") == std::string::npos) {
        out.alphabet.letters.push_back({name, std::stoi(deg)});
        is_letter_line = true;
      }
    }
    if (!is_letter_line) relation_lines.push_back(trimmed);
  }
  if (order) {
    GradedAlphabet reordered;
    for (const auto& name : *order) {
      int idx = out.alphabet.find(name);
      if (idx < 0) throw ParseError("order line names unknown letter '" + name + "'");
      reordered.letters.push_back(out.alphabet.letters[idx]);
    }
    if (reordered.letters.size() != out.alphabet.letters.size())
      throw ParseError("order line must list every letter exactly once");
    out.alphabet = reordered;
  }
  for (const auto& rel : relation_lines)
    out.relations.push_back(parse_relation(out.alphabet, rel));
  return out;
}

namespace {

// Sparse row over column ids with exact integer entries.
using SparseRow = std::vector<std::pair<int, BigInt>>;

void normalize_row(SparseRow& row) {
  BigInt g = 0;
  for (const auto& [c, v] : row) g = boost::multiprecision::gcd(g, v);
  if (g > 1)
    for (auto& [c, v] : row) v /= g;
  if (!row.empty() && row.front().second < 0)
    for (auto& [c, v] : row) v = -v;
}

// row = a*row - b*pivot, sparse merge on sorted column ids.
SparseRow combine(const SparseRow& row, const BigInt& a, const SparseRow& pivot, const BigInt& b) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j >= pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, a * row[i].second);
      ++i;
    } else if (i >= row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -b * pivot[j].second);
      ++j;
    } else {
      BigInt v = a * row[i].second - b * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

int sparse_rank(std::vector<SparseRow> rows) {
  std::unordered_map<int, SparseRow> pivots;  // leading column -> row
  int rank = 0;
  for (auto& row : rows) {
    normalize_row(row);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      const SparseRow& p = it->second;
      row = combine(row, p.front().second, p, row.front().second);
      normalize_row(row);
    }
    if (!row.empty()) {
      int lead = row.front().first;
      pivots.emplace(lead, std::move(row));
      ++rank;
    }
  }
  return rank;
}

void enumerate_monomials(const GradedAlphabet& alphabet, int degree, Monomial* current,
                         std::vector<Monomial>* out) {
  if (degree == 0) {
    out->push_back(*current);
    return;
  }
  for (size_t i = 0; i < alphabet.letters.size(); ++i) {
    int d = alphabet.letters[i].degree;
    if (d > degree) continue;
    current->push_back(static_cast<int>(i));
    enumerate_monomials(alphabet, degree - d, current, out);
    current->pop_back();
  }
}

}  // namespace

std::vector<BigInt> quotient_hilbert_oracle(const GradedAlphabet& alphabet,
                                            const std::vector<TensorElement>& relations,
                                            int max_degree, std::int64_t budget) {
  for (const auto& r : relations) {
    if (r.is_zero()) throw DomainError("zero relation in quotient oracle");
    if (!r.homogeneous(alphabet)) throw DomainError("relations must be homogeneous");
  }
  std::vector<std::vector<Monomial>> basis(max_degree + 1);
  for (int d = 0; d <= max_degree; ++d) {
    Monomial cur;
    enumerate_monomials(alphabet, d, &cur, &basis[d]);
    if (static_cast<std::int64_t>(basis[d].size()) > budget)
      throw BudgetError("monomial basis exceeds the oracle budget");
  }

  std::vector<BigInt> dims(max_degree + 1);
  std::int64_t rows_used = 0;
  for (int d = 0; d <= max_degree; ++d) {
    std::map<Monomial, int> column;
    std::vector<SparseRow> rows;
    for (const auto& rel : relations) {
      int e = rel.degree(alphabet);
      if (e > d) continue;
      for (int left = 0; left + e <= d; ++left) {
        int right = d - e - left;
        for (const auto& u : basis[left]) {
          for (const auto& v : basis[right]) {
            SparseRow row;
            for (const auto& [m, c] : rel.terms) {
              Monomial w = u;
              w.insert(w.end(), m.begin(), m.end());
              w.insert(w.end(), v.begin(), v.end());
              auto [it, inserted] = column.try_emplace(w, static_cast<int>(column.size()));
              row.emplace_back(it->second, c);
            }
            std::sort(row.begin(), row.end());
            // merge duplicate columns (u m v can coincide for distinct m)
            SparseRow merged;
            for (auto& [c, v2] : row) {
              if (!merged.empty() && merged.back().first == c)
                merged.back().second += v2;
              else
                merged.emplace_back(c, v2);
            }
            std::erase_if(merged, [](const auto& p) { return p.second == 0; });
            if (!merged.empty()) rows.push_back(std::move(merged));
            if (++rows_used > budget)
              throw BudgetError("ideal spanning set exceeds the oracle budget");
          }
        }
      }
    }
    dims[d] = BigInt(basis[d].size()) - sparse_rank(std::move(rows));
  }
  return dims;
}

}  // namespace kmps
