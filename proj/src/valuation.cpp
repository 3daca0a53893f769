#include "valsemi/valuation.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

namespace valsemi {

unsigned degree(const ExponentVector& e) {
  unsigned d = 0;
  for (unsigned x : e) d += x;
  return d;
}

SparsePolynomial SparsePolynomial::monomial(ExponentVector e, Rational coeff) {
  while (!e.empty() && e.back() == 0) e.pop_back();
  SparsePolynomial f;
  if (!coeff.is_zero()) f.terms_.emplace(std::move(e), std::move(coeff));
  return f;
}

void SparsePolynomial::add_term(const ExponentVector& e, const Rational& coeff) {
  ExponentVector key = e;
  while (!key.empty() && key.back() == 0) key.pop_back();
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (!coeff.is_zero()) terms_.emplace(std::move(key), coeff);
    return;
  }
  Rational sum = it->second + coeff;
  if (sum.is_zero())
    terms_.erase(it);
  else
    it->second = sum;
}

unsigned SparsePolynomial::variables_used() const {
  unsigned n = 0;
  for (const auto& [e, c] : terms_)
    n = std::max(n, static_cast<unsigned>(e.size()));
  return n;
}

SparsePolynomial operator+(const SparsePolynomial& f, const SparsePolynomial& g) {
  SparsePolynomial h = f;
  for (const auto& [e, c] : g.terms_) h.add_term(e, c);
  return h;
}

SparsePolynomial operator-(const SparsePolynomial& f, const SparsePolynomial& g) {
  SparsePolynomial h = f;
  for (const auto& [e, c] : g.terms_) h.add_term(e, -c);
  return h;
}

SparsePolynomial operator*(const SparsePolynomial& f, const SparsePolynomial& g) {
  SparsePolynomial h;
  for (const auto& [ef, cf] : f.terms_) {
    for (const auto& [eg, cg] : g.terms_) {
      ExponentVector e(std::max(ef.size(), eg.size()), 0);
      for (std::size_t i = 0; i < ef.size(); ++i) e[i] += ef[i];
      for (std::size_t i = 0; i < eg.size(); ++i) e[i] += eg[i];
      h.add_term(e, cf * cg);
    }
  }
  return h;
}

namespace {

// Term grammar: optional rational coefficient followed by variable factors
// `v` or `v^k`, with v one of x, y, z, w or an indexed x1, x2, ...
class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  SparsePolynomial parse() {
    SparsePolynomial f;
    skip_ws();
    if (done()) return f;  // empty input is the zero polynomial
    bool negative = accept_sign();
    parse_term(f, negative);
    while (skip_ws(), !done()) {
      char c = text_[pos_];
      if (c != '+' && c != '-') throw ParseError("expected '+' or '-' in polynomial");
      ++pos_;
      skip_ws();
      parse_term(f, c == '-');
    }
    return f;
  }

 private:
  bool done() const { return pos_ >= text_.size(); }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept_sign() {
    if (!done() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      bool neg = text_[pos_] == '-';
      ++pos_;
      skip_ws();
      return neg;
    }
    return false;
  }

  unsigned parse_uint() {
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected a number in polynomial");
    return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  Rational parse_coeff() {
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::size_t num_end = pos_;
    if (!done() && text_[pos_] == '/') {
      ++pos_;
      while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == num_end + 1) throw ParseError("expected denominator after '/'");
    }
    return Rational::parse(text_.substr(start, pos_ - start));
  }

  // Returns the zero-based variable index, or nullopt if not at a variable.
  std::optional<unsigned> parse_variable() {
    if (done()) return std::nullopt;
    char c = text_[pos_];
    if (c == 'y') { ++pos_; return 1; }
    if (c == 'z') { ++pos_; return 2; }
    if (c == 'w') { ++pos_; return 3; }
    if (c != 'x') return std::nullopt;
    ++pos_;
    if (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      unsigned idx = parse_uint();
      if (idx == 0) throw ParseError("variable indices start at 1");
      return idx - 1;
    }
    return 0;
  }

  void parse_term(SparsePolynomial& f, bool negative) {
    Rational coeff(1);
    if (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) coeff = parse_coeff();
    ExponentVector e;
    bool any_factor = false;
    while (true) {
      skip_ws();
      std::size_t before = pos_;
      auto var = parse_variable();
      if (!var) {
        pos_ = before;
        break;
      }
      any_factor = true;
      unsigned exp = 1;
      skip_ws();
      if (!done() && text_[pos_] == '^') {
        ++pos_;
        skip_ws();
        exp = parse_uint();
      }
      if (e.size() <= *var) e.resize(*var + 1, 0);
      e[*var] += exp;
    }
    if (!any_factor && coeff == Rational(1) && (done() || text_[pos_] != '+')) {
      // bare coefficient "3" is fine; bare garbage is not
      if (!done() && text_[pos_] != '+' && text_[pos_] != '-' &&
          !std::isspace(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("unexpected character in polynomial");
    }
    f.add_term(e, negative ? -coeff : coeff);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePolynomial SparsePolynomial::parse(std::string_view text) {
  return PolyParser(text).parse();
}

MonomialValuation::MonomialValuation(unsigned n_, std::vector<Rational> weights_)
    : n(n_), weights(std::move(weights_)) {
  if (n == 0 || weights.size() != n)
    throw DimensionMismatchError("monomial valuation needs one weight per variable");
  for (const auto& wt : weights)
    if (!wt.is_positive())
      throw std::domain_error("monomial valuation weights must be positive");
}

Rational MonomialValuation::weight_of(const ExponentVector& e) const {
  if (e.size() > n)
    throw DimensionMismatchError("exponent vector uses more than n variables");
  Rational total;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) total = total + weights[i] * BigNat(e[i]);
  return total;
}

std::optional<Rational> value_of(const MonomialValuation& v, const SparsePolynomial& f) {
  if (f.is_zero()) return std::nullopt;
  if (f.variables_used() > v.n)
    throw DimensionMismatchError("polynomial uses more variables than the valuation has weights");
  std::optional<Rational> best;
  for (const auto& [e, c] : f.terms()) {
    Rational w = v.weight_of(e);
    if (!best || w < *best) best = w;
  }
  return best;
}

namespace {

void exponents_rec(const MonomialValuation& v, unsigned var, unsigned remaining,
                   const Rational& partial, std::set<Rational>& out) {
  if (var == v.n) {
    out.insert(partial);
    return;
  }
  Rational acc = partial;
  for (unsigned k = 0; k <= remaining; ++k) {
    exponents_rec(v, var + 1, remaining - k, acc, out);
    acc = acc + v.weights[var];
  }
}

}  // namespace

std::vector<Rational> enumerate_Sd(const MonomialValuation& v, unsigned d) {
  if (d == 0) throw std::domain_error("enumerate_Sd requires d >= 1");
  std::set<Rational> values;
  exponents_rec(v, 0, d, Rational(), values);
  values.erase(Rational());  // the zero exponent vector is excluded
  return std::vector<Rational>(values.begin(), values.end());
}

Lemma1Report verify_lemma1(const MonomialValuation& v, unsigned d) {
  Lemma1Report report;
  report.n = v.n;
  report.d = d;
  report.cardinality = BigNat(enumerate_Sd(v, d).size());
  report.bound = binomial(v.n + d, v.n);
  report.holds = report.cardinality < report.bound;
  return report;
}

Lemma2Report verify_lemma2(const MonomialValuation& v, unsigned d) {
  if (d == 0) throw std::domain_error("verify_lemma2 requires d >= 1");
  Lemma2Report report;
  report.n = v.n;
  report.d = d;
  report.s0 = *std::min_element(v.weights.begin(), v.weights.end());
  Rational cutoff = report.s0 * BigNat(d + 1);

  // The monomial values of m_n - {0} form exactly the semigroup generated by
  // the weights.
  GeneratorSpec spec = GeneratorSpec::explicit_list(v.weights);
  BoundedSemigroup s = enumerate_up_to(spec, cutoff);
  report.count = count_below(s, cutoff);
  report.bound = binomial(v.n + d, v.n);
  report.holds = report.count < report.bound;

  std::vector<Rational> sd = enumerate_Sd(v, d);
  std::vector<Rational> sd_trunc;
  for (const auto& q : sd)
    if (q < cutoff) sd_trunc.push_back(q);
  std::vector<Rational> s_trunc(s.elements.begin(),
                                std::lower_bound(s.elements.begin(), s.elements.end(), cutoff));
  report.truncation_identity = sd_trunc == s_trunc;
  return report;
}

}  // namespace valsemi
