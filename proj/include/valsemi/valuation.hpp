#ifndef VALSEMI_VALUATION_HPP
#define VALSEMI_VALUATION_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "valsemi/rational.hpp"
#include "valsemi/semigroup.hpp"

namespace valsemi {

struct DimensionMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Monomial exponents; degree is the coordinate sum.
using ExponentVector = std::vector<unsigned>;

unsigned degree(const ExponentVector& e);

/// Polynomial over Q in sparse form. Terms with zero coefficient are never
/// stored; addition cancels exactly.
class SparsePolynomial {
 public:
  SparsePolynomial() = default;

  static SparsePolynomial monomial(ExponentVector e, Rational coeff);

  /// Parses a sum of terms "c x^a y^b", e.g. "x^2 + y", "3/2 x y^2 - z".
  /// Variables: x, y, z, w or x1, x2, ... Coefficients are rationals.
  static SparsePolynomial parse(std::string_view text);

  void add_term(const ExponentVector& e, const Rational& coeff);

  bool is_zero() const { return terms_.empty(); }
  const std::map<ExponentVector, Rational>& terms() const { return terms_; }

  /// Number of variables actually used (1 + highest nonzero coordinate).
  unsigned variables_used() const;

  friend SparsePolynomial operator+(const SparsePolynomial& f, const SparsePolynomial& g);
  friend SparsePolynomial operator-(const SparsePolynomial& f, const SparsePolynomial& g);
  friend SparsePolynomial operator*(const SparsePolynomial& f, const SparsePolynomial& g);

 private:
  std::map<ExponentVector, Rational> terms_;
};

/// Rank-1 monomial valuation on k[x_1..x_n]: each polynomial is valued at the
/// minimum weighted degree over its support. All weights strictly positive,
/// so the valuation dominates the local ring at the origin.
struct MonomialValuation {
  unsigned n;
  std::vector<Rational> weights;

  MonomialValuation(unsigned n_, std::vector<Rational> weights_);

  Rational weight_of(const ExponentVector& e) const;
};

/// Value of f; nullopt encodes the infinite value of the zero polynomial.
std::optional<Rational> value_of(const MonomialValuation& v, const SparsePolynomial& f);

/// The value set of the nonzero polynomials of degree <= d with zero constant
/// term. For a monomial valuation this is the set of weights of the nonzero
/// exponent vectors of degree <= d.
std::vector<Rational> enumerate_Sd(const MonomialValuation& v, unsigned d);

struct Lemma1Report {
  unsigned n = 0;
  unsigned d = 0;
  BigNat cardinality;
  BigNat bound;  // C(n+d, n)
  bool holds = false;
};

struct Lemma2Report {
  unsigned n = 0;
  unsigned d = 0;
  Rational s0;
  BigNat count;  // |S(v) ∩ [0, (d+1) s0)|
  BigNat bound;  // C(n+d, n)
  bool holds = false;
  /// S(v) ∩ [0,(d+1)s0) computed from the weight semigroup must equal
  /// S_d(v) ∩ [0,(d+1)s0) from the degree-bounded value set.
  bool truncation_identity = false;
};

/// Checks |S_d(v)| < C(n+d, n). Always true for a valuation; a false here
/// indicates a defect, not a data outcome.
Lemma1Report verify_lemma1(const MonomialValuation& v, unsigned d);

/// Checks |S(v) ∩ [0,(d+1)s0)| < C(n+d, n) with s0 the minimum weight, and
/// the truncation identity above. S(v) is realized as the additive semigroup
/// generated by the weights.
Lemma2Report verify_lemma2(const MonomialValuation& v, unsigned d);

}  // namespace valsemi

#endif
