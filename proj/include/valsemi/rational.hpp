#ifndef VALSEMI_RATIONAL_HPP
#define VALSEMI_RATIONAL_HPP

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace valsemi {

using BigInt = boost::multiprecision::cpp_int;
// Nonnegative by convention; counts, cardinalities and binomial coefficients.
using BigNat = boost::multiprecision::cpp_int;

/// Exact binomial coefficient C(n, k). Returns 0 when k > n.
/// Multiplicative formula; every intermediate division is exact.
BigNat binomial(unsigned n, unsigned k);

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact rational number in canonical form: gcd(|num|, den) = 1, den >= 1,
/// zero is 0/1. Immutable after construction.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long n) : num_(n), den_(1) {}       // NOLINT(google-explicit-constructor)
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt num, BigInt den);

  /// Parses "p/q" or "p" (q omitted when 1), optional sign on p.
  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_positive() const { return num_ > 0; }
  bool is_integer() const { return den_ == 1; }

  /// Largest integer <= this.
  BigInt floor() const;

  /// Canonical text form, e.g. "3/2", "7", "-1/3".
  std::string str() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  // Cross-multiplication comparison; denominators are positive so the
  // result agrees with real-number order.
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void reduce();

  BigInt num_;
  BigInt den_;
};

Rational operator*(const Rational& q, const BigNat& m);

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace valsemi

template <>
struct std::hash<valsemi::Rational> {
  std::size_t operator()(const valsemi::Rational& q) const {
    std::size_t seed = 0;
    boost::hash_combine(seed, q.num());
    boost::hash_combine(seed, q.den());
    return seed;
  }
};

#endif
