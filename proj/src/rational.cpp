#include "valsemi/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <ostream>
#include <utility>

namespace valsemi {

BigNat binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigNat result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: C(n-k+i, i) is an integer
  }
  return result;
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  reduce();
}

void Rational::reduce() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

Rational Rational::parse(std::string_view text) {
  auto bad = [&] { return ParseError("malformed rational: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  auto slash = text.find('/');
  std::string_view num_part = text.substr(0, slash);
  if (num_part.empty()) throw bad();
  std::size_t i = (num_part[0] == '+' || num_part[0] == '-') ? 1 : 0;
  if (i == num_part.size()) throw bad();
  for (std::size_t j = i; j < num_part.size(); ++j)
    if (num_part[j] < '0' || num_part[j] > '9') throw bad();
  // cpp_int's string constructor rejects a leading '+'
  BigInt num{std::string(num_part[0] == '+' ? num_part.substr(1) : num_part)};
  if (slash == std::string_view::npos) return Rational(std::move(num));
  std::string_view den_part = text.substr(slash + 1);
  if (den_part.empty()) throw bad();
  for (char c : den_part)
    if (c < '0' || c > '9') throw bad();
  BigInt den{std::string(den_part)};
  if (den == 0) throw bad();
  return Rational(std::move(num), std::move(den));
}

BigInt Rational::floor() const {
  BigInt q = num_ / den_;
  if (num_ < 0 && q * den_ != num_) --q;
  return q;
}

std::string Rational::str() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += '/';
    s += den_.str();
  }
  return s;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational operator*(const Rational& q, const BigNat& m) {
  return Rational(q.num() * m, q.den());
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace valsemi
