#ifndef VALSEMI_SEMIGROUP_HPP
#define VALSEMI_SEMIGROUP_HPP

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "valsemi/rational.hpp"

namespace valsemi {

struct EnumerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyGeneratorsError : EnumerationError {
  using EnumerationError::EnumerationError;
};
struct ProfileHorizonError : EnumerationError {
  using EnumerationError::EnumerationError;
};
struct BudgetExceededError : EnumerationError {
  using EnumerationError::EnumerationError;
};
struct BoundTooSmallError : EnumerationError {
  using EnumerationError::EnumerationError;
};

/// A generator set for an additive subsemigroup of the positive rationals.
/// Either an explicit finite list, or a block profile assigning to each
/// integer m in 1..horizon a finite sorted set of generators inside [m, m+1).
class GeneratorSpec {
 public:
  using BlockRule = std::function<std::vector<Rational>(unsigned)>;

  static GeneratorSpec explicit_list(std::vector<Rational> generators);
  static GeneratorSpec profile(BlockRule rule, unsigned horizon);

  bool is_profile() const { return profile_; }
  unsigned horizon() const { return horizon_; }

  /// Smallest generator of the spec, independent of any bound.
  Rational min_generator() const;

  /// All generators <= bound, sorted and deduplicated.
  /// Profile blocks are taken for every m < bound; throws ProfileHorizonError
  /// if such a block lies beyond the horizon.
  std::vector<Rational> realize(const Rational& bound) const;

  /// Elementwise scaling by a positive rational; explicit lists only
  /// (a scaled profile would leave its integer blocks).
  GeneratorSpec scaled(const Rational& c) const;

 private:
  GeneratorSpec() = default;

  std::vector<Rational> generators_;
  BlockRule rule_;
  unsigned horizon_ = 0;
  bool profile_ = false;
};

/// All elements of the generated semigroup in (0, bound], sorted strictly
/// increasing. s0 is the minimum element (= minimum generator). complete is
/// false only when a stop predicate cut the enumeration short.
struct BoundedSemigroup {
  Rational bound;
  std::vector<Rational> elements;
  Rational s0;
  bool complete = true;
};

struct EnumerateOptions {
  std::size_t budget = 10'000'000;
  /// Called after each emitted element with (value, number emitted so far);
  /// returning true stops the enumeration mid-stream.
  std::function<bool(const Rational&, std::size_t)> stop;
};

/// Sorted enumeration of the generated semigroup up to bound. Min-heap
/// frontier seeded with the generators; each popped value v spawns v + g for
/// every generator g with v + g <= bound, and a seen-set keeps each value on
/// the heap at most once, so values come off the heap in increasing order
/// without duplicates.
BoundedSemigroup enumerate_up_to(const GeneratorSpec& spec, const Rational& bound,
                                 const EnumerateOptions& options = {});

/// |S ∩ [0, x)|, the half-open count. Requires x <= S.bound.
BigNat count_below(const BoundedSemigroup& s, const Rational& x);

/// Membership by binary search. Requires 0 < q <= S.bound.
bool contains(const BoundedSemigroup& s, const Rational& q);

/// All sums of exactly r elements of `values` (with repetition) that are
/// <= bound, sorted and deduplicated. Brute-force oracle for enumerate_up_to:
/// the union over r = 1..ceil(bound/s0) must reproduce its elements.
std::vector<Rational> sumset_r(const std::vector<Rational>& values, unsigned r,
                               const Rational& bound);

}  // namespace valsemi

#endif
