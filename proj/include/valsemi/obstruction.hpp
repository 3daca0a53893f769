#ifndef VALSEMI_OBSTRUCTION_HPP
#define VALSEMI_OBSTRUCTION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "valsemi/rational.hpp"
#include "valsemi/semigroup.hpp"

namespace valsemi {

/// The bound of the obstruction inequality: C(n+d, n).
BigNat theorem1_bound(unsigned n, unsigned d);

struct ObstructionRow {
  unsigned d = 0;
  BigNat count;  // |S ∩ [0, (d+1) s0)|
  BigNat bound;  // C(n+d, n)
  bool violated = false;
};

/// Outcome of testing |S ∩ [0,(d+1)s0)| < C(n+d, n) for d = 1..d_max against
/// a candidate embedding dimension n. A violation proves the semigroup is not
/// the value semigroup of any valuation dominating an equicharacteristic
/// local domain with that embedding dimension; consistency proves nothing
/// (the condition is necessary, not sufficient).
struct ObstructionReport {
  unsigned n = 0;
  Rational s0;
  unsigned d_max = 0;
  std::vector<ObstructionRow> rows;
  /// Least violating d, if any.
  std::optional<unsigned> violated_at;
  /// False when early exit stopped the enumeration; rows at or beyond the
  /// witness then hold the count seen so far rather than the exact count.
  bool complete = true;
};

struct CheckOptions {
  std::size_t budget = 10'000'000;
  /// Stop enumerating as soon as the least violating d is determined.
  bool early_exit = false;
};

ObstructionReport check(const GeneratorSpec& spec, unsigned n, unsigned d_max,
                        const CheckOptions& options = {});

/// Smallest n in 1..n_max with a consistent report, or nullopt. Sound because
/// the bounds C(n+d, n) grow with n while the counts do not move.
std::optional<unsigned> min_consistent_n(const GeneratorSpec& spec, unsigned d_max,
                                         unsigned n_max, const CheckOptions& options = {});

/// The counterexample generator set: for m = 1..n_blocks, block m holds the
/// C(2m, m) equally spaced rationals m + j/C(2m, m), j = 0..C(2m, m)-1,
/// all inside [m, m+1).
GeneratorSpec example1_generators(unsigned n_blocks);

/// Witness that the counterexample semigroup U is not a value semigroup over
/// a domain with embedding dimension n: the generator block alone forces
/// |U ∩ [0, n+1)| >= C(2n, n), while the obstruction inequality would cap it
/// at C(2n, n) - 1.
struct Certificate {
  unsigned n = 0;
  BigNat lhs;  // C(2n, n) = |T ∩ [n, n+1)|
  BigNat mid;  // |U ∩ [0, n+1)|
  BigNat rhs;  // C(2n, n) - 1
  bool chain_holds = false;
};

Certificate example1_certificate(unsigned n, std::size_t budget = 10'000'000);

}  // namespace valsemi

#endif
