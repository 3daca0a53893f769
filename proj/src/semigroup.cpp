#include "valsemi/semigroup.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_set>
#include <utility>

namespace valsemi {

GeneratorSpec GeneratorSpec::explicit_list(std::vector<Rational> generators) {
  if (generators.empty()) throw EmptyGeneratorsError("explicit generator list is empty");
  for (const auto& g : generators)
    if (!g.is_positive())
      throw EnumerationError("nonpositive generator: " + g.str());
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  GeneratorSpec spec;
  spec.generators_ = std::move(generators);
  return spec;
}

GeneratorSpec GeneratorSpec::profile(BlockRule rule, unsigned horizon) {
  if (!rule || horizon == 0) throw EnumerationError("profile needs a block rule and horizon >= 1");
  GeneratorSpec spec;
  spec.rule_ = std::move(rule);
  spec.horizon_ = horizon;
  spec.profile_ = true;
  return spec;
}

Rational GeneratorSpec::min_generator() const {
  if (!profile_) return generators_.front();
  for (unsigned m = 1; m <= horizon_; ++m) {
    auto block = rule_(m);
    if (!block.empty()) return block.front();
  }
  throw EmptyGeneratorsError("all profile blocks are empty");
}

std::vector<Rational> GeneratorSpec::realize(const Rational& bound) const {
  if (!bound.is_positive()) throw EnumerationError("bound must be positive");
  std::vector<Rational> out;
  if (!profile_) {
    for (const auto& g : generators_)
      if (g <= bound) out.push_back(g);
  } else {
    // Block m lives in [m, m+1); blocks with m < bound are required. When
    // the bound is an integer, block m = bound can contribute the single
    // element m, so take it too if the horizon reaches that far.
    BigInt required = bound.floor();
    if (bound.is_integer()) --required;
    if (required > horizon_)
      throw ProfileHorizonError("bound " + bound.str() + " needs profile blocks beyond horizon " +
                                std::to_string(horizon_));
    BigInt last = required;
    if (bound.is_integer() && bound.floor() <= horizon_) last = bound.floor();
    for (unsigned m = 1; BigInt(m) <= last; ++m) {
      auto block = rule_(m);
      for (const auto& g : block) {
        if (g < Rational(BigInt(m)) || g >= Rational(BigInt(m) + 1))
          throw EnumerationError("profile block " + std::to_string(m) +
                                 " has element outside its interval: " + g.str());
        if (g <= bound) out.push_back(g);
      }
    }
  }
  if (out.empty()) throw EmptyGeneratorsError("no generator within bound " + bound.str());
  return out;
}

GeneratorSpec GeneratorSpec::scaled(const Rational& c) const {
  if (profile_) throw EnumerationError("cannot scale a profile spec");
  if (!c.is_positive()) throw EnumerationError("scale factor must be positive");
  std::vector<Rational> scaled;
  scaled.reserve(generators_.size());
  for (const auto& g : generators_) scaled.push_back(g * c);
  return explicit_list(std::move(scaled));
}

BoundedSemigroup enumerate_up_to(const GeneratorSpec& spec, const Rational& bound,
                                 const EnumerateOptions& options) {
  std::vector<Rational> generators = spec.realize(bound);

  std::priority_queue<Rational, std::vector<Rational>, std::greater<Rational>> frontier;
  std::unordered_set<Rational> pushed;
  for (const auto& g : generators) {
    if (pushed.insert(g).second) frontier.push(g);
  }

  BoundedSemigroup result;
  result.bound = bound;
  result.s0 = generators.front();

  while (!frontier.empty()) {
    Rational v = frontier.top();
    frontier.pop();
    result.elements.push_back(v);
    if (result.elements.size() > options.budget)
      throw BudgetExceededError("element budget " + std::to_string(options.budget) +
                                " exceeded below bound " + bound.str());
    if (options.stop && options.stop(v, result.elements.size())) {
      result.complete = false;
      return result;
    }
    for (const auto& g : generators) {
      Rational next = v + g;
      if (next > bound) break;  // generators sorted, later sums only grow
      if (pushed.insert(next).second) frontier.push(next);
    }
  }
  return result;
}

BigNat count_below(const BoundedSemigroup& s, const Rational& x) {
  if (x > s.bound)
    throw BoundTooSmallError("count_below at " + x.str() + " exceeds enumerated bound " +
                             s.bound.str());
  auto it = std::lower_bound(s.elements.begin(), s.elements.end(), x);
  return BigNat(static_cast<unsigned long long>(it - s.elements.begin()));
}

bool contains(const BoundedSemigroup& s, const Rational& q) {
  if (q > s.bound)
    throw BoundTooSmallError("membership query " + q.str() + " exceeds enumerated bound " +
                             s.bound.str());
  return std::binary_search(s.elements.begin(), s.elements.end(), q);
}

namespace {

void sumset_rec(const std::vector<Rational>& values, unsigned remaining, std::size_t start,
                const Rational& partial, const Rational& bound, std::set<Rational>& out) {
  if (remaining == 0) {
    out.insert(partial);
    return;
  }
  for (std::size_t i = start; i < values.size(); ++i) {
    Rational next = partial + values[i];
    // values sorted: the cheapest completion uses values[i] for every
    // remaining slot, so prune the whole tail once even that overshoots
    if (next + values[i] * BigNat(remaining - 1) > bound) break;
    sumset_rec(values, remaining - 1, i, next, bound, out);
  }
}

}  // namespace

std::vector<Rational> sumset_r(const std::vector<Rational>& values, unsigned r,
                               const Rational& bound) {
  if (values.empty()) throw EmptyGeneratorsError("sumset of empty value set");
  if (r == 0) throw EnumerationError("sumset requires r >= 1");
  std::vector<Rational> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::set<Rational> out;
  sumset_rec(sorted, r, 0, Rational(), bound, out);
  return std::vector<Rational>(out.begin(), out.end());
}

}  // namespace valsemi
