#include "valsemi/obstruction.hpp"

#include <algorithm>

namespace valsemi {

BigNat theorem1_bound(unsigned n, unsigned d) {
  if (n == 0) throw std::domain_error("theorem1_bound requires n >= 1");
  return binomial(n + d, n);
}

ObstructionReport check(const GeneratorSpec& spec, unsigned n, unsigned d_max,
                        const CheckOptions& options) {
  if (n == 0 || d_max == 0) throw std::domain_error("check requires n, d_max >= 1");

  ObstructionReport report;
  report.n = n;
  report.d_max = d_max;
  report.s0 = spec.min_generator();
  Rational bound = report.s0 * BigNat(d_max + 1);

  report.rows.resize(d_max);
  for (unsigned d = 1; d <= d_max; ++d) {
    report.rows[d - 1].d = d;
    report.rows[d - 1].bound = theorem1_bound(n, d);
  }
  auto threshold = [&](unsigned d) { return report.s0 * BigNat(d + 1); };

  EnumerateOptions enumerate_options;
  enumerate_options.budget = options.budget;

  // Streamed verdict detection. Elements arrive in increasing order, so row
  // d's count is final the moment an element >= (d+1)s0 appears; before
  // that, the running total is its count so far.
  unsigned next_open = 1;  // least row whose count is not yet final
  std::size_t emitted = 0;
  if (options.early_exit) {
    enumerate_options.stop = [&](const Rational& v, std::size_t count) {
      emitted = count;
      while (next_open <= d_max && v >= threshold(next_open)) {
        report.rows[next_open - 1].count = BigNat(count - 1);
        if (report.rows[next_open - 1].count >= report.rows[next_open - 1].bound) {
          report.rows[next_open - 1].violated = true;
          report.violated_at = next_open;
          return true;
        }
        ++next_open;
      }
      if (next_open <= d_max && BigNat(count) >= report.rows[next_open - 1].bound) {
        report.rows[next_open - 1].count = BigNat(count);
        report.rows[next_open - 1].violated = true;
        report.violated_at = next_open;
        return true;
      }
      return false;
    };
  }

  BoundedSemigroup s = enumerate_up_to(spec, bound, enumerate_options);
  report.complete = s.complete;

  if (s.complete) {
    for (auto& row : report.rows) {
      row.count = count_below(s, threshold(row.d));
      row.violated = row.count >= row.bound;
      if (row.violated && !report.violated_at) report.violated_at = row.d;
    }
  } else {
    // Rows past the witness hold the running count; still a valid lower
    // bound and consistent with violated <=> count >= bound.
    for (unsigned d = report.violated_at.value_or(next_open) + 1; d <= d_max; ++d) {
      report.rows[d - 1].count = BigNat(emitted);
      report.rows[d - 1].violated = report.rows[d - 1].count >= report.rows[d - 1].bound;
    }
  }
  return report;
}

std::optional<unsigned> min_consistent_n(const GeneratorSpec& spec, unsigned d_max,
                                         unsigned n_max, const CheckOptions& options) {
  for (unsigned n = 1; n <= n_max; ++n) {
    if (!check(spec, n, d_max, options).violated_at) return n;
  }
  return std::nullopt;
}

GeneratorSpec example1_generators(unsigned n_blocks) {
  if (n_blocks == 0) throw std::domain_error("example1_generators requires n_blocks >= 1");
  auto rule = [](unsigned m) {
    BigNat size = binomial(2 * m, m);
    std::vector<Rational> block;
    Rational base{BigInt(m)};
    Rational spacing{BigInt(1), BigInt(size)};
    for (BigNat j = 0; j < size; ++j) block.push_back(base + spacing * j);
    return block;
  };
  return GeneratorSpec::profile(rule, n_blocks);
}

Certificate example1_certificate(unsigned n, std::size_t budget) {
  if (n == 0) throw std::domain_error("example1_certificate requires n >= 1");
  Certificate cert;
  cert.n = n;
  cert.lhs = binomial(2 * n, n);
  cert.rhs = cert.lhs - 1;

  Rational cutoff{BigInt(n) + 1};
  EnumerateOptions options;
  options.budget = budget;
  BoundedSemigroup u = enumerate_up_to(example1_generators(n), cutoff, options);
  cert.mid = count_below(u, cutoff);
  cert.chain_holds = cert.lhs <= cert.mid && cert.lhs > cert.rhs;
  return cert;
}

}  // namespace valsemi
