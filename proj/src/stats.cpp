#include "primebias/stats.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace primebias {

double unbiased_ratio() {
  return std::numbers::pi * std::numbers::pi / 3.0 - 1.0;
}

double unbiased_ratio_all_integers() {
  return std::numbers::pi * std::numbers::pi / 6.0 - 1.0;
}

double bias_ratio(const Tally& t) {
  if (t.b == 0) throw std::domain_error("bias_ratio: b must be >= 1");
  return static_cast<double>(t.a - t.b) / static_cast<double>(t.b);
}

double relative_difference(double r, double r0) {
  if (r0 == 0.0)
    throw std::domain_error("relative_difference: r0 must be nonzero");
  return std::abs(r - r0) / r0;
}

i64 excess(double r, double r0) { return std::llround(1000.0 * (r - r0)); }

BiasReport redistribution_report(const Tally& t, u64 centered_total) {
  if (centered_total < t.b)
    throw std::invalid_argument(
        "redistribution_report: centered_total must be >= b");

  BiasReport rep;
  rep.r = bias_ratio(t);
  rep.r0 = unbiased_ratio();
  rep.rel_diff = relative_difference(rep.r, rep.r0);
  rep.epsilon = excess(rep.r, rep.r0);

  rep.expected_b = static_cast<u64>(
      std::llround(static_cast<double>(centered_total) / (rep.r0 + 1.0)));
  if (rep.expected_b == 0 || rep.expected_b == centered_total)
    throw std::domain_error("redistribution_report: degenerate expected_b");

  rep.deficit = static_cast<i64>(rep.expected_b) - static_cast<i64>(t.b);
  rep.relative_deficit =
      static_cast<double>(rep.deficit) / static_cast<double>(rep.expected_b);
  rep.relative_excess = static_cast<double>(rep.deficit) /
                        static_cast<double>(centered_total - rep.expected_b);
  rep.redistribution_share =
      static_cast<double>(rep.deficit) / static_cast<double>(centered_total);
  return rep;
}

}  // namespace primebias
