#pragma once

#include "primebias/classify.hpp"

namespace primebias {

// Nonsquarefree-to-squarefree odds among multiples of 6 in the unbiased
// case: pi^2/3 - 1 = 2.2899 (4 d.p.).
double unbiased_ratio();
// Same odds among all integers: pi^2/6 - 1 = 0.6449 (4 d.p.).
double unbiased_ratio_all_integers();

// R = (a - b) / b. Throws std::domain_error when b = 0.
double bias_ratio(const Tally& t);

// |r - r0| / r0.
double relative_difference(double r, double r0);

// round(1000 * (r - r0)), half away from zero.
i64 excess(double r, double r0);

struct BiasReport {
  double r = 0;
  double r0 = 0;
  double rel_diff = 0;
  i64 epsilon = 0;
  u64 expected_b = 0;  // round(centered_total / (r0 + 1))
  i64 deficit = 0;     // expected_b - b, negative when b overshoots
  double relative_deficit = 0;      // deficit / expected_b
  double relative_excess = 0;       // deficit / (centered_total - expected_b)
  double redistribution_share = 0;  // deficit / centered_total
};

// centered_total is the number of objects actually centered on / adjacent
// to a multiple of 6: a - 1 for twins (the pair {3,5} is not), a otherwise.
// Throws std::invalid_argument when centered_total < t.b and
// std::domain_error when b = 0 or expected_b is degenerate.
BiasReport redistribution_report(const Tally& t, u64 centered_total);

}  // namespace primebias
