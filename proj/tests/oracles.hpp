#pragma once

// Brute-force references for the counting experiments. Everything here
// works off the trial-division oracles only; the segmented sieve never
// enters these paths.

#include <vector>

#include "primebias/classify.hpp"

namespace primebias::testing {

// First n primes by trial division.
inline std::vector<u64> bf_first_primes(u64 n) {
  std::vector<u64> primes;
  for (u64 v = 2; primes.size() < n; ++v)
    if (is_prime_oracle(v)) primes.push_back(v);
  return primes;
}

inline Tally bf_count_twins(u64 n) {
  Tally t;
  for (u64 p : bf_first_primes(n)) {
    if (!is_prime_oracle(p + 2)) continue;
    ++t.a;
    if (is_squarefree_oracle(p + 1)) ++t.b;
  }
  return t;
}

inline Tally bf_count_isolated(u64 n) {
  Tally t;
  for (u64 p : bf_first_primes(n)) {
    if (p == 2 || is_prime_oracle(p + 2) || is_prime_oracle(p - 2)) continue;
    ++t.a;
    const u64 m6 = p % 6 == 1 ? p - 1 : p + 1;
    if (is_squarefree_oracle(m6)) ++t.b;
  }
  return t;
}

inline Tally bf_count_sqf_twins(u64 m, bool include_primes) {
  Tally t;
  for (u64 n = 1; n <= m; ++n) {
    const bool left = is_squarefree_oracle(6 * n - 1) &&
                      (include_primes || !is_prime_oracle(6 * n - 1));
    const bool right = is_squarefree_oracle(6 * n + 1) &&
                       (include_primes || !is_prime_oracle(6 * n + 1));
    if (left && right) {
      ++t.a;
      if (is_squarefree_oracle(6 * n)) ++t.b;
    }
  }
  return t;
}

inline Tally bf_count_sqf_neighbors(u64 m, bool include_primes) {
  Tally t;
  for (u64 n = 1; n <= m; ++n) {
    const bool left = is_squarefree_oracle(6 * n - 1) &&
                      (include_primes || !is_prime_oracle(6 * n - 1));
    const bool right = is_squarefree_oracle(6 * n + 1) &&
                       (include_primes || !is_prime_oracle(6 * n + 1));
    if (left || right) {
      ++t.a;
      if (is_squarefree_oracle(6 * n)) ++t.b;
    }
  }
  return t;
}

inline Tally bf_count_nonsqf_twins(u64 m) {
  Tally t;
  for (u64 n = 1; n <= m; ++n) {
    if (is_squarefree_oracle(6 * n - 1) || is_squarefree_oracle(6 * n + 1))
      continue;
    ++t.a;
    if (is_squarefree_oracle(6 * n)) ++t.b;
  }
  return t;
}

}  // namespace primebias::testing
