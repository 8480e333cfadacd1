#include "primebias/baseline.hpp"

#include <stdexcept>

namespace primebias {

Tally scan_multiples(BaselineKind kind, bool include_primes,
                     const SieveSegment& win, u64 n_from, u64 n_to) {
  if (n_from < 1 || n_from >= n_to)
    throw std::invalid_argument("scan_multiples: need 1 <= n_from < n_to");
  if (win.lo > 6 * n_from - 1 || win.hi < 6 * (n_to - 1) + 2)
    throw std::invalid_argument(
        "scan_multiples: window must cover [6*n_from - 1, 6*(n_to - 1) + 2)");

  Tally t;
  for (u64 n = n_from; n < n_to; ++n) {
    const u64 center = 6 * n;
    bool hit;
    if (kind == BaselineKind::nonsqf_twins) {
      hit = !win.is_squarefree(center - 1) && !win.is_squarefree(center + 1);
    } else {
      const bool left = win.is_squarefree(center - 1) &&
                        (include_primes || !win.is_prime(center - 1));
      const bool right = win.is_squarefree(center + 1) &&
                         (include_primes || !win.is_prime(center + 1));
      hit = kind == BaselineKind::sqf_twins ? (left && right) : (left || right);
    }
    if (hit) {
      ++t.a;
      if (win.is_squarefree(center)) ++t.b;
    }
  }
  return t;
}

namespace {

Tally count_multiples(BaselineKind kind, bool include_primes, u64 m,
                      u64 segment_size) {
  if (segment_size < 64)
    throw std::invalid_argument("segment_size must be >= 64");
  Tally total;
  if (m == 0) return total;

  const BasePrimes base = small_primes(std::max<u64>(2, ceil_sqrt(6 * m + 2)));
  for (u64 n_lo = 1; n_lo <= m; n_lo += segment_size) {
    const u64 n_hi = std::min(n_lo + segment_size, m + 1);
    const SieveSegment win =
        sieve_segment(6 * n_lo - 1, 6 * (n_hi - 1) + 2, base);
    total += scan_multiples(kind, include_primes, win, n_lo, n_hi);
  }
  return total;
}

}  // namespace

Tally count_sqf_twins(u64 m, bool include_primes, u64 segment_size) {
  return count_multiples(BaselineKind::sqf_twins, include_primes, m,
                         segment_size);
}

Tally count_sqf_neighbors(u64 m, bool include_primes, u64 segment_size) {
  return count_multiples(BaselineKind::sqf_neighbors, include_primes, m,
                         segment_size);
}

Tally count_nonsqf_twins(u64 m, u64 segment_size) {
  return count_multiples(BaselineKind::nonsqf_twins, true, m, segment_size);
}

}  // namespace primebias
