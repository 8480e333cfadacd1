#pragma once

#include "primebias/sieve.hpp"

namespace primebias {

inline constexpr u64 kNoLimit = ~u64{0};

// a counts all target objects, b the ones next to / centered on a
// squarefree number. Merging partial tallies is component-wise addition.
struct Tally {
  u64 a = 0;
  u64 b = 0;

  Tally& operator+=(const Tally& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  friend Tally operator+(Tally x, const Tally& y) { return x += y; }
  friend bool operator==(const Tally&, const Tally&) = default;
};

// The multiple of 6 next to p: p-1 for p = 6k+1, p+1 for p = 6k-1.
// Throws std::domain_error for any other residue (in particular 2 and 3).
u64 adjacent_multiple_of_six(u64 p);

enum class PrimeClass { twins, isolated };

struct SegmentCounts {
  Tally tally;
  u64 primes = 0;      // primes consumed in [from, to)
  u64 last_prime = 0;  // value of the last prime consumed
};

// Classify primes in [from, to). win must cover [from - 2, to + 2)
// (clamped at 0) so the p-2 / p+2 / p+-1 lookups stay inside one segment.
// Stops after max_primes primes. twins: p with p+2 prime, squarefree test
// on p+1. isolated: p with neither p-2 nor p+2 prime (2 is skipped),
// squarefree test on the adjacent multiple of 6.
SegmentCounts scan_primes(PrimeClass cls, const SieveSegment& win, u64 from,
                          u64 to, u64 max_primes = kNoLimit);

// Sequential drivers over the first n primes.
Tally count_twins(u64 n, u64 segment_size = kDefaultSegmentSize);
Tally count_isolated(u64 n, u64 segment_size = kDefaultSegmentSize);

}  // namespace primebias
