#pragma once

#include "primebias/classify.hpp"

namespace primebias {

// Control experiments over the first M multiples of 6.
enum class BaselineKind { sqf_twins, sqf_neighbors, nonsqf_twins };

// Counts over 6n for n in [n_from, n_to); win must cover
// [6*n_from - 1, 6*(n_to - 1) + 2). include_primes only applies to the
// squarefree kinds: when false, 6n+-1 must also be non-prime to qualify.
Tally scan_multiples(BaselineKind kind, bool include_primes,
                     const SieveSegment& win, u64 n_from, u64 n_to);

// Sequential drivers over n = 1..m. segment_size counts multiples of 6
// per segment (the sieved window spans six times as many values).
Tally count_sqf_twins(u64 m, bool include_primes,
                      u64 segment_size = kDefaultSegmentSize);
Tally count_sqf_neighbors(u64 m, bool include_primes,
                          u64 segment_size = kDefaultSegmentSize);
Tally count_nonsqf_twins(u64 m, u64 segment_size = kDefaultSegmentSize);

}  // namespace primebias
