#include "primebias/classify.hpp"

#include <stdexcept>

namespace primebias {

u64 adjacent_multiple_of_six(u64 p) {
  switch (p % 6) {
    case 1:
      return p - 1;
    case 5:
      return p + 1;
    default:
      throw std::domain_error(
          "adjacent_multiple_of_six: p must be congruent to 1 or 5 mod 6");
  }
}

SegmentCounts scan_primes(PrimeClass cls, const SieveSegment& win, u64 from,
                          u64 to, u64 max_primes) {
  const u64 need_lo = from < 2 ? 0 : from - 2;
  if (win.lo > need_lo || win.hi < to + 2 || from >= to)
    throw std::invalid_argument("scan_primes: window must cover [from-2, to+2)");

  SegmentCounts out;
  if (max_primes == 0) return out;
  win.for_each_prime(from, to, [&](u64 p) {
    ++out.primes;
    out.last_prime = p;
    if (cls == PrimeClass::twins) {
      if (win.is_prime(p + 2)) {
        ++out.tally.a;
        if (win.is_squarefree(p + 1)) ++out.tally.b;
      }
    } else if (p != 2 && !win.is_prime(p + 2) && !win.is_prime(p - 2)) {
      // p >= 5 here: 2 is skipped and 3 is never isolated (5 is prime).
      ++out.tally.a;
      if (win.is_squarefree(adjacent_multiple_of_six(p))) ++out.tally.b;
    }
    return out.primes < max_primes;
  });
  return out;
}

namespace {

Tally count_prime_stream(PrimeClass cls, u64 n, u64 segment_size) {
  if (segment_size < 64)
    throw std::invalid_argument("segment_size must be >= 64");
  Tally total;
  if (n == 0) return total;

  u64 bound = nth_prime_bound(n);
  BasePrimes base = small_primes(std::max<u64>(2, ceil_sqrt(bound + 2)));

  u64 seen = 0;
  u64 lo = 0;
  while (seen < n) {
    if (lo >= bound) {
      // The bound undershot (never for n >= 6); extend and keep streaming.
      bound += bound / 4 + segment_size;
      if ((unsigned __int128)base.limit * base.limit < bound + 2)
        base = small_primes(ceil_sqrt(bound + 2));
    }
    const u64 hi = std::min(lo + segment_size, bound);
    const u64 wlo = lo < 2 ? 0 : lo - 2;
    const SieveSegment win = sieve_segment(wlo, hi + 2, base);
    const SegmentCounts c = scan_primes(cls, win, lo, hi, n - seen);
    total += c.tally;
    seen += c.primes;
    lo = hi;
  }
  return total;
}

}  // namespace

Tally count_twins(u64 n, u64 segment_size) {
  return count_prime_stream(PrimeClass::twins, n, segment_size);
}

Tally count_isolated(u64 n, u64 segment_size) {
  return count_prime_stream(PrimeClass::isolated, n, segment_size);
}

}  // namespace primebias
