#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace primebias {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline constexpr u64 kDefaultSegmentSize = u64{1} << 22;
inline constexpr u64 kSegmentCeiling = u64{1} << 30;
inline constexpr u64 kBaseSieveCeiling = u64{1} << 32;
// Sieving stays below 2^63 so stride arithmetic never wraps.
inline constexpr u64 kMaxSieveValue = u64{1} << 63;

u64 isqrt(u64 n);
// Smallest r with r*r >= n.
u64 ceil_sqrt(u64 n);

// Bit-packed flag array, one bit per value.
class BitVec {
 public:
  BitVec() = default;
  BitVec(std::size_t n, bool value)
      : size_(n), words_((n + 63) / 64, value ? ~u64{0} : u64{0}) {
    trim();
  }

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i) { words_[i >> 6] |= u64{1} << (i & 63); }
  void clear(std::size_t i) { words_[i >> 6] &= ~(u64{1} << (i & 63)); }

  std::size_t count() const;
  std::size_t count(std::size_t begin, std::size_t end) const;

  // Visit set bits in [begin, end) in increasing order.
  // fn(index) returns false to stop early; returns false if stopped.
  template <class Fn>
  bool visit_set(std::size_t begin, std::size_t end, Fn&& fn) const {
    if (begin >= end) return true;
    const std::size_t w_first = begin >> 6;
    const std::size_t w_last = (end - 1) >> 6;
    for (std::size_t w = w_first; w <= w_last; ++w) {
      u64 word = words_[w];
      if (w == w_first) word &= ~u64{0} << (begin & 63);
      if (w == w_last) {
        const unsigned top = (end - 1) & 63;
        if (top != 63) word &= (u64{1} << (top + 1)) - 1;
      }
      while (word) {
        const unsigned bit = static_cast<unsigned>(std::countr_zero(word));
        if (!fn((w << 6) + bit)) return false;
        word &= word - 1;
      }
    }
    return true;
  }

  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  void trim();

  std::size_t size_ = 0;
  std::vector<u64> words_;
};

// Primes <= limit, shared read-only across threads.
struct BasePrimes {
  u64 limit = 0;
  std::vector<u64> primes;
};

// Simple bit sieve up to limit (inclusive). Throws std::length_error past
// the ceiling, std::invalid_argument for limit < 2.
BasePrimes small_primes(u64 limit, u64 ceiling = kBaseSieveCeiling);

// Half-open range with primality and squarefreeness flags for every value.
// Conventions: 0 is neither prime nor squarefree, 1 is squarefree only.
struct SieveSegment {
  u64 lo = 0;
  u64 hi = 0;
  BitVec prime_flags;
  BitVec squarefree_flags;

  bool contains(u64 v) const { return v >= lo && v < hi; }
  bool is_prime(u64 v) const {
    return prime_flags.test(static_cast<std::size_t>(v - lo));
  }
  bool is_squarefree(u64 v) const {
    return squarefree_flags.test(static_cast<std::size_t>(v - lo));
  }

  // Visit primes in [from, to) clamped to the segment; fn(value) -> bool,
  // false stops the walk.
  template <class Fn>
  void for_each_prime(u64 from, u64 to, Fn&& fn) const {
    from = std::max(from, lo);
    to = std::min(to, hi);
    if (from >= to) return;
    prime_flags.visit_set(static_cast<std::size_t>(from - lo),
                          static_cast<std::size_t>(to - lo),
                          [&](std::size_t i) { return fn(lo + i); });
  }
};

// Segmented sieve over [lo, hi). Requires base.limit^2 >= hi; squarefree
// flags are produced by striking p^2 multiples of the same base primes.
SieveSegment sieve_segment(u64 lo, u64 hi, const BasePrimes& base,
                           u64 segment_ceiling = kSegmentCeiling);

// Trial-division oracles, deliberately independent of the segmented sieve.
bool is_squarefree_oracle(u64 m);
bool is_prime_oracle(u64 m);

// Upper bound for the n-th prime: n*(ln n + ln ln n) for n >= 6, else 13.
u64 nth_prime_bound(u64 n);

}  // namespace primebias
