#include "primebias/sieve.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace primebias {

namespace {

using u128 = unsigned __int128;

u64 ceil_div(u64 a, u64 b) { return a / b + (a % b != 0); }

}  // namespace

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && (u128)r * r > n) --r;
  while ((u128)(r + 1) * (r + 1) <= n) ++r;
  return r;
}

u64 ceil_sqrt(u64 n) {
  const u64 r = isqrt(n);
  return (u128)r * r == n ? r : r + 1;
}

std::size_t BitVec::count() const { return count(0, size_); }

std::size_t BitVec::count(std::size_t begin, std::size_t end) const {
  std::size_t total = 0;
  visit_set(begin, std::min(end, size_), [&](std::size_t) {
    ++total;
    return true;
  });
  return total;
}

void BitVec::trim() {
  if (size_ & 63) words_.back() &= (u64{1} << (size_ & 63)) - 1;
}

BasePrimes small_primes(u64 limit, u64 ceiling) {
  if (limit < 2) throw std::invalid_argument("small_primes: limit must be >= 2");
  if (limit > ceiling)
    throw std::length_error("small_primes: limit " + std::to_string(limit) +
                            " exceeds base-sieve ceiling " +
                            std::to_string(ceiling));

  BitVec flags(static_cast<std::size_t>(limit) + 1, true);
  flags.clear(0);
  flags.clear(1);
  for (u64 p = 2; p * p <= limit; ++p) {
    if (!flags.test(p)) continue;
    for (u64 v = p * p; v <= limit; v += p) flags.clear(v);
  }

  BasePrimes base;
  base.limit = limit;
  flags.visit_set(0, static_cast<std::size_t>(limit) + 1, [&](std::size_t v) {
    base.primes.push_back(v);
    return true;
  });
  return base;
}

SieveSegment sieve_segment(u64 lo, u64 hi, const BasePrimes& base,
                           u64 segment_ceiling) {
  if (lo >= hi) throw std::invalid_argument("sieve_segment: lo must be < hi");
  if (hi > kMaxSieveValue)
    throw std::invalid_argument("sieve_segment: hi exceeds 2^63");
  if (hi - lo > segment_ceiling)
    throw std::length_error("sieve_segment: range exceeds segment ceiling");
  if ((u128)base.limit * base.limit < hi)
    throw std::invalid_argument(
        "sieve_segment: insufficient base primes (limit^2 < hi)");

  const std::size_t len = static_cast<std::size_t>(hi - lo);
  SieveSegment seg;
  seg.lo = lo;
  seg.hi = hi;
  seg.prime_flags = BitVec(len, true);
  seg.squarefree_flags = BitVec(len, true);

  // 0 is neither prime nor squarefree; 1 is squarefree only.
  if (lo == 0) {
    seg.prime_flags.clear(0);
    seg.squarefree_flags.clear(0);
    if (hi > 1) seg.prime_flags.clear(1);
  } else if (lo == 1) {
    seg.prime_flags.clear(0);
  }

  for (u64 p : base.primes) {
    const u64 p2 = p * p;
    if (p2 >= hi) break;
    // Composites: start at p^2 so p itself stays flagged.
    for (u64 v = std::max(p2, ceil_div(lo, p) * p); v < hi; v += p)
      seg.prime_flags.clear(static_cast<std::size_t>(v - lo));
    // Nonsquarefree: every multiple of p^2 (0 included, already cleared).
    for (u64 v = ceil_div(lo, p2) * p2; v < hi; v += p2)
      seg.squarefree_flags.clear(static_cast<std::size_t>(v - lo));
  }
  return seg;
}

bool is_squarefree_oracle(u64 m) {
  if (m == 0) throw std::invalid_argument("is_squarefree_oracle: m must be >= 1");
  for (u64 d = 2; d * d <= m; ++d)
    if (m % (d * d) == 0) return false;
  return true;
}

bool is_prime_oracle(u64 m) {
  if (m < 2) return false;
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

u64 nth_prime_bound(u64 n) {
  if (n < 6) return 13;
  const long double nl = static_cast<long double>(n);
  const long double bound = nl * (std::log(nl) + std::log(std::log(nl)));
  if (bound >= 1.8e19L)
    throw std::overflow_error("nth_prime_bound: bound exceeds 64-bit range");
  return static_cast<u64>(std::ceil(bound));
}

}  // namespace primebias
