#include <doctest.h>

#include <numbers>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "primebias/sieve.hpp"

using namespace primebias;

TEST_CASE("small_primes basics") {
  CHECK(small_primes(10).primes == std::vector<u64>{2, 3, 5, 7});
  CHECK(small_primes(2).primes == std::vector<u64>{2});
  CHECK(small_primes(13).primes == std::vector<u64>{2, 3, 5, 7, 11, 13});
  CHECK_THROWS_AS(small_primes(1), std::invalid_argument);
  CHECK_THROWS_AS(small_primes((u64{1} << 32) + 1), std::length_error);

  const BasePrimes base = small_primes(1000);
  CHECK(base.limit == 1000);
  for (std::size_t i = 1; i < base.primes.size(); ++i)
    CHECK(base.primes[i - 1] < base.primes[i]);
}

TEST_CASE("small_primes matches trial division up to 10^6") {
  const BasePrimes base = small_primes(1000000);
  u64 oracle_count = 0;
  for (u64 v = 2; v <= 1000000; ++v)
    if (is_prime_oracle(v)) ++oracle_count;
  CHECK(base.primes.size() == oracle_count);
  CHECK(base.primes.size() == 78498);
  CHECK(base.primes.back() == 999983);
}

TEST_CASE("sieve_segment small ranges against explicit values") {
  const BasePrimes base = small_primes(100);

  SUBCASE("[2, 12)") {
    const SieveSegment seg = sieve_segment(2, 12, base);
    for (u64 v = 2; v < 12; ++v) {
      CHECK(seg.is_prime(v) == is_prime_oracle(v));
      CHECK(seg.is_squarefree(v) == is_squarefree_oracle(v));
    }
    CHECK(seg.is_prime(11));
    CHECK(seg.is_squarefree(10));
    CHECK_FALSE(seg.is_squarefree(4));
  }

  SUBCASE("[48, 51): no squarefree values at all") {
    const SieveSegment seg = sieve_segment(48, 51, base);
    for (u64 v = 48; v < 51; ++v) {
      CHECK_FALSE(seg.is_prime(v));
      CHECK_FALSE(seg.is_squarefree(v));
    }
  }

  SUBCASE("[0, 2): degenerate low range") {
    const SieveSegment seg = sieve_segment(0, 2, base);
    CHECK_FALSE(seg.is_prime(0));
    CHECK_FALSE(seg.is_prime(1));
    CHECK_FALSE(seg.is_squarefree(0));
    CHECK(seg.is_squarefree(1));
  }
}

TEST_CASE("sieve_segment rejects bad inputs") {
  const BasePrimes base = small_primes(5);
  CHECK_THROWS_AS(sieve_segment(10, 10, base), std::invalid_argument);
  // 5^2 < 1000: not enough base primes.
  CHECK_THROWS_AS(sieve_segment(0, 1000, base), std::invalid_argument);
  CHECK_THROWS_AS(sieve_segment(0, 25, base, 16), std::length_error);
}

TEST_CASE("sieve flags equal trial-division oracles on [1, 10^6]") {
  const u64 limit = 1000000;
  const BasePrimes base = small_primes(ceil_sqrt(limit));
  for (u64 lo = 0; lo < limit; lo += 100000) {
    const u64 hi = lo + 100000;
    const SieveSegment seg = sieve_segment(lo, hi, base);
    for (u64 v = std::max<u64>(lo, 1); v < hi; ++v) {
      REQUIRE(seg.is_prime(v) == is_prime_oracle(v));
      REQUIRE(seg.is_squarefree(v) == is_squarefree_oracle(v));
    }
  }
}

TEST_CASE("every flagged prime is flagged squarefree") {
  const BasePrimes base = small_primes(ceil_sqrt(2000000));
  const SieveSegment seg = sieve_segment(1000000, 2000000, base);
  seg.for_each_prime(seg.lo, seg.hi, [&](u64 p) {
    REQUIRE(seg.is_squarefree(p));
    return true;
  });
}

TEST_CASE("segment splitting invariance on random splits") {
  std::mt19937_64 rng(20240611);
  const BasePrimes base = small_primes(ceil_sqrt(u64{20000000}));
  for (int trial = 0; trial < 100; ++trial) {
    const u64 lo = rng() % 10000000;
    const u64 len = 2 + rng() % 50000;
    const u64 hi = lo + len;
    const u64 mid = lo + 1 + rng() % (len - 1);

    const SieveSegment whole = sieve_segment(lo, hi, base);
    const SieveSegment left = sieve_segment(lo, mid, base);
    const SieveSegment right = sieve_segment(mid, hi, base);
    for (u64 v = lo; v < hi; ++v) {
      const SieveSegment& part = v < mid ? left : right;
      REQUIRE(whole.is_prime(v) == part.is_prime(v));
      REQUIRE(whole.is_squarefree(v) == part.is_squarefree(v));
    }
  }
}

TEST_CASE("squarefree density over [1, 10^7] is 6/pi^2") {
  const u64 limit = 10000000;
  const BasePrimes base = small_primes(ceil_sqrt(limit + 1));
  u64 squarefree = 0;
  for (u64 lo = 1; lo <= limit; lo += 1000000) {
    const u64 hi = std::min(lo + 1000000, limit + 1);
    const SieveSegment seg = sieve_segment(lo, hi, base);
    squarefree += seg.squarefree_flags.count();
  }
  const double density = static_cast<double>(squarefree) / limit;
  const double expected = 6.0 / (std::numbers::pi * std::numbers::pi);
  CHECK(std::abs(density - expected) < 0.001);
}

TEST_CASE("squarefree density among the first 10^7 multiples of 6 is 3/pi^2") {
  const u64 m = 10000000;
  const BasePrimes base = small_primes(ceil_sqrt(6 * m + 1));
  u64 squarefree = 0;
  for (u64 n_lo = 1; n_lo <= m; n_lo += 1000000) {
    const u64 n_hi = std::min(n_lo + 1000000, m + 1);
    const SieveSegment seg = sieve_segment(6 * n_lo, 6 * (n_hi - 1) + 1, base);
    for (u64 n = n_lo; n < n_hi; ++n)
      if (seg.is_squarefree(6 * n)) ++squarefree;
  }
  const double density = static_cast<double>(squarefree) / m;
  const double expected = 3.0 / (std::numbers::pi * std::numbers::pi);
  CHECK(std::abs(density - expected) < 0.001);
}

TEST_CASE("squarefree oracle examples") {
  CHECK_FALSE(is_squarefree_oracle(4));
  CHECK(is_squarefree_oracle(6));
  CHECK_FALSE(is_squarefree_oracle(12));
  CHECK(is_squarefree_oracle(1));
  CHECK(is_squarefree_oracle(2));
  CHECK_FALSE(is_squarefree_oracle(999983ull * 999983ull));
  CHECK_THROWS_AS(is_squarefree_oracle(0), std::invalid_argument);
}

TEST_CASE("nth_prime_bound") {
  for (u64 n = 1; n < 6; ++n) CHECK(nth_prime_bound(n) == 13);

  // p_{10^6} located with the base sieve; the bound must cover it.
  const u64 n = 1000000;
  const u64 bound = nth_prime_bound(n);
  const BasePrimes base = small_primes(bound);
  REQUIRE(base.primes.size() >= n);
  CHECK(base.primes[n - 1] == 15485863);
  CHECK(bound >= 15485863);

  const BasePrimes small = small_primes(nth_prime_bound(100));
  REQUIRE(small.primes.size() >= 100);
  CHECK(small.primes[99] == 541);

  CHECK_THROWS_AS(nth_prime_bound(u64{1} << 60), std::overflow_error);
}
