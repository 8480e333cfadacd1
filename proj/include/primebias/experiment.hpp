#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "primebias/baseline.hpp"
#include "primebias/stats.hpp"

namespace primebias {

enum class ExperimentKind {
  twins,
  isolated,
  sqf_twins,
  sqf_twins_noprimes,
  sqf_neighbors,
  sqf_neighbors_noprimes,
  nonsqf_twins,
};

std::string_view to_string(ExperimentKind kind);
std::optional<ExperimentKind> kind_from_string(std::string_view name);
// twins/isolated stream the first N primes; the controls walk the first
// M multiples of 6.
bool is_prime_experiment(ExperimentKind kind);

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::twins;
  int exponent = -1;  // scale = 10^exponent when >= 0
  u64 count = 0;      // explicit scale when exponent < 0
  u64 segment_size = kDefaultSegmentSize;  // see baseline.hpp for controls
  unsigned threads = 0;                    // 0 = hardware concurrency
  std::string checkpoint_path;             // empty = no checkpointing
  u64 checkpoint_every = 64;               // segments between writes

  u64 target() const;  // resolved scale, validated
};

// Identity of the experiment itself (kind + scale); segmentation and
// thread count do not change results and are excluded on purpose.
u64 spec_fingerprint(const ExperimentSpec& spec);

inline constexpr int kCheckpointVersion = 1;

struct Checkpoint {
  int format_version = kCheckpointVersion;
  u64 fingerprint = 0;
  u64 next_range_start = 0;  // next value (primes) or next n (controls)
  u64 primes_seen = 0;       // units consumed so far
  Tally partial;
};

void save_checkpoint(const std::string& path, const Checkpoint& cp);
Checkpoint load_checkpoint(const std::string& path);

class CheckpointMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunControl {
  bool resume = false;
  bool force = false;  // start fresh on fingerprint mismatch instead of throwing
  u64 stop_after_segments = kNoLimit;  // stop early after this many commits
  bool progress = false;               // progress lines on stderr
};

struct RunResult {
  Tally tally;
  u64 units = 0;      // primes streamed / multiples examined
  u64 nth_prime = 0;  // last prime consumed (prime experiments)
  u64 segments = 0;   // segments committed by this invocation
  double seconds = 0;
  bool completed = true;
};

// Coordinator: workers sieve disjoint segments, results are merged in
// ascending range order, the segment holding the N-th prime is re-scanned
// to the exact cutoff. Checkpoints are written between merges only.
RunResult run_experiment(const ExperimentSpec& spec, const RunControl& ctl = {});

}  // namespace primebias
