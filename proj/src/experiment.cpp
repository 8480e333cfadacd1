#include "primebias/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <thread>
#include <vector>

#include <json.hpp>

namespace primebias {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

std::string_view to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::twins: return "twins";
    case ExperimentKind::isolated: return "isolated";
    case ExperimentKind::sqf_twins: return "sqf-twins";
    case ExperimentKind::sqf_twins_noprimes: return "sqf-twins-noprimes";
    case ExperimentKind::sqf_neighbors: return "sqf-neighbors";
    case ExperimentKind::sqf_neighbors_noprimes: return "sqf-neighbors-noprimes";
    case ExperimentKind::nonsqf_twins: return "nonsqf-twins";
  }
  throw std::logic_error("unknown experiment kind");
}

std::optional<ExperimentKind> kind_from_string(std::string_view name) {
  for (auto k : {ExperimentKind::twins, ExperimentKind::isolated,
                 ExperimentKind::sqf_twins, ExperimentKind::sqf_twins_noprimes,
                 ExperimentKind::sqf_neighbors,
                 ExperimentKind::sqf_neighbors_noprimes,
                 ExperimentKind::nonsqf_twins})
    if (name == to_string(k)) return k;
  return std::nullopt;
}

bool is_prime_experiment(ExperimentKind kind) {
  return kind == ExperimentKind::twins || kind == ExperimentKind::isolated;
}

u64 ExperimentSpec::target() const {
  if (exponent < 0) return count;
  if (exponent > 18)
    throw std::overflow_error("scale 10^k exceeds the 64-bit range");
  u64 t = 1;
  for (int i = 0; i < exponent; ++i) t *= 10;
  return t;
}

u64 spec_fingerprint(const ExperimentSpec& spec) {
  // FNV-1a over the experiment identity.
  const std::string key = std::string(to_string(spec.kind)) + "|" +
                          std::to_string(spec.target()) + "|v" +
                          std::to_string(kCheckpointVersion);
  u64 h = 0xcbf29ce484222325ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

void save_checkpoint(const std::string& path, const Checkpoint& cp) {
  json j;
  j["format_version"] = cp.format_version;
  char fp[19];
  std::snprintf(fp, sizeof fp, "0x%016llx",
                static_cast<unsigned long long>(cp.fingerprint));
  j["fingerprint"] = fp;
  j["next_range_start"] = cp.next_range_start;
  j["primes_seen"] = cp.primes_seen;
  j["a"] = cp.partial.a;
  j["b"] = cp.partial.b;

  const fs::path tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint " + path);
    out << j.dump(2) << "\n";
  }
  fs::rename(tmp, path);
}

Checkpoint load_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read checkpoint " + path);
  json j = json::parse(in);

  Checkpoint cp;
  cp.format_version = j.at("format_version").get<int>();
  if (cp.format_version != kCheckpointVersion)
    throw std::runtime_error("unsupported checkpoint format_version " +
                             std::to_string(cp.format_version));
  cp.fingerprint =
      std::stoull(j.at("fingerprint").get<std::string>(), nullptr, 16);
  cp.next_range_start = j.at("next_range_start").get<u64>();
  cp.primes_seen = j.at("primes_seen").get<u64>();
  cp.partial.a = j.at("a").get<u64>();
  cp.partial.b = j.at("b").get<u64>();
  return cp;
}

namespace {

struct SegResult {
  u64 from = 0;
  u64 to = 0;
  Tally tally;
  u64 units = 0;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

RunResult run_experiment(const ExperimentSpec& spec, const RunControl& ctl) {
  const u64 target = spec.target();
  if (spec.segment_size < 64)
    throw std::invalid_argument("segment_size must be >= 64");
  if (spec.checkpoint_every < 1)
    throw std::invalid_argument("checkpoint_every must be >= 1");
  const unsigned threads =
      spec.threads ? spec.threads
                   : std::max(1u, std::thread::hardware_concurrency());
  const bool prime_kind = is_prime_experiment(spec.kind);
  const PrimeClass cls = spec.kind == ExperimentKind::twins
                             ? PrimeClass::twins
                             : PrimeClass::isolated;
  BaselineKind bkind = BaselineKind::nonsqf_twins;
  bool include_primes = true;
  switch (spec.kind) {
    case ExperimentKind::sqf_twins_noprimes:
      include_primes = false;
      [[fallthrough]];
    case ExperimentKind::sqf_twins:
      bkind = BaselineKind::sqf_twins;
      break;
    case ExperimentKind::sqf_neighbors_noprimes:
      include_primes = false;
      [[fallthrough]];
    case ExperimentKind::sqf_neighbors:
      bkind = BaselineKind::sqf_neighbors;
      break;
    default:
      break;
  }

  const auto t0 = std::chrono::steady_clock::now();
  RunResult res;

  u64 domain_end;  // exclusive: value bound (primes) or m + 1 (controls)
  BasePrimes base;
  u64 pos;
  if (prime_kind) {
    pos = 0;
    domain_end = target ? nth_prime_bound(target) : 0;
    base = small_primes(std::max<u64>(2, ceil_sqrt(domain_end + 2)));
  } else {
    pos = 1;
    domain_end = target + 1;
    base = small_primes(std::max<u64>(2, ceil_sqrt(6 * target + 2)));
  }

  const u64 fp = spec_fingerprint(spec);
  const bool has_cp = !spec.checkpoint_path.empty();
  if (has_cp && ctl.resume && fs::exists(spec.checkpoint_path)) {
    const Checkpoint cp = load_checkpoint(spec.checkpoint_path);
    if (cp.fingerprint != fp) {
      if (!ctl.force)
        throw CheckpointMismatch(
            "checkpoint " + spec.checkpoint_path +
            " belongs to a different experiment (rerun with --force to discard)");
    } else {
      pos = cp.next_range_start;
      res.units = cp.primes_seen;
      res.tally = cp.partial;
    }
  }

  auto compute = [&](u64 from, u64 to) -> SegResult {
    SegResult r;
    r.from = from;
    r.to = to;
    if (prime_kind) {
      const u64 wlo = from < 2 ? 0 : from - 2;
      const SieveSegment win = sieve_segment(wlo, to + 2, base);
      const SegmentCounts c = scan_primes(cls, win, from, to);
      r.tally = c.tally;
      r.units = c.primes;
    } else {
      const SieveSegment win =
          sieve_segment(6 * from - 1, 6 * (to - 1) + 2, base);
      r.tally = scan_multiples(bkind, include_primes, win, from, to);
      r.units = to - from;
    }
    return r;
  };

  auto progress = [&](const char* tag) {
    if (!ctl.progress) return;
    const double elapsed = seconds_since(t0);
    const double frac =
        target ? static_cast<double>(res.units) / static_cast<double>(target)
               : 1.0;
    const double eta = frac > 0 ? elapsed * (1.0 - frac) / frac : 0.0;
    std::fprintf(stderr,
                 "[%s] %s: segments=%llu units=%llu/%llu (%.1f%%) "
                 "elapsed=%.1fs eta=%.0fs\n",
                 std::string(to_string(spec.kind)).c_str(), tag,
                 static_cast<unsigned long long>(res.segments),
                 static_cast<unsigned long long>(res.units),
                 static_cast<unsigned long long>(target), 100.0 * frac,
                 elapsed, eta);
  };

  auto finish = [&](bool completed) {
    res.completed = completed;
    res.seconds = seconds_since(t0);
    if (completed && has_cp && fs::exists(spec.checkpoint_path))
      fs::remove(spec.checkpoint_path);
    progress(completed ? "done" : "stopped");
    return res;
  };

  if (prime_kind ? res.units >= target : pos >= domain_end)
    return finish(true);

  while (true) {
    if (prime_kind && pos >= domain_end) {
      // Bound undershot (never for n >= 6); extend and keep streaming.
      domain_end += domain_end / 4 + spec.segment_size;
      if ((unsigned __int128)base.limit * base.limit < domain_end + 2)
        base = small_primes(ceil_sqrt(domain_end + 2));
    }

    std::vector<SegResult> round;
    std::vector<std::future<SegResult>> futs;
    u64 round_pos = pos;
    for (unsigned i = 0; i < threads && round_pos < domain_end; ++i) {
      const u64 to = std::min(round_pos + spec.segment_size, domain_end);
      if (i == 0)
        round.push_back({round_pos, to, {}, 0});
      else
        futs.push_back(std::async(std::launch::async, compute, round_pos, to));
      round_pos = to;
    }
    if (round.empty()) continue;
    round[0] = compute(round[0].from, round[0].to);
    for (auto& f : futs) round.push_back(f.get());
    pos = round_pos;

    for (const SegResult& r : round) {
      if (prime_kind && res.units + r.units >= target) {
        // Cutoff segment: re-scan sequentially to the exact N-th prime.
        const u64 wlo = r.from < 2 ? 0 : r.from - 2;
        const SieveSegment win = sieve_segment(wlo, r.to + 2, base);
        const SegmentCounts c =
            scan_primes(cls, win, r.from, r.to, target - res.units);
        res.tally += c.tally;
        res.units += c.primes;
        res.nth_prime = c.last_prime;
        ++res.segments;
        return finish(true);
      }
      res.tally += r.tally;
      res.units += r.units;
      ++res.segments;
      if (res.segments % spec.checkpoint_every == 0) {
        if (has_cp)
          save_checkpoint(spec.checkpoint_path,
                          {kCheckpointVersion, fp, r.to, res.units, res.tally});
        progress("running");
      }
      if (res.segments >= ctl.stop_after_segments) {
        if (has_cp)
          save_checkpoint(spec.checkpoint_path,
                          {kCheckpointVersion, fp, r.to, res.units, res.tally});
        return finish(false);
      }
      if (!prime_kind && res.units >= target) return finish(true);
    }
  }
}

}  // namespace primebias
