#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "primebias/report.hpp"

namespace {

using namespace primebias;

void write_output(const std::string& bytes, const std::string& path) {
  if (path.empty()) {
    std::fwrite(bytes.data(), 1, bytes.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::trunc | std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << bytes;
}

void print_summary(const ExperimentSpec& spec, const RunResult& res) {
  std::fprintf(stderr, "%s: a=%llu b=%llu", to_string(spec.kind).data(),
               static_cast<unsigned long long>(res.tally.a),
               static_cast<unsigned long long>(res.tally.b));
  if (res.tally.b > 0)
    std::fprintf(stderr, " R=%.6g", bias_ratio(res.tally));
  if (res.nth_prime > 0)
    std::fprintf(stderr, " p_N=%llu",
                 static_cast<unsigned long long>(res.nth_prime));
  std::fprintf(stderr, " (%.2fs, %llu segments)\n", res.seconds,
               static_cast<unsigned long long>(res.segments));
}

int cmd_run(ExperimentSpec spec, const RunControl& ctl, ReportFormat format,
            const std::string& output) {
  const RunResult res = run_experiment(spec, ctl);
  print_summary(spec, res);
  if (!res.completed) {
    std::fprintf(stderr, "stopped early; resume with --resume\n");
    return 3;
  }
  const ReportRow row = make_report_row(spec, res.tally);
  write_output(emit_report({&row, 1}, format), output);
  return 0;
}

int cmd_table(int max_exponent, u64 segment_size, unsigned threads,
              ReportFormat format, const std::string& output) {
  std::vector<ReportRow> rows;
  auto add = [&](ExperimentKind kind, int e) {
    ExperimentSpec spec;
    spec.kind = kind;
    spec.exponent = e;
    spec.segment_size = segment_size;
    spec.threads = threads;
    RunControl ctl;
    ctl.progress = true;
    const RunResult res = run_experiment(spec, ctl);
    print_summary(spec, res);
    rows.push_back(make_report_row(spec, res.tally));
  };

  for (auto kind : {ExperimentKind::twins, ExperimentKind::isolated})
    for (int e = std::min(6, max_exponent); e <= max_exponent; ++e)
      add(kind, e);
  for (auto kind :
       {ExperimentKind::sqf_twins, ExperimentKind::sqf_twins_noprimes,
        ExperimentKind::sqf_neighbors, ExperimentKind::sqf_neighbors_noprimes})
    for (int e = 8; e <= max_exponent; ++e) add(kind, e);
  for (int e = 9; e <= max_exponent; ++e)
    add(ExperimentKind::nonsqf_twins, e);

  write_output(emit_report(rows, format), output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Experiment harness for prime adjacency to squarefree "
               "multiples of 6"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Run one experiment and emit a report");
  std::string experiment;
  run->add_option("--experiment", experiment,
                  "One of: twins, isolated, sqf-twins, sqf-twins-noprimes, "
                  "sqf-neighbors, sqf-neighbors-noprimes, nonsqf-twins")
      ->required();
  int exponent = -1;
  auto* exp_opt = run->add_option("--exponent", exponent,
                                  "Scale as a power of 10 (first 10^k primes "
                                  "or multiples of 6)")
                      ->check(CLI::Range(1, 18));
  u64 count = 0;
  auto* count_opt =
      run->add_option("--count", count, "Explicit scale instead of 10^k");
  exp_opt->excludes(count_opt);
  u64 segment_size = kDefaultSegmentSize;
  run->add_option("--segment-size", segment_size, "Values per work segment")
      ->check(CLI::Range(u64{64}, kSegmentCeiling));
  unsigned threads = 0;
  run->add_option("--threads", threads, "Worker threads (0 = all cores)");
  std::string checkpoint;
  run->add_option("--checkpoint", checkpoint, "Checkpoint file path");
  bool resume = false;
  run->add_flag("--resume", resume, "Resume from the checkpoint if present");
  bool force = false;
  run->add_flag("--force", force,
                "Discard a checkpoint written by a different experiment");
  u64 checkpoint_every = 64;
  run->add_option("--checkpoint-every", checkpoint_every,
                  "Segments between checkpoint writes")
      ->check(CLI::PositiveNumber);
  u64 stop_after = kNoLimit;
  run->add_option("--stop-after-segments", stop_after,
                  "Stop after this many segments (for resume testing)")
      ->group("");  // hidden
  std::string format_name = "csv";
  run->add_option("--format", format_name, "Report format")
      ->check(CLI::IsMember({"csv", "json"}));
  std::string output;
  run->add_option("--output", output, "Report path (default: stdout)");

  // table
  auto* table = app.add_subcommand(
      "table", "Reproduce the a/b and excess tables up to 10^k");
  int max_exponent = 6;
  table->add_option("--max-exponent", max_exponent, "Largest exponent k")
      ->required()
      ->check(CLI::Range(1, 18));
  u64 t_segment_size = kDefaultSegmentSize;
  table->add_option("--segment-size", t_segment_size, "Values per work segment")
      ->check(CLI::Range(u64{64}, kSegmentCeiling));
  unsigned t_threads = 0;
  table->add_option("--threads", t_threads, "Worker threads (0 = all cores)");
  std::string t_format_name = "csv";
  table->add_option("--format", t_format_name, "Report format")
      ->check(CLI::IsMember({"csv", "json"}));
  std::string t_output;
  table->add_option("--output", t_output, "Report path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      if (exp_opt->count() == 0 && count_opt->count() == 0)
        throw CLI::ValidationError("run", "need --exponent or --count");
      const auto kind = kind_from_string(experiment);
      if (!kind)
        throw CLI::ValidationError("run", "unknown experiment " + experiment);
      ExperimentSpec spec;
      spec.kind = *kind;
      spec.exponent = exp_opt->count() ? exponent : -1;
      spec.count = count;
      spec.segment_size = segment_size;
      spec.threads = threads;
      spec.checkpoint_path = checkpoint;
      spec.checkpoint_every = checkpoint_every;
      RunControl ctl;
      ctl.resume = resume;
      ctl.force = force;
      ctl.stop_after_segments = stop_after;
      ctl.progress = true;
      return cmd_run(spec, ctl, *format_from_string(format_name), output);
    }
    return cmd_table(max_exponent, t_segment_size, t_threads,
                     *format_from_string(t_format_name), t_output);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const primebias::CheckpointMismatch& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
