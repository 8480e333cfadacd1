#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "primebias/report.hpp"

namespace py = pybind11;
using namespace primebias;

namespace {

ExperimentKind parse_kind(const std::string& name) {
  const auto kind = kind_from_string(name);
  if (!kind) throw py::value_error("unknown experiment kind: " + name);
  return *kind;
}

RunResult run_kind(ExperimentKind kind, u64 count, u64 segment_size,
                   unsigned threads, const std::string& checkpoint,
                   bool resume) {
  ExperimentSpec spec;
  spec.kind = kind;
  spec.count = count;
  spec.segment_size = segment_size;
  spec.threads = threads;
  spec.checkpoint_path = checkpoint;
  RunControl ctl;
  ctl.resume = resume;
  py::gil_scoped_release release;
  return run_experiment(spec, ctl);
}

}  // namespace

PYBIND11_MODULE(_primebias, m) {
  m.doc() = "Prime adjacency to squarefree multiples of 6: sieve, counting "
            "experiments, and bias statistics.";

  py::class_<Tally>(m, "Tally")
      .def(py::init<>())
      .def(py::init([](u64 a, u64 b) { return Tally{a, b}; }), py::arg("a"),
           py::arg("b"))
      .def_readwrite("a", &Tally::a)
      .def_readwrite("b", &Tally::b)
      .def("__add__", [](const Tally& x, const Tally& y) { return x + y; })
      .def("__eq__", [](const Tally& x, const Tally& y) { return x == y; })
      .def("__repr__", [](const Tally& t) {
        return "Tally(a=" + std::to_string(t.a) + ", b=" + std::to_string(t.b) +
               ")";
      });

  py::class_<BiasReport>(m, "BiasReport")
      .def_readonly("r", &BiasReport::r)
      .def_readonly("r0", &BiasReport::r0)
      .def_readonly("rel_diff", &BiasReport::rel_diff)
      .def_readonly("epsilon", &BiasReport::epsilon)
      .def_readonly("expected_b", &BiasReport::expected_b)
      .def_readonly("deficit", &BiasReport::deficit)
      .def_readonly("relative_deficit", &BiasReport::relative_deficit)
      .def_readonly("relative_excess", &BiasReport::relative_excess)
      .def_readonly("redistribution_share", &BiasReport::redistribution_share)
      .def("__repr__", [](const BiasReport& r) {
        return "BiasReport(r=" + std::to_string(r.r) +
               ", expected_b=" + std::to_string(r.expected_b) +
               ", deficit=" + std::to_string(r.deficit) + ")";
      });

  py::class_<RunResult>(m, "RunResult")
      .def_readonly("tally", &RunResult::tally)
      .def_readonly("units", &RunResult::units)
      .def_readonly("nth_prime", &RunResult::nth_prime)
      .def_readonly("segments", &RunResult::segments)
      .def_readonly("seconds", &RunResult::seconds)
      .def_readonly("completed", &RunResult::completed);

  m.def(
      "small_primes",
      [](u64 limit) { return small_primes(limit).primes; }, py::arg("limit"),
      "All primes <= limit, increasing.");
  m.def("is_squarefree", &is_squarefree_oracle, py::arg("m"),
        "Trial-division squarefreeness test.");
  m.def("is_prime", &is_prime_oracle, py::arg("m"),
        "Trial-division primality test.");
  m.def("nth_prime_bound", &nth_prime_bound, py::arg("n"),
        "Upper bound for the n-th prime.");
  m.def("adjacent_multiple_of_six", &adjacent_multiple_of_six, py::arg("p"));

  m.def("unbiased_ratio", &unbiased_ratio,
        "Unbiased nonsquarefree:squarefree odds among multiples of 6 "
        "(pi^2/3 - 1).");
  m.def("unbiased_ratio_all_integers", &unbiased_ratio_all_integers);
  m.def("bias_ratio", &bias_ratio, py::arg("tally"), "R = (a - b) / b.");
  m.def("relative_difference", &relative_difference, py::arg("r"),
        py::arg("r0"));
  m.def("excess", &excess, py::arg("r"), py::arg("r0"),
        "round(1000 * (r - r0)).");
  m.def("redistribution_report", &redistribution_report, py::arg("tally"),
        py::arg("centered_total"));

  m.def(
      "count_twins",
      [](u64 n, u64 segment_size, unsigned threads) {
        return run_kind(ExperimentKind::twins, n, segment_size, threads, "",
                        false)
            .tally;
      },
      py::arg("n"), py::arg("segment_size") = kDefaultSegmentSize,
      py::arg("threads") = 1,
      "Tally over the first n primes: pairs (p, p+2) and squarefree centers.");
  m.def(
      "count_isolated",
      [](u64 n, u64 segment_size, unsigned threads) {
        return run_kind(ExperimentKind::isolated, n, segment_size, threads, "",
                        false)
            .tally;
      },
      py::arg("n"), py::arg("segment_size") = kDefaultSegmentSize,
      py::arg("threads") = 1);
  m.def(
      "count_sqf_twins",
      [](u64 m_, bool include_primes, u64 segment_size, unsigned threads) {
        return run_kind(include_primes ? ExperimentKind::sqf_twins
                                       : ExperimentKind::sqf_twins_noprimes,
                        m_, segment_size, threads, "", false)
            .tally;
      },
      py::arg("m"), py::arg("include_primes") = true,
      py::arg("segment_size") = kDefaultSegmentSize, py::arg("threads") = 1);
  m.def(
      "count_sqf_neighbors",
      [](u64 m_, bool include_primes, u64 segment_size, unsigned threads) {
        return run_kind(include_primes
                            ? ExperimentKind::sqf_neighbors
                            : ExperimentKind::sqf_neighbors_noprimes,
                        m_, segment_size, threads, "", false)
            .tally;
      },
      py::arg("m"), py::arg("include_primes") = true,
      py::arg("segment_size") = kDefaultSegmentSize, py::arg("threads") = 1);
  m.def(
      "count_nonsqf_twins",
      [](u64 m_, u64 segment_size, unsigned threads) {
        return run_kind(ExperimentKind::nonsqf_twins, m_, segment_size,
                        threads, "", false)
            .tally;
      },
      py::arg("m"), py::arg("segment_size") = kDefaultSegmentSize,
      py::arg("threads") = 1);

  m.def(
      "run_experiment",
      [](const std::string& kind, u64 count, u64 segment_size,
         unsigned threads, const std::string& checkpoint, bool resume) {
        return run_kind(parse_kind(kind), count, segment_size, threads,
                        checkpoint, resume);
      },
      py::arg("kind"), py::arg("count"),
      py::arg("segment_size") = kDefaultSegmentSize, py::arg("threads") = 0,
      py::arg("checkpoint") = std::string(), py::arg("resume") = false,
      "Run one experiment; kind is the CLI spelling (e.g. 'twins').");
}
