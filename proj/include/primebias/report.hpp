#pragma once

#include <optional>
#include <span>
#include <string>

#include "primebias/experiment.hpp"

namespace primebias {

enum class ReportFormat { csv, json };
std::optional<ReportFormat> format_from_string(std::string_view name);

struct ReportRow {
  ExperimentSpec spec;
  Tally tally;
  std::optional<BiasReport> report;  // absent for degenerate tallies
};

// Objects centered on / adjacent to a multiple of 6: a - 1 for twins,
// a for every other kind.
u64 centered_total(ExperimentKind kind, const Tally& t);

// Attaches the bias report when the tally supports one (b >= 1 and a
// non-degenerate expected_b).
ReportRow make_report_row(const ExperimentSpec& spec, const Tally& t);

// Deterministic bytes. CSV columns: kind, exponent, a, b, r, r0, rel_diff,
// epsilon, expected_b, deficit, redistribution_share. Integers at full
// precision, reals at 6 significant digits. Throws on an empty list.
std::string emit_report(std::span<const ReportRow> rows, ReportFormat format);

}  // namespace primebias
