#include "primebias/report.hpp"

#include <cstdio>
#include <cstdlib>

#include <json.hpp>

namespace primebias {

using json = nlohmann::ordered_json;

std::optional<ReportFormat> format_from_string(std::string_view name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  return std::nullopt;
}

u64 centered_total(ExperimentKind kind, const Tally& t) {
  // Every pair but {3,5} is centered on a multiple of 6.
  if (kind == ExperimentKind::twins) return t.a == 0 ? 0 : t.a - 1;
  return t.a;
}

ReportRow make_report_row(const ExperimentSpec& spec, const Tally& t) {
  ReportRow row{spec, t, std::nullopt};
  if (t.b == 0) return row;
  try {
    row.report = redistribution_report(t, centered_total(spec.kind, t));
  } catch (const std::domain_error&) {
    // Degenerate at toy scales; leave the report fields empty.
  }
  return row;
}

namespace {

std::string fmt_g6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Round to 6 significant digits so JSON numbers match the CSV text.
double sig6(double v) { return std::strtod(fmt_g6(v).c_str(), nullptr); }

}  // namespace

std::string emit_report(std::span<const ReportRow> rows, ReportFormat format) {
  if (rows.empty()) throw std::invalid_argument("emit_report: no results");

  if (format == ReportFormat::csv) {
    std::string out =
        "kind,exponent,a,b,r,r0,rel_diff,epsilon,expected_b,deficit,"
        "redistribution_share\n";
    for (const ReportRow& row : rows) {
      out += to_string(row.spec.kind);
      out += ',';
      if (row.spec.exponent >= 0) out += std::to_string(row.spec.exponent);
      out += ',';
      out += std::to_string(row.tally.a);
      out += ',';
      out += std::to_string(row.tally.b);
      if (row.report) {
        const BiasReport& r = *row.report;
        out += ',' + fmt_g6(r.r) + ',' + fmt_g6(r.r0) + ',' +
               fmt_g6(r.rel_diff) + ',' + std::to_string(r.epsilon) + ',' +
               std::to_string(r.expected_b) + ',' + std::to_string(r.deficit) +
               ',' + fmt_g6(r.redistribution_share);
      } else {
        out += ",,,,,,,";
      }
      out += '\n';
    }
    return out;
  }

  json arr = json::array();
  for (const ReportRow& row : rows) {
    json j;
    j["kind"] = to_string(row.spec.kind);
    if (row.spec.exponent >= 0)
      j["exponent"] = row.spec.exponent;
    else
      j["exponent"] = nullptr;
    j["count"] = row.spec.target();
    j["a"] = row.tally.a;
    j["b"] = row.tally.b;
    if (row.report) {
      const BiasReport& r = *row.report;
      j["r"] = sig6(r.r);
      j["r0"] = sig6(r.r0);
      j["rel_diff"] = sig6(r.rel_diff);
      j["epsilon"] = r.epsilon;
      j["expected_b"] = r.expected_b;
      j["deficit"] = r.deficit;
      j["redistribution_share"] = sig6(r.redistribution_share);
    } else {
      for (const char* key : {"r", "r0", "rel_diff", "epsilon", "expected_b",
                              "deficit", "redistribution_share"})
        j[key] = nullptr;
    }
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace primebias
