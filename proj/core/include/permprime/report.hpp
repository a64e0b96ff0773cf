// report.hpp -- tables, machine-readable exports, and curve data
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <permprime/survey.hpp>

namespace permprime {

enum class OutputFormat { text, csv, json };

std::optional<OutputFormat> parse_format(std::string_view name);

/// Which columns a rendered table carries. The digit set is always first;
/// the remaining columns keep the canonical order c, p, c/p.
struct TableSpec {
    OutputFormat format = OutputFormat::text;
    bool with_ratio = false;  // append c/p to four decimals
};

/// Render records in the requested format.
///  - text: aligned "b  c  p" columns; ratios in leading-dot style
///    (".4833", but "1.0000").
///  - csv: header "ds,c,p[,cp_ratio]", LF endings, ratios like "0.4833".
///  - json: array of {"ds","c","p"[,"cp_ratio"]} objects.
std::string render_table(std::span<const DsRecord> records, const TableSpec& spec);

/// Parse a csv table back into records (primes are not part of the format).
/// Throws std::invalid_argument on malformed input.
std::vector<DsRecord> parse_table_csv(std::string_view csv);

/// One point per record: 1-based position in the sorted record list plus
/// its c and p. c <= p pointwise (the two curves never cross).
struct CurvePoint {
    std::size_t index = 0;
    std::uint64_t c = 0;
    std::uint64_t p = 0;
};

struct CurveSeries {
    std::vector<CurvePoint> points;
};

CurveSeries curve_data(std::span<const DsRecord> records);

std::string curve_csv(const CurveSeries& series);
std::string curve_json(const CurveSeries& series);

/// Minimal standalone chart: one polyline per series (p above, c below),
/// viewBox spanning the data extent.
std::string curve_svg(const CurveSeries& series);

/// Lines of the form "N - P - D", one per summary; "?" for an unknown D.
std::string npd_report(std::span<const SurveySummary> summaries);

/// The P/D comparison table (text or csv); unknown entries render "?".
std::string render_ratio_table(std::span<const RatioTableRow> rows, OutputFormat format);

}  // namespace permprime
