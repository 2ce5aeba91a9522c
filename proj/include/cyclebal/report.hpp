#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclebal/census.hpp"
#include "cyclebal/null_model.hpp"

namespace cyclebal {

inline constexpr const char* kReportSchema = "cyclebal.report/1";
inline constexpr const char* kToolVersion = "1.0.0";

using Json = nlohmann::ordered_json;

struct DatasetInfo {
    std::string name;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    /// Fraction of negative edges.
    std::optional<double> p;
    bool undirected = false;
};

/// One line of a report. Every field except the length may be absent.
struct ReportRow {
    std::size_t length = 0;
    std::optional<BigInt> n_pos;
    std::optional<BigInt> n_neg;
    std::optional<double> r;
    std::optional<double> u;
    std::optional<double> k;
    std::optional<double> stderr_r;
    std::optional<double> null_r;
    std::optional<double> null_lo;
    std::optional<double> null_hi;
};

struct AnalysisReport {
    DatasetInfo dataset;
    /// exact | monte-carlo | orbits | walks | lowexact | null | shufflenull | fit | report
    std::string method;
    Json config = Json::object();
    std::vector<ReportRow> rows;
    /// Further named sections (fit, degree of balance, notes, ...).
    Json extras = Json::object();
    std::string tool_version = kToolVersion;
    /// Only serialized when set, so default output is reproducible.
    std::optional<double> wall_seconds;
};

/// Rows from a balance table (counts, R, U, K, stderr).
std::vector<ReportRow> rows_from_table(const BalanceTable& table);

/// Fills the null columns of the rows with matching lengths.
void attach_null_band(std::vector<ReportRow>& rows, const std::vector<NullBandRow>& band);

/// Six significant digits, locale independent; "inf" for +infinity.
std::string format_number(double v);

/// Rounds to the value format_number prints.
double round_significant(double v);

inline constexpr const char* kCsvHeader = "length,n_pos,n_neg,R,U,K,stderr_R,null_R,null_lo,null_hi";

/// Header plus one line per row; absent fields are empty cells. Returns the
/// number of bytes written. Throws DataError if the stream fails.
std::size_t write_csv(const std::vector<ReportRow>& rows, std::ostream& out);

Json report_to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const Json& j);

enum class ReportFormat { Csv, Json };

/// CSV writes only the rows; JSON writes the whole report with two-space
/// indentation and a trailing newline.
std::size_t emit_report(const AnalysisReport& report, ReportFormat format, std::ostream& out);

}  // namespace cyclebal
