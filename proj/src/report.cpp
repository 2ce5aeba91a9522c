#include "cyclebal/report.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "cyclebal/errors.hpp"

namespace cyclebal {

std::vector<ReportRow> rows_from_table(const BalanceTable& table) {
    std::vector<ReportRow> rows;
    for (const auto& t : table.rows) {
        ReportRow r;
        r.length = t.length;
        r.n_pos = t.n_pos;
        r.n_neg = t.n_neg;
        r.r = t.r;
        r.u = t.u;
        r.k = t.k;
        r.stderr_r = t.stderr_r;
        rows.push_back(std::move(r));
    }
    return rows;
}

void attach_null_band(std::vector<ReportRow>& rows, const std::vector<NullBandRow>& band) {
    for (auto& row : rows)
        for (const auto& b : band)
            if (b.length == row.length) {
                row.null_r = b.r_null;
                row.null_lo = b.lower;
                row.null_hi = b.upper;
            }
}

std::string format_number(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    if (v == 0.0) return "0";  // also folds -0
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
    return std::string(buf, res.ptr);
}

double round_significant(double v) {
    if (!std::isfinite(v)) return v;
    const std::string s = format_number(v);
    double out = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), out);
    return out;
}

namespace {

std::string cell(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }
std::string cell(const std::optional<BigInt>& v) { return v ? v->str() : std::string(); }

Json number_or_null(const std::optional<double>& v) {
    if (!v) return nullptr;
    if (std::isinf(*v)) return *v > 0 ? "inf" : "-inf";
    return round_significant(*v);
}

std::optional<double> read_number(const Json& j) {
    if (j.is_null()) return std::nullopt;
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        throw DataError("unexpected string \"" + s + "\" in a numeric report field");
    }
    return j.get<double>();
}

std::optional<BigInt> read_count(const Json& j) {
    if (j.is_null()) return std::nullopt;
    return BigInt(j.get<std::string>());
}

}  // namespace

std::size_t write_csv(const std::vector<ReportRow>& rows, std::ostream& out) {
    std::ostringstream s;
    s << kCsvHeader << '\n';
    for (const auto& r : rows) {
        s << r.length << ',' << cell(r.n_pos) << ',' << cell(r.n_neg) << ',' << cell(r.r) << ',' << cell(r.u) << ','
          << cell(r.k) << ',' << cell(r.stderr_r) << ',' << cell(r.null_r) << ',' << cell(r.null_lo) << ','
          << cell(r.null_hi) << '\n';
    }
    const std::string text = s.str();
    out << text;
    if (!out) throw DataError("failed to write the report");
    return text.size();
}

Json report_to_json(const AnalysisReport& report) {
    Json j;
    j["schema"] = kReportSchema;
    j["tool_version"] = report.tool_version;
    j["method"] = report.method;
    Json d;
    d["name"] = report.dataset.name;
    d["vertices"] = report.dataset.vertices;
    d["edges"] = report.dataset.edges;
    d["p"] = number_or_null(report.dataset.p);
    d["undirected"] = report.dataset.undirected;
    j["dataset"] = d;
    j["config"] = report.config;
    Json rows = Json::array();
    for (const auto& r : report.rows) {
        Json row;
        row["length"] = r.length;
        row["n_pos"] = r.n_pos ? Json(r.n_pos->str()) : Json(nullptr);
        row["n_neg"] = r.n_neg ? Json(r.n_neg->str()) : Json(nullptr);
        row["R"] = number_or_null(r.r);
        row["U"] = number_or_null(r.u);
        row["K"] = number_or_null(r.k);
        row["stderr_R"] = number_or_null(r.stderr_r);
        row["null_R"] = number_or_null(r.null_r);
        row["null_lo"] = number_or_null(r.null_lo);
        row["null_hi"] = number_or_null(r.null_hi);
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["extras"] = report.extras;
    if (report.wall_seconds) j["wall_seconds"] = round_significant(*report.wall_seconds);
    return j;
}

AnalysisReport report_from_json(const Json& j) {
    try {
        if (j.at("schema").get<std::string>() != kReportSchema)
            throw DataError("unsupported report schema " + j.at("schema").get<std::string>());
        AnalysisReport r;
        r.tool_version = j.at("tool_version").get<std::string>();
        r.method = j.at("method").get<std::string>();
        const Json& d = j.at("dataset");
        r.dataset.name = d.at("name").get<std::string>();
        r.dataset.vertices = d.at("vertices").get<std::size_t>();
        r.dataset.edges = d.at("edges").get<std::size_t>();
        r.dataset.p = read_number(d.at("p"));
        r.dataset.undirected = d.at("undirected").get<bool>();
        r.config = j.at("config");
        for (const Json& row : j.at("rows")) {
            ReportRow x;
            x.length = row.at("length").get<std::size_t>();
            x.n_pos = read_count(row.at("n_pos"));
            x.n_neg = read_count(row.at("n_neg"));
            x.r = read_number(row.at("R"));
            x.u = read_number(row.at("U"));
            x.k = read_number(row.at("K"));
            x.stderr_r = read_number(row.at("stderr_R"));
            x.null_r = read_number(row.at("null_R"));
            x.null_lo = read_number(row.at("null_lo"));
            x.null_hi = read_number(row.at("null_hi"));
            r.rows.push_back(std::move(x));
        }
        r.extras = j.at("extras");
        if (j.contains("wall_seconds")) r.wall_seconds = j.at("wall_seconds").get<double>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("malformed report: ") + e.what());
    }
}

std::size_t emit_report(const AnalysisReport& report, ReportFormat format, std::ostream& out) {
    if (format == ReportFormat::Csv) return write_csv(report.rows, out);
    const std::string text = report_to_json(report).dump(2) + "\n";
    out << text;
    if (!out) throw DataError("failed to write the report");
    return text.size();
}

}  // namespace cyclebal
