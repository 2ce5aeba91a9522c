#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "cyclebal/cycle_engine.hpp"
#include "cyclebal/errors.hpp"
#include "cyclebal/fixtures.hpp"
#include "cyclebal/null_model.hpp"
#include "cyclebal/report.hpp"

using namespace cyclebal;

namespace {

AnalysisReport triad_report() {
    AnalysisReport r;
    r.dataset.name = "triad";
    r.dataset.vertices = 3;
    r.dataset.edges = 3;
    r.dataset.p = 1.0 / 3.0;
    r.dataset.undirected = true;
    r.method = "exact";
    r.config["max_length"] = 4;
    const BalanceTable t = balance_table(cycle_census(fixtures::triad(), 4));
    r.rows = rows_from_table(t);
    attach_null_band(r.rows, null_band_table(1.0 / 3.0, t));
    r.extras["note"] = "x";
    return r;
}

}  // namespace

TEST_CASE("number formatting") {
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(0.1234567) == "0.123457");
    CHECK(format_number(-0.5) == "-0.5");
    CHECK(format_number(1234567.0) == "1.23457e+06");
    CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(round_significant(0.1234567) == 0.123457);
    CHECK(round_significant(2.0 / 3.0) == 0.666667);
}

TEST_CASE("csv layout") {
    std::ostringstream empty;
    write_csv({}, empty);
    CHECK(empty.str() == std::string(kCsvHeader) + "\n");

    std::ostringstream out;
    const std::size_t bytes = write_csv(triad_report().rows, out);
    CHECK(bytes == out.str().size());
    CHECK(out.str() ==
          "length,n_pos,n_neg,R,U,K,stderr_R,null_R,null_lo,null_hi\n"
          "1,0,0,,,,,0.333333,,\n"
          "2,3,0,0,0,1,,0.444444,0,1\n"
          "3,0,2,1,inf,-1,,0.481481,0,1\n"
          "4,0,0,,,,,0.493827,,\n");
}

TEST_CASE("json round trip is byte identical") {
    AnalysisReport r = triad_report();
    r.wall_seconds = 0.25;
    std::ostringstream first;
    emit_report(r, ReportFormat::Json, first);
    const AnalysisReport back = report_from_json(Json::parse(first.str()));
    std::ostringstream second;
    emit_report(back, ReportFormat::Json, second);
    CHECK(first.str() == second.str());
    CHECK(back.rows.size() == 4);
    CHECK(back.rows[2].u.has_value());
    CHECK(std::isinf(*back.rows[2].u));
    CHECK(*back.rows[1].n_pos == 3);
    const Json j = report_to_json(r);
    CHECK(j["schema"] == kReportSchema);
    CHECK(j["rows"][1]["n_pos"] == "3");
}

TEST_CASE("bad inputs") {
    CHECK_THROWS_AS(report_from_json(Json::parse(R"({"schema":"other/9"})")), DataError);
    std::ostringstream bad;
    bad.setstate(std::ios::badbit);
    CHECK_THROWS_AS(emit_report(triad_report(), ReportFormat::Csv, bad), DataError);
}

TEST_CASE("embedded fixtures") {
    const SignedDigraph t = fixtures::triad();
    CHECK(t.vertex_count() == 3);
    CHECK(t.edge_count() == 6);
    CHECK(t.negative_edge_count() == 2);
    const SignedDigraph g = fixtures::gahuku_gama();
    CHECK(g.vertex_count() == 16);
    CHECK(g.edge_count() == 116);
    CHECK(g.negative_edge_count() == 58);
    CHECK(g.origin() == Origin::Undirected);
    CHECK_FALSE(g.has_self_loops());
}
