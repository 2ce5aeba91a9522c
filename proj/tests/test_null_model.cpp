#include <doctest.h>

#include <cmath>
#include <map>

#include "cyclebal/cycle_engine.hpp"
#include "cyclebal/errors.hpp"
#include "cyclebal/null_model.hpp"
#include "support.hpp"

using namespace cyclebal;

namespace {

double binomial_odd_sum(double p, std::size_t l) {
    double sum = 0.0;
    double c = 1.0;  // C(l, i)
    for (std::size_t i = 0; i <= l; ++i) {
        if (i % 2 == 1) sum += c * std::pow(p, double(i)) * std::pow(1 - p, double(l - i));
        c = c * double(l - i) / double(i + 1);
    }
    return sum;
}

BalanceTable table_of(const std::vector<std::optional<double>>& r) {
    BalanceTable t;
    for (std::size_t i = 0; i < r.size(); ++i) {
        BalanceRow row;
        row.length = i + 1;
        if (r[i]) fill_from_ratio(row, *r[i]);
        t.rows.push_back(row);
    }
    return t;
}

}  // namespace

TEST_CASE("null ratio") {
    for (std::size_t l = 1; l <= 30; ++l) {
        CHECK(null_ratio(0.5, l) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(null_ratio(0.0, l) == 0.0);
        for (double p : {0.05, 0.2, 0.37, 0.8, 1.0}) {
            CHECK(null_ratio(p, l) == doctest::Approx(binomial_odd_sum(p, l)).epsilon(1e-12));
            CHECK(null_ratio(p, l) == doctest::Approx(null_ratio_closed_form(p, l)).epsilon(1e-12));
        }
    }
    CHECK(null_ratio(1.0, 3) == doctest::Approx(1.0));
    CHECK(null_ratio(1.0, 4) == doctest::Approx(0.0));
    CHECK_THROWS_AS(null_ratio(1.5, 3), UsageError);
    CHECK_THROWS_AS(null_ratio(0.5, 0), UsageError);
}

TEST_CASE("null band") {
    const NullBandRow b = null_band(0.2, 3, 100);
    const double r = null_ratio(0.2, 3);
    CHECK(b.r_null == doctest::Approx(r));
    CHECK(*b.lower == doctest::Approx(r - 2 * std::sqrt(r * (1 - r) / 100)));
    CHECK(*b.upper == doctest::Approx(r + 2 * std::sqrt(r * (1 - r) / 100)));
    const NullBandRow tiny = null_band(0.5, 3, 1);
    CHECK(*tiny.lower == 0.0);
    CHECK(*tiny.upper == 1.0);
    CHECK_FALSE(null_band(0.3, 4, 0).lower.has_value());
}

TEST_CASE("sign shuffles keep structure and the negative count") {
    Rng rng(6);
    for (bool undirected : {false, true}) {
        const SignedDigraph g = testing::random_graph({20, 0.2, 0.3, undirected, true}, rng);
        Rng r1(100), r2(100);
        const SignedDigraph a = shuffle_signs(g, r1);
        const SignedDigraph b = shuffle_signs(g, r2);
        CHECK(std::equal(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end()));
        // undirected graphs permute unordered pairs, so count a pair once
        auto negative_units = [&](const SignedDigraph& h) {
            std::size_t loops = 0;
            for (const auto& e : h.edges()) loops += e.source == e.target && e.sign == Sign::Negative;
            return undirected ? (h.negative_edge_count() + loops) / 2 : h.negative_edge_count();
        };
        CHECK(negative_units(a) == negative_units(g));
        REQUIRE(a.edge_count() == g.edge_count());
        bool moved = false;
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            CHECK(a.edges()[i].source == g.edges()[i].source);
            CHECK(a.edges()[i].target == g.edges()[i].target);
            moved |= a.edges()[i].sign != g.edges()[i].sign;
            if (undirected) CHECK(a.edge_sign(a.edges()[i].target, a.edges()[i].source) == a.edges()[i].sign);
        }
        CHECK(moved);
        CHECK(a.origin() == g.origin());
    }
}

TEST_CASE("shuffle null") {
    Rng rng(9);
    const SignedDigraph g = testing::random_graph({12, 0.3, 0.5, true, false}, rng);
    ShuffleConfig c;
    c.shuffles = 6;
    c.seed = 5;
    c.max_length = 5;
    const ShuffleNullResult a = shuffle_null(g, c);
    const ShuffleNullResult b = shuffle_null(g, c);
    REQUIRE(a.table.rows.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(a.table.rows[i].r == b.table.rows[i].r);
    // totals are structural, so every shuffle sees the same cycle counts
    const CycleCensus exact = cycle_census(g, 5);
    for (std::size_t l = 1; l <= 5; ++l)
        CHECK(a.table.rows[l - 1].n_pos + a.table.rows[l - 1].n_neg == 6 * exact.at(l).total());

    const SignedDigraph all_pos = complete_graph(5);
    const ShuffleNullResult z = shuffle_null(all_pos, c);
    CHECK(*z.table.rows[2].r == 0.0);

    c.monte_carlo = MonteCarloConfig{};
    c.monte_carlo->samples_per_batch = 20;
    c.monte_carlo->batches = 3;
    c.monte_carlo->sample_size = 6;
    const ShuffleNullResult m = shuffle_null(g, c);
    CHECK(m.table.rows.size() == 5);
}

TEST_CASE("model and correlation fit") {
    CHECK(model_ratio(2, 1.3, 0.5) == 0.0);
    CHECK(model_ratio(4, 1.0, 0.5) == doctest::Approx(0.5 * (1 - std::exp(-1.0))));

    std::vector<std::optional<double>> r{std::nullopt, 0.0};
    for (std::size_t l = 3; l <= 12; ++l) r.push_back(model_ratio(l, 2.5, 0.5));
    const BalanceTable t = table_of(r);
    const CorrelationFit f = fit_correlation_length(t, std::pair<std::size_t, std::size_t>{3, 12});
    CHECK(f.xi == doctest::Approx(2.5).epsilon(1e-4));
    CHECK(f.two_xi == doctest::Approx(5.0).epsilon(1e-4));
    CHECK(f.rss < 1e-12);
    CHECK_FALSE(f.at_boundary);

    const CorrelationFit g = fit_correlation_length(table_of({0.0, 0.0, 0.1, 0.2}), std::pair<std::size_t, std::size_t>{3, 4}, 1.0);
    CHECK(g.amplitude == 1.0);
    CHECK(g.xi > 0.0);

    const CorrelationFit zero = fit_correlation_length(table_of({0.0, 0.0, 0.0, 0.0, 0.0}), std::pair<std::size_t, std::size_t>{3, 5});
    CHECK(std::isinf(zero.xi));

    CHECK_THROWS_AS(fit_correlation_length(table_of({0.0, 0.0, 0.1}), std::pair<std::size_t, std::size_t>{3, 3}), DataError);
    CHECK_THROWS_AS(fit_correlation_length(t, std::nullopt, -1.0), UsageError);
}

TEST_CASE("default fit range stops before R reaches 0.45") {
    const BalanceTable t = table_of({std::nullopt, 0.0, 0.1, 0.3, 0.4, 0.46, 0.3});
    CHECK(default_fit_range(t) == std::pair<std::size_t, std::size_t>{3, 5});
    CHECK_THROWS_AS(default_fit_range(table_of({0.0, 0.0, 0.5})), DataError);
}
