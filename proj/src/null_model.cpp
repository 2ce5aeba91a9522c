#include "cyclebal/null_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/tools/minima.hpp>

#include "cyclebal/cycle_engine.hpp"
#include "cyclebal/errors.hpp"
#include "parallel.hpp"

namespace cyclebal {

namespace {

void check_p(double p, std::size_t length) {
    if (!(p >= 0.0 && p <= 1.0)) throw UsageError("negative-edge fraction must lie in [0, 1]");
    if (length == 0) throw UsageError("cycle length must be at least 1");
}

}  // namespace

double null_ratio(double p, std::size_t length) {
    check_p(p, length);
    double sum = 0.0;
    double binom = 1.0;  // C(l, i)
    for (std::size_t i = 0; i <= length; ++i) {
        if (i > 0) binom = binom * static_cast<double>(length - i + 1) / static_cast<double>(i);
        if (i % 2 == 1)
            sum += binom * std::pow(p, static_cast<double>(i)) * std::pow(1.0 - p, static_cast<double>(length - i));
    }
    return sum;
}

double null_ratio_closed_form(double p, std::size_t length) {
    check_p(p, length);
    return 0.5 * (1.0 - std::pow(1.0 - 2.0 * p, static_cast<double>(length)));
}

NullBandRow null_band(double p, std::size_t length, const BigInt& total) {
    NullBandRow row;
    row.length = length;
    row.r_null = null_ratio(p, length);
    row.total = total;
    if (total <= 0) return row;
    const double half = 2.0 * std::sqrt(row.r_null * (1.0 - row.r_null) / total.convert_to<double>());
    row.lower = std::clamp(row.r_null - half, 0.0, 1.0);
    row.upper = std::clamp(row.r_null + half, 0.0, 1.0);
    return row;
}

std::vector<NullBandRow> null_band_table(double p, const BalanceTable& table) {
    std::vector<NullBandRow> out;
    for (const auto& row : table.rows) out.push_back(null_band(p, row.length, row.n_pos + row.n_neg));
    return out;
}

SignedDigraph shuffle_signs(const SignedDigraph& g, Rng& rng) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    const bool undirected = g.origin() == Origin::Undirected;
    // Slots are edges, or for undirected graphs the edges with source <= target.
    std::vector<std::size_t> slots;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (!undirected || edges[i].source <= edges[i].target) slots.push_back(i);
    std::vector<Sign> signs;
    signs.reserve(slots.size());
    for (auto i : slots) signs.push_back(edges[i].sign);
    rng.shuffle(std::span<Sign>(signs));
    for (std::size_t k = 0; k < slots.size(); ++k) edges[slots[k]].sign = signs[k];
    if (undirected) {
        // Edges are sorted by (source, target); copy each sign to the reverse.
        auto less = [](const Edge& x, const Edge& y) {
            return x.source != y.source ? x.source < y.source : x.target < y.target;
        };
        for (auto i : slots) {
            const Edge& e = edges[i];
            if (e.source == e.target) continue;
            auto rev = std::lower_bound(edges.begin(), edges.end(), Edge{e.target, e.source, e.sign}, less);
            rev->sign = e.sign;
        }
    }
    return SignedDigraph(g.vertex_count(), std::move(edges), g.origin(), g.labels());
}

ShuffleNullResult shuffle_null(const SignedDigraph& g, const ShuffleConfig& config) {
    if (config.shuffles == 0) throw UsageError("shuffle count must be at least 1");
    if (config.max_length == 0) throw UsageError("maximum cycle length must be at least 1");
    const std::size_t L = config.max_length;
    std::vector<std::vector<std::optional<double>>> ratios(config.shuffles);
    std::vector<CycleCensus> counts(config.shuffles, CycleCensus(L));
    // Monte Carlo shuffles parallelise internally; exact ones across shuffles.
    const unsigned outer = config.monte_carlo ? 1u : config.workers;
    detail::parallel_for(config.shuffles, outer, [&](std::size_t s) {
        Rng rng(derive_seed(config.seed, 0x5348u, s));
        const SignedDigraph shuffled = shuffle_signs(g, rng);
        auto& r = ratios[s];
        if (config.monte_carlo) {
            MonteCarloConfig mc = *config.monte_carlo;
            mc.max_length = L;
            mc.master_seed = derive_seed(config.seed, 0x4d43u, s);
            mc.workers = config.workers;
            const auto report = run_monte_carlo(shuffled, mc);
            for (const auto& row : report.table.rows) {
                r.push_back(row.r);
                counts[s].at(row.length) = {row.n_pos, row.n_neg};
            }
        } else {
            const auto census = cycle_census(shuffled, L);
            counts[s] = census;
            for (const auto& row : balance_table(census).rows) r.push_back(row.r);
        }
    });
    ShuffleNullResult out;
    for (std::size_t l = 1; l <= L; ++l) {
        BalanceRow row;
        row.length = l;
        std::vector<double> values;
        for (std::size_t s = 0; s < config.shuffles; ++s) {
            row.n_pos += counts[s].at(l).positive;
            row.n_neg += counts[s].at(l).negative;
            if (ratios[s][l - 1]) values.push_back(*ratios[s][l - 1]);
        }
        std::optional<double> spread;
        if (!values.empty()) {
            double mean = 0.0;
            for (double v : values) mean += v;
            mean /= static_cast<double>(values.size());
            fill_from_ratio(row, mean);
            if (values.size() >= 2) {
                double ss = 0.0;
                for (double v : values) ss += (v - mean) * (v - mean);
                spread = std::sqrt(ss / static_cast<double>(values.size() - 1));
                row.stderr_r = 2.0 * *spread / std::sqrt(static_cast<double>(values.size()));
            }
        }
        out.table.rows.push_back(std::move(row));
        out.spread.push_back(spread);
    }
    return out;
}

double model_ratio(std::size_t length, double xi, double amplitude) {
    if (std::isinf(xi)) return 0.0;
    return amplitude * (1.0 - std::exp(-(static_cast<double>(length) - 2.0) / (2.0 * xi)));
}

std::pair<std::size_t, std::size_t> default_fit_range(const BalanceTable& table) {
    std::size_t last = 0;
    for (const auto& row : table.rows) {
        if (row.length < 3 || !row.r) continue;
        if (*row.r >= 0.45) break;
        last = row.length;
    }
    if (last < 4) throw DataError("fewer than two balance ratios below 0.45 from length 3 on");
    return {3, last};
}

CorrelationFit fit_correlation_length(const BalanceTable& table, std::optional<std::pair<std::size_t, std::size_t>> range,
                                      double amplitude) {
    if (!(amplitude > 0.0)) throw UsageError("model amplitude must be positive");
    const auto [first, last] = range ? *range : default_fit_range(table);
    if (first > last) throw UsageError("fit range is empty");
    std::vector<std::pair<double, double>> points;
    for (const auto& row : table.rows)
        if (row.length >= first && row.length <= last && row.r)
            points.emplace_back(static_cast<double>(row.length), *row.r);
    if (points.size() < 2) throw DataError("the fit needs at least two defined balance ratios in range");

    CorrelationFit fit;
    fit.first = first;
    fit.last = last;
    fit.amplitude = amplitude;
    auto rss = [&](double xi) {
        double sum = 0.0;
        for (auto [l, r] : points) {
            const double d = r - model_ratio(static_cast<std::size_t>(l), xi, amplitude);
            sum += d * d;
        }
        return sum;
    };
    if (std::all_of(points.begin(), points.end(), [](auto p) { return p.second == 0.0; })) {
        fit.xi = fit.two_xi = std::numeric_limits<double>::infinity();
        fit.rss = 0.0;
        return fit;
    }
    const double lo = std::log(1e-4), hi = std::log(1e4);
    const auto [log_xi, value] =
        boost::math::tools::brent_find_minima([&](double t) { return rss(std::exp(t)); }, lo, hi, 50);
    fit.xi = std::exp(log_xi);
    fit.two_xi = 2.0 * fit.xi;
    fit.rss = value;
    fit.at_boundary = log_xi - lo < 1e-3 || hi - log_xi < 1e-3;
    return fit;
}

}  // namespace cyclebal
