#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cyclebal/census.hpp"
#include "cyclebal/monte_carlo.hpp"
#include "cyclebal/rng.hpp"
#include "cyclebal/signed_digraph.hpp"

namespace cyclebal {

/// Probability that a cycle of length l is negative when each edge is
/// independently negative with probability p: the sum over odd i of
/// C(l, i) p^i (1-p)^(l-i). Throws UsageError for p outside [0,1] or l = 0.
double null_ratio(double p, std::size_t length);

/// (1 - (1 - 2p)^l) / 2, the same quantity in closed form.
double null_ratio_closed_form(double p, std::size_t length);

struct NullBandRow {
    std::size_t length = 0;
    double r_null = 0.0;
    /// R_null ± 2 sqrt(R_null (1 - R_null) / total), clamped to [0, 1];
    /// empty when total is zero.
    std::optional<double> lower;
    std::optional<double> upper;
    BigInt total = 0;
};

NullBandRow null_band(double p, std::size_t length, const BigInt& total);

/// One band row per row of `table`, using its n_pos + n_neg as the total.
std::vector<NullBandRow> null_band_table(double p, const BalanceTable& table);

/// Random permutation of the signs over the edges, so the number of negative
/// edges is preserved. For undirected graphs the unordered pairs are permuted
/// and both orientations keep a common sign.
SignedDigraph shuffle_signs(const SignedDigraph& g, Rng& rng);

struct ShuffleConfig {
    std::size_t shuffles = 10;
    std::uint64_t seed = 0;
    std::size_t max_length = 6;
    /// Estimate each shuffled graph by Monte Carlo instead of exactly; its
    /// max_length and master_seed are overridden per shuffle.
    std::optional<MonteCarloConfig> monte_carlo;
    unsigned workers = 1;
};

struct ShuffleNullResult {
    /// Mean R per length over the shuffles where it is defined, with U and K
    /// derived from it; stderr_r is 2 sd / sqrt(count). n_pos/n_neg are summed.
    BalanceTable table;
    /// Standard deviation of R across shuffles per length (index l - 1).
    std::vector<std::optional<double>> spread;
};

ShuffleNullResult shuffle_null(const SignedDigraph& g, const ShuffleConfig& config);

/// R_model(l) = amplitude (1 - exp(-(l - 2) / (2 xi))).
double model_ratio(std::size_t length, double xi, double amplitude);

struct CorrelationFit {
    double xi = 0.0;  // +infinity when every R in range is zero
    double two_xi = 0.0;
    std::size_t first = 0;
    std::size_t last = 0;
    double amplitude = 0.5;
    double rss = 0.0;
    /// The minimum sits at an end of the search interval.
    bool at_boundary = false;
};

/// [3, l*] where l* is the last length before R first reaches 0.45 (or the
/// last defined length). Throws DataError when fewer than two rows qualify.
std::pair<std::size_t, std::size_t> default_fit_range(const BalanceTable& table);

/// Least squares fit of xi over the defined R in [first, last], by bounded
/// Brent minimization in log xi. Throws DataError with fewer than two points.
CorrelationFit fit_correlation_length(const BalanceTable& table,
                                      std::optional<std::pair<std::size_t, std::size_t>> range = std::nullopt,
                                      double amplitude = 0.5);

}  // namespace cyclebal
