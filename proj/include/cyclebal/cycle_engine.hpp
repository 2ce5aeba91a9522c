#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "cyclebal/census.hpp"
#include "cyclebal/signed_digraph.hpp"
#include "cyclebal/truncated_series.hpp"

namespace cyclebal {

/// Cycle weight: product of edge signs, or 1 for every cycle.
enum class Weighting { Signed, Unsigned };

struct EngineOptions {
    /// Threads sharing the subgraph enumeration. Results do not depend on it.
    unsigned workers = 1;
};

/// Pre-integration aggregate: coefficient l is the sum over connected induced
/// subgraphs H (|H| <= L) of the z^l coefficient of
/// Tr((z A_H)^|H| (I - z A_H)^|N(H)|), keeping only |H| <= l <= |H| + |N(H)|.
/// Each coefficient equals l times the weighted count of simple l-cycles.
struct CycleAggregates {
    TruncatedSeries signed_series;
    TruncatedSeries unsigned_series;
    std::uint64_t subgraphs_visited = 0;
};

CycleAggregates cycle_aggregates(const SignedDigraph& g, std::size_t max_length, bool want_signed,
                                 bool want_unsigned, const EngineOptions& options = {});

/// Generating function of the simple cycles truncated at z^L: the z^l
/// coefficient is the sum of w(c) over simple cycles of length l. Throws
/// InvariantViolation if an aggregate is not divisible by its degree.
TruncatedSeries cycle_polynomial(const SignedDigraph& g, std::size_t max_length, Weighting weighting,
                                 const EngineOptions& options = {});

/// Exact N+ and N- for every length 1..L, from the signed and unsigned series
/// of a single enumeration pass.
CycleCensus cycle_census(const SignedDigraph& g, std::size_t max_length, const EngineOptions& options = {});

/// Closed-form balance for loops, backtracks and triangles from traces of
/// A, |A| and the loop-free A~ = A - Diag(A).
struct LowOrderRatios {
    /// Tr A, Tr A~^2, Tr A~^3 (signed) and the same for |A|.
    std::array<BigInt, 3> signed_traces;
    std::array<BigInt, 3> unsigned_traces;
    /// Rows for lengths 1..3 with counts N± = (Tr|.| ± Tr .)/(2l).
    BalanceTable table;
};

LowOrderRatios exact_low_order_ratios(const SignedDigraph& g);

}  // namespace cyclebal
