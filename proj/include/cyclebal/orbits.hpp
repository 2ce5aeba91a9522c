#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cyclebal/census.hpp"
#include "cyclebal/signed_digraph.hpp"

namespace cyclebal {

/// Signed Hashimoto (non-backtracking edge adjacency) matrix.
///
/// Index i is the i-th edge of the graph in (source, target) order; an
/// undirected edge contributes both orientations. T[i][j] is nonzero iff
/// target(e_i) = source(e_j) and e_j is not the reverse of e_i. Signs follow
/// forward assignment: every entry in row i carries sign(e_i).
class HashimotoMatrix {
public:
    std::size_t dimension() const noexcept { return edges_.size(); }
    const Edge& edge(std::size_t i) const { return edges_.at(i); }
    std::span<const Edge> edges() const noexcept { return edges_; }

    /// Column indices of the nonzero entries of row i, ascending.
    std::span<const std::uint32_t> successors(std::size_t i) const {
        return {succ_.data() + offsets_.at(i), succ_.data() + offsets_.at(i + 1)};
    }
    std::size_t nonzero_count() const noexcept { return succ_.size(); }

    /// Entry of T (or |T| when `absolute`).
    int entry(std::size_t i, std::size_t j, bool absolute = false) const;

private:
    friend HashimotoMatrix hashimoto_matrix(const SignedDigraph& g);
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<std::uint32_t> succ_;
};

/// Throws DataError if g has self-loops (remove them first).
HashimotoMatrix hashimoto_matrix(const SignedDigraph& g);

/// Moebius function; throws UsageError for n = 0.
int mobius(std::uint64_t n);

struct TraceOptions {
    /// Matrices up to this dimension are swept densely.
    std::size_t dense_cap = 4096;
    unsigned workers = 1;
};

/// Tr T^d and Tr |T|^d for d = 0..L (entry 0 is the dimension).
struct HashimotoTraces {
    std::vector<BigInt> signed_traces;
    std::vector<BigInt> abs_traces;
};

HashimotoTraces hashimoto_traces(const HashimotoMatrix& t, std::size_t max_length, const TraceOptions& options = {});

/// Positive and negative primitive orbits per length 1..L.
struct OrbitCensus {
    std::vector<SignedCount> counts;

    std::size_t max_length() const noexcept { return counts.size(); }
    const SignedCount& at(std::size_t length) const { return counts.at(length - 1); }
    BalanceTable table() const;
};

/// Moebius inversion of the traces. Totals are
/// N+ + N- = (1/l) sum over d | l of mu(l/d) Tr|T|^d. For the signed part the
/// k-th power of an orbit carries sign s^k, so N+ - N- is peeled off
/// recursively: l (N+ - N-)_l = Tr T^l - sum over k | l, k > 1 of
/// (l/k) (N+ - N-)_{l/k} for odd k and (l/k) (N+ + N-)_{l/k} for even k.
/// This agrees with the plain signed Moebius sum whenever no negative orbit
/// has length l/k for an even k (in particular for every l <= 5).
/// Throws InvariantViolation if a count is not a nonnegative integer.
OrbitCensus orbits_from_traces(const HashimotoTraces& traces);

/// Requires L >= 3 and no self-loops.
OrbitCensus primitive_orbit_counts(const SignedDigraph& g, std::size_t max_length, const TraceOptions& options = {});

/// Inverse of the inversion: l * sum over k | l of N_{l/k} / k, which is
/// Tr|T|^l when fed unsigned totals and Tr T^l when fed N+ - N-.
std::vector<BigInt> traces_from_orbits(const OrbitCensus& orbits, bool signed_counts);

/// Backtrackless closed walk counts W+ and W- per length (index l, 1..L).
struct OrbitWalks {
    std::vector<BigInt> positive;
    std::vector<BigInt> negative;
};

/// Stark-Terras recursion on the vertex adjacency. Throws DataError for a
/// directed graph or one with self-loops.
OrbitWalks stark_terras_orbit_walks(const SignedDigraph& g, std::size_t max_length);

/// R, U and K of closed walks of each length: row l has n_pos/n_neg equal to
/// (Tr|A|^l ± Tr A^l)/2, so R = (Tr|A|^l - Tr A^l)/(2 Tr|A|^l).
BalanceTable walk_ratios(const SignedDigraph& g, std::size_t max_length, const TraceOptions& options = {});

struct DegreeOfBalance {
    double k = 1.0;  // Tr exp(A) / Tr exp(|A|)
    double u = 0.0;  // (1 - K) / (1 + K)
    std::size_t terms = 0;
};

/// Exponential traces by the power series, stopped once the term matrix falls
/// below 1e-12 of the running sum. Throws UsageError above `max_vertices`.
DegreeOfBalance weighted_degree_of_balance(const SignedDigraph& g, std::size_t max_vertices = 4000);

}  // namespace cyclebal
