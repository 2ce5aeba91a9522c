#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cyclebal/census.hpp"
#include "cyclebal/rng.hpp"
#include "cyclebal/signed_digraph.hpp"

namespace cyclebal {

enum class Aggregation { Pooled, MeanOfRatios };

struct MonteCarloConfig {
    std::size_t samples_per_batch = 1000;
    std::size_t batches = 10;
    std::size_t sample_size = 20;
    std::size_t max_length = 20;
    std::uint64_t master_seed = 0;
    Aggregation aggregation = Aggregation::Pooled;
    /// Threads evaluating samples; the report does not depend on it.
    unsigned workers = 1;

    /// Throws UsageError on an invalid combination.
    void validate() const;
};

struct SampledSet {
    VertexSet vertices;
    /// The seed's weakly connected component was smaller than requested.
    bool short_component = false;
};

/// A sampling law: draws a vertex set of `size` vertices from `g`.
using VertexSampler = std::function<SampledSet(const SignedDigraph& g, Rng& rng, std::size_t size)>;

/// Snowball law: a uniform seed vertex, then repeatedly a uniform vertex from
/// the current neighbourhood. Returns the whole component, flagged, when it
/// is smaller than `size`. Throws DataError on an empty graph.
SampledSet sample_connected_vertex_set(const SignedDigraph& g, Rng& rng, std::size_t size);

enum class LengthStatus { Converged, NotConverged, Undefined };

struct MonteCarloReport {
    MonteCarloConfig config;
    /// Row l: estimate of R_l (mean over batches) with U and K derived from
    /// it, stderr_r = 2 sd / sqrt(batches), n_pos/n_neg pooled over all samples.
    BalanceTable table;
    /// Cycles of each length found over all samples (index l - 1).
    std::vector<BigInt> cycles_found;
    /// Per length; Undefined when no batch observed a cycle of that length.
    std::vector<LengthStatus> status;
    std::size_t total_samples = 0;
    std::size_t short_samples = 0;
    double wall_seconds = 0.0;
    bool converged = false;
};

/// Runs `batches` batches of `samples_per_batch` samples. Sample j of batch b
/// uses a stream seeded from (master_seed, b, j) so the report is
/// bit-identical for any worker count. Status is Converged for every length
/// with a defined standard error.
MonteCarloReport run_monte_carlo(const SignedDigraph& g, const MonteCarloConfig& config,
                                 const VertexSampler& sampler = sample_connected_vertex_set);

struct ConvergenceProgress {
    std::size_t samples_done = 0;
    /// Current two-sigma half width per length (index l - 1).
    std::vector<std::optional<double>> stderr_r;
};

using ProgressHook = std::function<void(const ConvergenceProgress&)>;

/// Doubles the samples per batch, starting from config.samples_per_batch,
/// until every observed length has stderr_r <= target or the total would
/// exceed `cap` samples. Earlier samples are kept, so the final report equals
/// run_monte_carlo at the final batch size. Lengths never observed do not
/// block convergence; their status is Undefined.
MonteCarloReport convergence_loop(const SignedDigraph& g, const MonteCarloConfig& config, double target,
                                  std::size_t cap, const ProgressHook& progress = {},
                                  const VertexSampler& sampler = sample_connected_vertex_set);

}  // namespace cyclebal
