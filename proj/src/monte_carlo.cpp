#include "cyclebal/monte_carlo.hpp"

#include <chrono>
#include <cmath>
#include <unordered_set>

#include "cyclebal/cycle_engine.hpp"
#include "cyclebal/errors.hpp"
#include "parallel.hpp"

namespace cyclebal {

void MonteCarloConfig::validate() const {
    if (samples_per_batch == 0) throw UsageError("samples per batch must be positive");
    if (batches < 2) throw UsageError("at least two batches are needed for a standard deviation");
    if (max_length == 0) throw UsageError("maximum cycle length must be at least 1");
    if (sample_size < max_length)
        throw UsageError("sample size " + std::to_string(sample_size) + " is below the maximum cycle length " +
                         std::to_string(max_length));
}

SampledSet sample_connected_vertex_set(const SignedDigraph& g, Rng& rng, std::size_t size) {
    if (g.vertex_count() == 0) throw DataError("cannot sample from an empty graph");
    if (size == 0) return {};
    std::vector<VertexId> chosen;
    std::vector<VertexId> frontier;
    std::unordered_set<VertexId> seen;  // chosen or in the frontier
    const auto seed = static_cast<VertexId>(rng.below(g.vertex_count()));
    chosen.push_back(seed);
    seen.insert(seed);
    auto expand = [&](VertexId v) {
        for (VertexId u : g.neighbours(v))
            if (seen.insert(u).second) frontier.push_back(u);
    };
    expand(seed);
    while (chosen.size() < size && !frontier.empty()) {
        const std::size_t i = rng.below(frontier.size());
        const VertexId v = frontier[i];
        frontier[i] = frontier.back();
        frontier.pop_back();
        chosen.push_back(v);
        expand(v);
    }
    SampledSet out;
    out.short_component = chosen.size() < size;
    out.vertices = VertexSet(std::move(chosen));
    return out;
}

namespace {

struct BatchState {
    std::vector<BigInt> pos;
    std::vector<BigInt> neg;
    std::vector<double> ratio_sum;
    std::vector<std::size_t> ratio_count;
    std::size_t samples = 0;
};

struct SampleResult {
    CycleCensus census = CycleCensus(0);
    bool short_component = false;
};

class Runner {
public:
    Runner(const SignedDigraph& g, const MonteCarloConfig& config, const VertexSampler& sampler)
        : g_(g), config_(config), sampler_(sampler), batches_(config.batches) {
        config_.validate();
        const std::size_t L = config_.max_length;
        for (auto& b : batches_) {
            b.pos.assign(L, 0);
            b.neg.assign(L, 0);
            b.ratio_sum.assign(L, 0.0);
            b.ratio_count.assign(L, 0);
        }
    }

    void extend_to(std::size_t per_batch) {
        const auto start = std::chrono::steady_clock::now();
        constexpr std::size_t chunk = 256;
        std::vector<SampleResult> results;
        for (std::size_t b = 0; b < batches_.size(); ++b) {
            auto& batch = batches_[b];
            while (batch.samples < per_batch) {
                const std::size_t first = batch.samples;
                const std::size_t count = std::min(chunk, per_batch - first);
                results.assign(count, SampleResult{});
                detail::parallel_for(count, config_.workers, [&](std::size_t i) {
                    results[i] = evaluate(b, first + i);
                });
                for (const auto& r : results) absorb(batch, r);
                batch.samples += count;
            }
        }
        wall_seconds_ += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }

    MonteCarloReport report(std::optional<double> target) const {
        const std::size_t L = config_.max_length;
        MonteCarloReport out;
        out.config = config_;
        out.config.samples_per_batch = batches_.front().samples;
        out.total_samples = 0;
        for (const auto& b : batches_) out.total_samples += b.samples;
        out.short_samples = short_samples_;
        out.wall_seconds = wall_seconds_;
        out.cycles_found.assign(L, 0);
        out.status.assign(L, LengthStatus::Undefined);
        out.converged = true;
        for (std::size_t l = 1; l <= L; ++l) {
            BigInt pos = 0, neg = 0;
            std::vector<double> values;
            for (const auto& b : batches_) {
                pos += b.pos[l - 1];
                neg += b.neg[l - 1];
                if (config_.aggregation == Aggregation::Pooled) {
                    const BigInt total = b.pos[l - 1] + b.neg[l - 1];
                    if (total != 0) values.push_back(ratio(b.neg[l - 1], total));
                } else if (b.ratio_count[l - 1] != 0) {
                    values.push_back(b.ratio_sum[l - 1] / static_cast<double>(b.ratio_count[l - 1]));
                }
            }
            out.cycles_found[l - 1] = pos + neg;
            BalanceRow row;
            row.length = l;
            row.n_pos = pos;
            row.n_neg = neg;
            if (!values.empty()) {
                double mean = 0.0;
                for (double v : values) mean += v;
                mean /= static_cast<double>(values.size());
                fill_from_ratio(row, mean);
                if (values.size() >= 2) {
                    double ss = 0.0;
                    for (double v : values) ss += (v - mean) * (v - mean);
                    const double sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
                    row.stderr_r = 2.0 * sd / std::sqrt(static_cast<double>(values.size()));
                }
                const bool ok = row.stderr_r && (!target || *row.stderr_r <= *target);
                out.status[l - 1] = ok ? LengthStatus::Converged : LengthStatus::NotConverged;
                if (!ok) out.converged = false;
            }
            out.table.rows.push_back(std::move(row));
        }
        return out;
    }

    std::size_t samples_per_batch() const { return batches_.front().samples; }

private:
    SampleResult evaluate(std::size_t batch, std::size_t index) const {
        Rng rng(derive_seed(config_.master_seed, batch, index));
        SampledSet s = sampler_(g_, rng, config_.sample_size);
        const auto sub = induced_subgraph(g_, s.vertices);
        return {cycle_census(sub.graph, config_.max_length), s.short_component};
    }

    void absorb(BatchState& b, const SampleResult& r) {
        if (r.short_component) ++short_samples_;
        for (std::size_t l = 1; l <= config_.max_length; ++l) {
            const auto& c = r.census.at(l);
            b.pos[l - 1] += c.positive;
            b.neg[l - 1] += c.negative;
            const BigInt total = c.positive + c.negative;
            if (total != 0) {
                b.ratio_sum[l - 1] += ratio(c.negative, total);
                ++b.ratio_count[l - 1];
            }
        }
    }

    const SignedDigraph& g_;
    MonteCarloConfig config_;
    const VertexSampler& sampler_;
    std::vector<BatchState> batches_;
    std::size_t short_samples_ = 0;
    double wall_seconds_ = 0.0;
};

}  // namespace

MonteCarloReport run_monte_carlo(const SignedDigraph& g, const MonteCarloConfig& config,
                                 const VertexSampler& sampler) {
    Runner runner(g, config, sampler);
    runner.extend_to(config.samples_per_batch);
    return runner.report(std::nullopt);
}

MonteCarloReport convergence_loop(const SignedDigraph& g, const MonteCarloConfig& config, double target,
                                  std::size_t cap, const ProgressHook& progress, const VertexSampler& sampler) {
    if (!(target > 0.0)) throw UsageError("convergence target must be positive");
    config.validate();
    if (cap < config.samples_per_batch * config.batches)
        throw UsageError("sample cap is below the first round of samples");
    Runner runner(g, config, sampler);
    std::size_t per_batch = config.samples_per_batch;
    while (true) {
        runner.extend_to(per_batch);
        MonteCarloReport report = runner.report(target);
        if (progress) {
            ConvergenceProgress p;
            p.samples_done = report.total_samples;
            for (const auto& row : report.table.rows) p.stderr_r.push_back(row.stderr_r);
            progress(p);
        }
        if (report.converged || 2 * per_batch * config.batches > cap) return report;
        per_batch *= 2;
    }
}

}  // namespace cyclebal
