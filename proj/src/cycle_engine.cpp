#include "cyclebal/cycle_engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>
#include <vector>

#include "cyclebal/errors.hpp"
#include "cyclebal/subgraph_enum.hpp"

namespace cyclebal {
namespace {

using i128 = __int128;

BigInt to_big(i128 v) {
    const bool negative = v < 0;
    unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    BigInt r = static_cast<std::uint64_t>(u >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(u);
    return negative ? BigInt(-r) : r;
}

// Per-degree sums held in __int128 and spilled to cpp_int on overflow.
class Accumulator {
public:
    explicit Accumulator(std::size_t max_degree) : fast_(max_degree + 1, 0), slow_(max_degree + 1) {}

    void add(std::size_t d, i128 v) {
        i128 r;
        if (__builtin_add_overflow(fast_[d], v, &r)) {
            slow_[d] += to_big(fast_[d]);
            fast_[d] = v;
        } else {
            fast_[d] = r;
        }
    }
    void add(std::size_t d, std::int64_t v) { add(d, static_cast<i128>(v)); }
    void add(std::size_t d, const BigInt& v) { slow_[d] += v; }

    BigInt total(std::size_t d) const { return slow_[d] + to_big(fast_[d]); }

private:
    std::vector<i128> fast_;
    std::vector<BigInt> slow_;
};

struct LocalArc {
    std::uint32_t target;
    std::int8_t sign;
};

// Adjacency of the current H in local ids.
struct LocalGraph {
    std::size_t k = 0;
    std::vector<std::size_t> offsets;
    std::vector<LocalArc> arcs;
    std::size_t max_row = 0;  // max out-degree, bounds the entries of |A_H|^m
    bool has_negative = false;
    bool has_loop = false;
};

double log2_binomial(std::size_t n, std::size_t j) {
    return (std::lgamma(n + 1.0) - std::lgamma(j + 1.0) - std::lgamma(n - j + 1.0)) / std::log(2.0);
}

template <class T>
T negate_if(bool neg, T v) {
    return neg ? T(-v) : v;
}

// Adds (-1)^(l-k) C(n, l-k) Tr(A_H^l) for l in [lo, hi] to `acc`.
// P holds the powers A^1..A^h with h = ceil(hi/2), row-major k x k each.
template <class MatInt, class TraceInt>
void subgraph_terms(const LocalGraph& H, std::size_t n, std::size_t lo, std::size_t hi, bool signed_weights,
                    std::vector<MatInt>& P, Accumulator& acc, Accumulator* also) {
    const std::size_t k = H.k;
    const std::size_t kk = k * k;
    const std::size_t h = (hi + 1) / 2;
    P.assign(h * kk, MatInt(0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t e = H.offsets[i]; e < H.offsets[i + 1]; ++e) {
            const auto& a = H.arcs[e];
            P[i * k + a.target] = signed_weights ? MatInt(a.sign) : MatInt(1);
        }
    // P[a] = P[a-1] * A, via the sparse rows of A.
    for (std::size_t p = 1; p < h; ++p) {
        const MatInt* prev = P.data() + (p - 1) * kk;
        MatInt* cur = P.data() + p * kk;
        for (std::size_t i = 0; i < k; ++i) {
            const MatInt* prow = prev + i * k;
            MatInt* crow = cur + i * k;
            for (std::size_t j = 0; j < k; ++j) {
                const MatInt& x = prow[j];
                if (x == 0) continue;
                for (std::size_t e = H.offsets[j]; e < H.offsets[j + 1]; ++e) {
                    const auto& a = H.arcs[e];
                    if (!signed_weights || a.sign > 0)
                        crow[a.target] += x;
                    else
                        crow[a.target] -= x;
                }
            }
        }
    }
    TraceInt binom = 1;  // C(n, l - k)
    for (std::size_t j = 0; j < lo - k; ++j) binom = binom * TraceInt(n - j) / TraceInt(j + 1);
    for (std::size_t m = lo; m <= hi; ++m) {
        if (m > lo) {
            const std::size_t j = m - 1 - k;
            binom = binom * TraceInt(n - j) / TraceInt(j + 1);
        }
        const std::size_t b = m / 2;
        const std::size_t a = m - b;
        const MatInt* Pa = P.data() + (a - 1) * kk;
        TraceInt tr = 0;
        if (b == 0) {
            for (std::size_t i = 0; i < k; ++i) tr += TraceInt(Pa[i * k + i]);
        } else {
            const MatInt* Pb = P.data() + (b - 1) * kk;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) {
                    const MatInt& x = Pa[i * k + j];
                    if (x != 0) tr += TraceInt(x) * TraceInt(Pb[j * k + i]);
                }
        }
        if (tr == 0) continue;
        const TraceInt term = negate_if<TraceInt>((m - k) % 2 == 1, TraceInt(binom * tr));
        acc.add(m, term);
        if (also) also->add(m, term);
    }
}

class Worker {
public:
    Worker(const SignedDigraph& g, std::size_t max_length, bool want_signed, bool want_unsigned)
        : g_(g), L_(max_length), want_signed_(want_signed), want_unsigned_(want_unsigned),
          signed_acc_(max_length), unsigned_acc_(max_length), local_(g.vertex_count(), -1) {}

    void visit(const SubgraphVisit& v) {
        ++visited_;
        const std::size_t k = v.vertices.size();
        const std::size_t n = v.neighbour_count;
        build(v.vertices);
        if (k == 1 && !H_.has_loop) return;
        if (H_.arcs.empty()) return;
        const std::size_t lo = k;
        const std::size_t hi = std::min(k + n, L_);
        if (!H_.has_negative && want_signed_ && want_unsigned_) {
            // All-positive H: the signed terms equal the unsigned ones.
            dispatch(n, lo, hi, false, unsigned_acc_, &signed_acc_);
            return;
        }
        if (want_unsigned_) dispatch(n, lo, hi, false, unsigned_acc_, nullptr);
        if (want_signed_) dispatch(n, lo, hi, H_.has_negative, signed_acc_, nullptr);
    }

    std::uint64_t visited() const { return visited_; }
    const Accumulator& signed_acc() const { return signed_acc_; }
    const Accumulator& unsigned_acc() const { return unsigned_acc_; }

private:
    void build(std::span<const VertexId> members) {
        H_.k = members.size();
        H_.offsets.assign(1, 0);
        H_.arcs.clear();
        H_.max_row = 0;
        H_.has_negative = false;
        H_.has_loop = false;
        for (std::size_t i = 0; i < members.size(); ++i) local_[members[i]] = static_cast<std::int32_t>(i);
        for (std::size_t i = 0; i < members.size(); ++i) {
            std::size_t row = 0;
            for (const Arc& a : g_.out_arcs(members[i])) {
                const std::int32_t j = local_[a.vertex];
                if (j < 0) continue;
                H_.arcs.push_back({static_cast<std::uint32_t>(j), static_cast<std::int8_t>(sign_value(a.sign))});
                if (a.sign == Sign::Negative) H_.has_negative = true;
                if (static_cast<std::size_t>(j) == i) H_.has_loop = true;
                ++row;
            }
            H_.max_row = std::max(H_.max_row, row);
            H_.offsets.push_back(H_.arcs.size());
        }
        for (VertexId m : members) local_[m] = -1;
    }

    void dispatch(std::size_t n, std::size_t lo, std::size_t hi, bool signed_weights, Accumulator& acc,
                  Accumulator* also) {
        if (lo > hi) return;
        const std::size_t h = (hi + 1) / 2;
        const double ld = H_.max_row > 1 ? std::log2(static_cast<double>(H_.max_row)) : 0.0;
        double max_binom = 0.0;
        for (std::size_t j = 0; j + lo <= hi; ++j) max_binom = std::max(max_binom, log2_binomial(n, j));
        // Entries of A^a are at most max_row^a; each trace term is at most
        // C(n,j) k max_row^m, and the running binomial needs an extra factor l.
        const double mat_bits = static_cast<double>(h) * ld + 1.0;
        const double trace_bits = max_binom + std::log2(static_cast<double>(H_.k) + 1.0) +
                                  static_cast<double>(hi) * ld + std::log2(static_cast<double>(hi) + 1.0) + 2.0;
        if (trace_bits < 61.0)
            subgraph_terms<std::int64_t, std::int64_t>(H_, n, lo, hi, signed_weights, p64_, acc, also);
        else if (mat_bits < 61.0 && trace_bits < 125.0)
            subgraph_terms<std::int64_t, i128>(H_, n, lo, hi, signed_weights, p64_, acc, also);
        else if (trace_bits < 125.0)
            subgraph_terms<i128, i128>(H_, n, lo, hi, signed_weights, p128_, acc, also);
        else
            subgraph_terms<BigInt, BigInt>(H_, n, lo, hi, signed_weights, pbig_, acc, also);
    }

    const SignedDigraph& g_;
    std::size_t L_;
    bool want_signed_;
    bool want_unsigned_;
    Accumulator signed_acc_;
    Accumulator unsigned_acc_;
    std::vector<std::int32_t> local_;
    LocalGraph H_;
    std::vector<std::int64_t> p64_;
    std::vector<i128> p128_;
    std::vector<BigInt> pbig_;
    std::uint64_t visited_ = 0;
};

TruncatedSeries integrate(const TruncatedSeries& aggregate) {
    TruncatedSeries out(aggregate.max_degree());
    for (std::size_t l = 1; l <= aggregate.max_degree(); ++l) {
        if (aggregate[l] % l != 0)
            throw InvariantViolation("cycle aggregate at degree " + std::to_string(l) + " is not divisible by " +
                                     std::to_string(l));
        out[l] = aggregate[l] / l;
    }
    return out;
}

}  // namespace

CycleAggregates cycle_aggregates(const SignedDigraph& g, std::size_t max_length, bool want_signed,
                                 bool want_unsigned, const EngineOptions& options) {
    if (max_length == 0) throw UsageError("maximum cycle length must be at least 1");
    CycleAggregates out{TruncatedSeries(max_length), TruncatedSeries(max_length), 0};
    const std::size_t V = g.vertex_count();
    const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(std::max<std::size_t>(V, 1))));

    std::vector<Worker> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(g, max_length, want_signed, want_unsigned);

    std::atomic<std::size_t> next_root{0};
    auto run = [&](Worker& worker) {
        ConnectedSubgraphEnumerator e(g, max_length);
        const SubgraphVisitor visitor = [&worker](const SubgraphVisit& v) { worker.visit(v); };
        for (std::size_t r = next_root++; r < V; r = next_root++) e.run(static_cast<VertexId>(r), visitor);
    };

    if (workers == 1) {
        run(pool.front());
    } else {
        std::vector<std::thread> threads;
        std::exception_ptr failure;
        std::mutex failure_mutex;
        for (unsigned w = 0; w < workers; ++w)
            threads.emplace_back([&, w] {
                try {
                    run(pool[w]);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next_root = V;
                }
            });
        for (auto& t : threads) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    for (const Worker& w : pool) {
        out.subgraphs_visited += w.visited();
        for (std::size_t l = 1; l <= max_length; ++l) {
            if (want_signed) out.signed_series[l] += w.signed_acc().total(l);
            if (want_unsigned) out.unsigned_series[l] += w.unsigned_acc().total(l);
        }
    }
    return out;
}

TruncatedSeries cycle_polynomial(const SignedDigraph& g, std::size_t max_length, Weighting weighting,
                                 const EngineOptions& options) {
    const bool want_signed = weighting == Weighting::Signed;
    const auto agg = cycle_aggregates(g, max_length, want_signed, !want_signed, options);
    return integrate(want_signed ? agg.signed_series : agg.unsigned_series);
}

CycleCensus cycle_census(const SignedDigraph& g, std::size_t max_length, const EngineOptions& options) {
    const auto agg = cycle_aggregates(g, max_length, true, true, options);
    const TruncatedSeries s = integrate(agg.signed_series);
    const TruncatedSeries u = integrate(agg.unsigned_series);
    CycleCensus census(max_length);
    for (std::size_t l = 1; l <= max_length; ++l) {
        const BigInt plus = u[l] + s[l];
        const BigInt minus = u[l] - s[l];
        if (plus % 2 != 0 || minus < 0 || plus < 0)
            throw InvariantViolation("signed and unsigned cycle counts disagree at length " + std::to_string(l));
        census.at(l).positive = plus / 2;
        census.at(l).negative = minus / 2;
    }
    return census;
}

LowOrderRatios exact_low_order_ratios(const SignedDigraph& g) {
    LowOrderRatios out;
    for (auto& t : out.signed_traces) t = 0;
    for (auto& t : out.unsigned_traces) t = 0;
    std::int64_t s1 = 0, u1 = 0, s2 = 0, u2 = 0;
    for (const Edge& e : g.edges()) {
        if (e.source == e.target) {
            s1 += sign_value(e.sign);
            ++u1;
            continue;
        }
        if (auto back = g.edge_sign(e.target, e.source)) {
            s2 += sign_value(e.sign * *back);
            ++u2;
        }
    }
    // Tr A~^3: closed walks u -> v -> w -> u over distinct vertices.
    i128 s3 = 0, u3 = 0;
    const std::size_t V = g.vertex_count();
    std::vector<std::int8_t> into(V, 0);
    for (VertexId u = 0; u < V; ++u) {
        for (const Arc& a : g.in_arcs(u))
            if (a.vertex != u) into[a.vertex] = static_cast<std::int8_t>(sign_value(a.sign));
        for (const Arc& uv : g.out_arcs(u)) {
            if (uv.vertex == u) continue;
            for (const Arc& vw : g.out_arcs(uv.vertex)) {
                if (vw.vertex == uv.vertex || vw.vertex == u || into[vw.vertex] == 0) continue;
                s3 += sign_value(uv.sign) * sign_value(vw.sign) * into[vw.vertex];
                ++u3;
            }
        }
        for (const Arc& a : g.in_arcs(u)) into[a.vertex] = 0;
    }
    out.signed_traces = {BigInt(s1), BigInt(s2), to_big(s3)};
    out.unsigned_traces = {BigInt(u1), BigInt(u2), to_big(u3)};
    for (std::size_t l = 1; l <= 3; ++l) {
        const BigInt& s = out.signed_traces[l - 1];
        const BigInt& u = out.unsigned_traces[l - 1];
        const BigInt denom = 2 * l;
        if ((u + s) % denom != 0 || (u - s) % denom != 0)
            throw InvariantViolation("trace of order " + std::to_string(l) + " is inconsistent with cycle counts");
        out.table.rows.push_back(balance_row(l, (u + s) / denom, (u - s) / denom));
    }
    return out;
}

}  // namespace cyclebal
