#include "cyclebal/orbits.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "cyclebal/errors.hpp"
#include "power_traces.hpp"

namespace cyclebal {

int HashimotoMatrix::entry(std::size_t i, std::size_t j, bool absolute) const {
    const auto row = successors(i);
    if (!std::binary_search(row.begin(), row.end(), static_cast<std::uint32_t>(j))) return 0;
    return absolute ? 1 : sign_value(edges_[i].sign);
}

HashimotoMatrix hashimoto_matrix(const SignedDigraph& g) {
    if (g.has_self_loops()) throw DataError("the Hashimoto matrix needs a loop-free graph; remove self-loops first");
    HashimotoMatrix t;
    t.edges_.assign(g.edges().begin(), g.edges().end());
    // Edges are sorted by source, so the out-edges of v are a contiguous block.
    std::vector<std::size_t> first(g.vertex_count() + 1, 0);
    for (const Edge& e : t.edges_) ++first[e.source + 1];
    for (std::size_t v = 0; v < g.vertex_count(); ++v) first[v + 1] += first[v];
    for (const Edge& e : t.edges_) {
        for (std::size_t j = first[e.target]; j < first[e.target + 1]; ++j)
            if (t.edges_[j].target != e.source) t.succ_.push_back(static_cast<std::uint32_t>(j));
        t.offsets_.push_back(t.succ_.size());
    }
    return t;
}

int mobius(std::uint64_t n) {
    if (n == 0) throw UsageError("mobius(0) is undefined");
    int result = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

HashimotoTraces hashimoto_traces(const HashimotoMatrix& t, std::size_t max_length, const TraceOptions& options) {
    detail::SignedSparse m;
    m.dim = t.dimension();
    for (std::size_t i = 0; i < t.dimension(); ++i) {
        for (auto j : t.successors(i)) {
            m.cols.push_back(j);
            m.signs.push_back(static_cast<std::int8_t>(sign_value(t.edge(i).sign)));
        }
        m.offsets.push_back(m.cols.size());
    }
    auto traces = detail::power_traces(m, max_length, options.dense_cap, options.workers);
    return {std::move(traces.signed_traces), std::move(traces.abs_traces)};
}

BalanceTable OrbitCensus::table() const {
    BalanceTable out;
    for (std::size_t l = 1; l <= counts.size(); ++l) out.rows.push_back(balance_row(l, at(l).positive, at(l).negative));
    return out;
}

OrbitCensus orbits_from_traces(const HashimotoTraces& traces) {
    const std::size_t L = traces.signed_traces.size() - 1;
    std::vector<BigInt> total(L + 1, 0), diff(L + 1, 0);  // N+ + N-, N+ - N-
    auto fail = [](std::size_t l) {
        throw InvariantViolation("primitive orbit count of length " + std::to_string(l) + " is not an integer");
    };
    for (std::size_t l = 1; l <= L; ++l) {
        BigInt a = 0;
        for (std::size_t d = 1; d <= l; ++d)
            if (l % d == 0) a += mobius(l / d) * traces.abs_traces[d];
        if (a % l != 0) fail(l);
        total[l] = a / l;
        // The k-th power of a primitive orbit c has sign s(c)^k, so even
        // powers of negative orbits count as positive in Tr T^l.
        BigInt s = traces.signed_traces[l];
        for (std::size_t k = 2; k <= l; ++k)
            if (l % k == 0) s -= (l / k) * (k % 2 == 1 ? diff[l / k] : total[l / k]);
        if (s % l != 0) fail(l);
        diff[l] = s / l;
    }
    OrbitCensus out;
    out.counts.resize(L);
    for (std::size_t l = 1; l <= L; ++l) {
        const BigInt plus = total[l] + diff[l];
        const BigInt minus = total[l] - diff[l];
        if (plus % 2 != 0 || plus < 0 || minus < 0) fail(l);
        out.counts[l - 1].positive = plus / 2;
        out.counts[l - 1].negative = minus / 2;
    }
    return out;
}

OrbitCensus primitive_orbit_counts(const SignedDigraph& g, std::size_t max_length, const TraceOptions& options) {
    if (max_length < 3) throw UsageError("primitive orbit counts need L >= 3");
    return orbits_from_traces(hashimoto_traces(hashimoto_matrix(g), max_length, options));
}

std::vector<BigInt> traces_from_orbits(const OrbitCensus& orbits, bool signed_counts) {
    const std::size_t L = orbits.max_length();
    std::vector<BigInt> out(L + 1, 0);
    for (std::size_t l = 1; l <= L; ++l) {
        BigInt sum = 0;
        for (std::size_t k = 1; k <= l; ++k) {
            if (l % k != 0) continue;
            const auto& c = orbits.at(l / k);
            // A primitive orbit of length l/k repeated k times has sign s^k.
            BigInt n = c.positive + c.negative;
            if (signed_counts && k % 2 == 1) n = c.positive - c.negative;
            sum += n * (l / k);
        }
        out[l] = sum;
    }
    return out;
}

namespace {

using Dense = std::vector<BigInt>;  // row-major V x V

Dense product(const Dense& x, const std::vector<std::vector<VertexId>>& cols_of_rows, std::size_t V) {
    // x * B where B is a 0/1 matrix given by the column lists of its rows.
    Dense out(V * V, 0);
    for (std::size_t i = 0; i < V; ++i)
        for (std::size_t k = 0; k < V; ++k) {
            const BigInt& v = x[i * V + k];
            if (v == 0) continue;
            for (VertexId j : cols_of_rows[k]) out[i * V + j] += v;
        }
    return out;
}

}  // namespace

OrbitWalks stark_terras_orbit_walks(const SignedDigraph& g, std::size_t max_length) {
    if (g.origin() != Origin::Undirected) throw DataError("the Stark-Terras recursion needs an undirected graph");
    if (g.has_self_loops()) throw DataError("the Stark-Terras recursion needs a loop-free graph");
    const std::size_t V = g.vertex_count();
    std::vector<std::vector<VertexId>> plus(V), minus(V);
    std::vector<BigInt> q(V, 0);  // diagonal of Q = D - I
    for (VertexId v = 0; v < V; ++v) {
        for (const Arc& a : g.out_arcs(v)) (a.sign == Sign::Positive ? plus : minus)[v].push_back(a.vertex);
        q[v] = static_cast<long>(g.out_arcs(v).size()) - 1;
    }
    auto indicator = [&](const std::vector<std::vector<VertexId>>& rows) {
        Dense m(V * V, 0);
        for (std::size_t i = 0; i < V; ++i)
            for (VertexId j : rows[i]) m[i * V + j] = 1;
        return m;
    };
    auto times_q = [&](const Dense& x) {
        Dense out(x);
        for (std::size_t i = 0; i < V; ++i)
            for (std::size_t j = 0; j < V; ++j) out[i * V + j] *= q[j];
        return out;
    };
    auto sub = [&](Dense a, const Dense& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
        return a;
    };
    auto add = [&](Dense a, const Dense& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        return a;
    };

    std::vector<Dense> ap(max_length + 1), am(max_length + 1);
    if (max_length >= 1) {
        ap[1] = indicator(plus);
        am[1] = indicator(minus);
    }
    if (max_length >= 2) {
        ap[2] = add(product(ap[1], plus, V), product(am[1], minus, V));
        for (std::size_t i = 0; i < V; ++i) ap[2][i * V + i] -= q[i] + 1;
        am[2] = add(product(am[1], plus, V), product(ap[1], minus, V));
    }
    for (std::size_t l = 3; l <= max_length; ++l) {
        ap[l] = sub(add(product(ap[l - 1], plus, V), product(am[l - 1], minus, V)), times_q(ap[l - 2]));
        am[l] = sub(add(product(am[l - 1], plus, V), product(ap[l - 1], minus, V)), times_q(am[l - 2]));
    }

    OrbitWalks out;
    out.positive.assign(max_length + 1, 0);
    out.negative.assign(max_length + 1, 0);
    for (std::size_t l = 1; l <= max_length; ++l) {
        BigInt wp = 0, wm = 0;
        for (std::size_t i = 0; i < V; ++i) {
            wp += ap[l][i * V + i];
            wm += am[l][i * V + i];
        }
        // - Tr((Q - I) sum_{j=1}^{floor((l-1)/2)} A_{l-2j})
        for (std::size_t j = 1; 2 * j + 1 <= l; ++j)
            for (std::size_t i = 0; i < V; ++i) {
                wp -= (q[i] - 1) * ap[l - 2 * j][i * V + i];
                wm -= (q[i] - 1) * am[l - 2 * j][i * V + i];
            }
        out.positive[l] = wp;
        out.negative[l] = wm;
    }
    return out;
}

BalanceTable walk_ratios(const SignedDigraph& g, std::size_t max_length, const TraceOptions& options) {
    detail::SignedSparse m;
    m.dim = g.vertex_count();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (const Arc& a : g.out_arcs(v)) {
            m.cols.push_back(a.vertex);
            m.signs.push_back(static_cast<std::int8_t>(sign_value(a.sign)));
        }
        m.offsets.push_back(m.cols.size());
    }
    const auto traces = detail::power_traces(m, max_length, options.dense_cap, options.workers);
    BalanceTable out;
    for (std::size_t l = 1; l <= max_length; ++l) {
        const BigInt& s = traces.signed_traces[l];
        const BigInt& a = traces.abs_traces[l];
        out.rows.push_back(balance_row(l, (a + s) / 2, (a - s) / 2));
    }
    return out;
}

DegreeOfBalance weighted_degree_of_balance(const SignedDigraph& g, std::size_t max_vertices) {
    const std::size_t V = g.vertex_count();
    if (V > max_vertices)
        throw UsageError("graph has " + std::to_string(V) + " vertices, above the dense limit of " +
                         std::to_string(max_vertices));
    if (V == 0) throw DataError("degree of balance of an empty graph");
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(V, V);
    Eigen::MatrixXd abs_a = Eigen::MatrixXd::Zero(V, V);
    for (const Edge& e : g.edges()) {
        a(e.source, e.target) = sign_value(e.sign);
        abs_a(e.source, e.target) = 1.0;
    }
    std::size_t terms = 0;
    auto trace_exp = [&](const Eigen::MatrixXd& m) {
        Eigen::MatrixXd term = Eigen::MatrixXd::Identity(V, V);
        Eigen::MatrixXd sum = term;
        for (std::size_t k = 1; k < 100000; ++k) {
            term = (term * m) / static_cast<double>(k);
            sum += term;
            terms = std::max(terms, k);
            if (term.norm() < 1e-12 * sum.norm()) break;
        }
        return sum.trace();
    };
    DegreeOfBalance out;
    out.k = trace_exp(a) / trace_exp(abs_a);
    out.u = (1.0 - out.k) / (1.0 + out.k);
    out.terms = terms;
    return out;
}

}  // namespace cyclebal
