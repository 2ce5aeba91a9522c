#include "cyclebal/cycle_oracle.hpp"

#include "cyclebal/errors.hpp"

namespace cyclebal {
namespace {

class CycleSearch {
public:
    CycleSearch(const SignedDigraph& g, std::size_t max_length, const CycleVisitor& visitor)
        : g_(g), L_(max_length), visitor_(visitor), on_path_(g.vertex_count(), 0) {}

    std::uint64_t run() {
        for (VertexId s = 0; s < g_.vertex_count(); ++s) {
            start_ = s;
            path_.assign(1, s);
            on_path_[s] = 1;
            walk(s, Sign::Positive);
            on_path_[s] = 0;
        }
        return found_;
    }

private:
    void walk(VertexId v, Sign sign) {
        for (const Arc& a : g_.out_arcs(v)) {
            if (a.vertex == start_) {
                ++found_;
                visitor_(path_.size(), sign * a.sign, path_);
            } else if (a.vertex > start_ && !on_path_[a.vertex] && path_.size() < L_) {
                on_path_[a.vertex] = 1;
                path_.push_back(a.vertex);
                walk(a.vertex, sign * a.sign);
                path_.pop_back();
                on_path_[a.vertex] = 0;
            }
        }
    }

    const SignedDigraph& g_;
    std::size_t L_;
    const CycleVisitor& visitor_;
    std::vector<std::uint8_t> on_path_;
    std::vector<VertexId> path_;
    VertexId start_ = 0;
    std::uint64_t found_ = 0;
};

}  // namespace

std::uint64_t enumerate_simple_cycles(const SignedDigraph& g, std::size_t max_length, const CycleVisitor& visitor) {
    if (max_length == 0) throw UsageError("maximum cycle length must be at least 1");
    return CycleSearch(g, max_length, visitor).run();
}

CycleCensus brute_force_census(const SignedDigraph& g, std::size_t max_length) {
    CycleCensus census(max_length);
    enumerate_simple_cycles(g, max_length, [&](std::size_t len, Sign s, std::span<const VertexId>) {
        auto& c = census.at(len);
        if (s == Sign::Positive)
            c.positive += 1;
        else
            c.negative += 1;
    });
    return census;
}

std::vector<BigInt> complete_graph_census(std::size_t n, bool with_loops) {
    if (n < 2) throw UsageError("complete graph census needs N >= 2");
    std::vector<BigInt> counts(n + 1, 0);
    if (with_loops) counts[1] = n;
    BigInt falling = n;  // N!/(N-l)!
    for (std::size_t l = 2; l <= n; ++l) {
        falling *= n - l + 1;
        counts[l] = falling / l;
    }
    return counts;
}

BigInt complete_graph_cycle_total(std::size_t n, bool with_loops) {
    BigInt total = 0;
    for (const auto& c : complete_graph_census(n, with_loops)) total += c;
    return total;
}

}  // namespace cyclebal
