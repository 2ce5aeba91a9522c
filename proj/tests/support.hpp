#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cyclebal/census.hpp"
#include "cyclebal/rng.hpp"
#include "cyclebal/signed_digraph.hpp"

namespace cyclebal::testing {

struct RandomGraphSpec {
    std::size_t vertices = 8;
    double density = 0.3;
    double negative = 0.4;
    bool undirected = false;
    bool loops = false;
};

inline SignedDigraph random_graph(const RandomGraphSpec& spec, Rng& rng) {
    std::vector<Edge> edges;
    const auto n = static_cast<VertexId>(spec.vertices);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = spec.undirected ? u : 0; v < n; ++v) {
            if (u == v && !spec.loops) continue;
            if (rng.uniform() >= spec.density) continue;
            const Sign s = rng.uniform() < spec.negative ? Sign::Negative : Sign::Positive;
            edges.push_back({u, v, s});
            if (spec.undirected && u != v) edges.push_back({v, u, s});
        }
    return SignedDigraph(spec.vertices, std::move(edges), spec.undirected ? Origin::Undirected : Origin::Directed);
}

/// Counts simple cycles by dynamic programming over vertex subsets: for every
/// start s, paths from s through vertices above s, signed, indexed by
/// (visited set, endpoint). Each cycle is closed once, at its smallest vertex.
/// Exponential in the vertex count; meant for n <= 14.
inline CycleCensus subset_dp_census(const SignedDigraph& g, std::size_t max_length) {
    const std::size_t n = g.vertex_count();
    CycleCensus census(max_length);
    std::vector<std::vector<int>> sign(n, std::vector<int>(n, 0));
    for (const auto& e : g.edges()) sign[e.source][e.target] = sign_value(e.sign);
    for (std::size_t v = 0; v < n && max_length >= 1; ++v) {
        if (sign[v][v] > 0) census.at(1).positive += 1;
        if (sign[v][v] < 0) census.at(1).negative += 1;
    }
    for (std::size_t s = 0; s < n; ++s) {
        const std::size_t m = n - s;  // local vertices s..n-1, bit 0 is s
        // ways[mask][end] = {positive paths, negative paths}
        std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> ways(
            std::size_t{1} << m, std::vector<std::pair<std::uint64_t, std::uint64_t>>(m, {0, 0}));
        ways[1][0] = {1, 0};
        for (std::size_t mask = 1; mask < ways.size(); mask += 2) {
            const auto len = static_cast<std::size_t>(__builtin_popcountll(mask));
            for (std::size_t end = 0; end < m; ++end) {
                const auto [pos, neg] = ways[mask][end];
                if (pos == 0 && neg == 0) continue;
                const std::size_t ge = end + s;
                if (end != 0 && len <= max_length && sign[ge][s] != 0) {
                    auto& c = census.at(len);
                    if (sign[ge][s] > 0) {
                        c.positive += pos;
                        c.negative += neg;
                    } else {
                        c.positive += neg;
                        c.negative += pos;
                    }
                }
                if (len == max_length) continue;
                for (std::size_t nxt = 1; nxt < m; ++nxt) {
                    if (mask >> nxt & 1) continue;
                    const int w = sign[ge][nxt + s];
                    if (w == 0) continue;
                    auto& target = ways[mask | (std::size_t{1} << nxt)][nxt];
                    if (w > 0) {
                        target.first += pos;
                        target.second += neg;
                    } else {
                        target.first += neg;
                        target.second += pos;
                    }
                }
            }
        }
    }
    return census;
}

}  // namespace cyclebal::testing
