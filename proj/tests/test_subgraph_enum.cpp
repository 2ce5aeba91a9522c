#include <doctest.h>

#include <map>
#include <set>

#include "cyclebal/errors.hpp"
#include "cyclebal/subgraph_enum.hpp"
#include "support.hpp"

using namespace cyclebal;

namespace {

// Every weakly connected vertex subset of size <= k, with |N(H)|, by checking
// all 2^n subsets.
std::map<std::vector<VertexId>, std::size_t> all_connected_subsets(const SignedDigraph& g, std::size_t k) {
    std::map<std::vector<VertexId>, std::size_t> out;
    const std::size_t n = g.vertex_count();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) > k) continue;
        std::vector<VertexId> ids;
        for (VertexId v = 0; v < n; ++v)
            if (mask >> v & 1) ids.push_back(v);
        const VertexSet vs(ids);
        if (is_weakly_connected(g, vs)) out[ids] = neighbourhood(g, vs).size();
    }
    return out;
}

}  // namespace

TEST_CASE("every connected induced subgraph is visited exactly once") {
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        testing::RandomGraphSpec spec;
        spec.vertices = 3 + rng.below(8);
        spec.density = 0.1 + 0.4 * rng.uniform();
        spec.undirected = trial % 2 == 0;
        spec.loops = trial % 3 == 0;
        const SignedDigraph g = testing::random_graph(spec, rng);
        const std::size_t k = 1 + rng.below(spec.vertices);
        const auto expected = all_connected_subsets(g, k);

        std::map<std::vector<VertexId>, std::size_t> seen;
        std::size_t duplicates = 0;
        const auto visits = enumerate_connected_induced_subgraphs(g, k, [&](const SubgraphVisit& h) {
            std::vector<VertexId> ids(h.vertices.begin(), h.vertices.end());
            CHECK(ids.front() == *std::min_element(ids.begin(), ids.end()));
            std::sort(ids.begin(), ids.end());
            if (!seen.emplace(ids, h.neighbour_count).second) ++duplicates;
        });
        CHECK(duplicates == 0);
        CHECK(visits == expected.size());
        CHECK(seen == expected);
    }
}

TEST_CASE("per-root runs partition the enumeration") {
    Rng rng(11);
    const SignedDigraph g = testing::random_graph({9, 0.35, 0.5, false, false}, rng);
    ConnectedSubgraphEnumerator e(g, 4);
    std::uint64_t total = 0;
    for (VertexId r = 0; r < g.vertex_count(); ++r)
        total += e.run(r, [&](const SubgraphVisit& h) { CHECK(h.vertices.front() == r); });
    CHECK(total == enumerate_connected_induced_subgraphs(g, 4, [](const SubgraphVisit&) {}));
}

TEST_CASE("enumeration of a path and argument checks") {
    // 0 - 1 - 2 - 3: connected subsets are the 10 intervals
    const SignedDigraph path(4, {{0, 1, Sign::Positive}, {1, 2, Sign::Positive}, {2, 3, Sign::Positive}});
    CHECK(enumerate_connected_induced_subgraphs(path, 4, [](const SubgraphVisit&) {}) == 10);
    CHECK(enumerate_connected_induced_subgraphs(path, 2, [](const SubgraphVisit&) {}) == 7);
    CHECK_THROWS_AS(ConnectedSubgraphEnumerator(path, 0), UsageError);
    ConnectedSubgraphEnumerator e(path, 2);
    CHECK_THROWS_AS(e.run(4, [](const SubgraphVisit&) {}), UsageError);
}
