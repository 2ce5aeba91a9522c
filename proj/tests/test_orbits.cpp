#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "cyclebal/cycle_engine.hpp"
#include "cyclebal/errors.hpp"
#include "cyclebal/orbits.hpp"
#include "support.hpp"

using namespace cyclebal;

namespace {

using Dense = std::vector<std::vector<BigInt>>;

Dense multiply(const Dense& a, const Dense& b) {
    const std::size_t n = a.size();
    Dense c(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

// Traces of M^1..M^L by repeated multiplication.
std::vector<BigInt> power_traces(const Dense& m, std::size_t max_power) {
    std::vector<BigInt> out(max_power + 1, 0);
    out[0] = static_cast<long>(m.size());
    Dense p = m;
    for (std::size_t l = 1; l <= max_power; ++l) {
        for (std::size_t i = 0; i < m.size(); ++i) out[l] += p[i][i];
        if (l < max_power) p = multiply(p, m);
    }
    return out;
}

// Edge-to-edge matrix built from the edge list alone.
Dense hashimoto_dense(const SignedDigraph& g, bool absolute) {
    const auto e = g.edges();
    Dense t(e.size(), std::vector<BigInt>(e.size(), 0));
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[i].target == e[j].source && e[j].target != e[i].source)
                t[i][j] = 1;
    if (!absolute)
        for (std::size_t i = 0; i < e.size(); ++i)
            for (auto& x : t[i]) x *= sign_value(e[i].sign);
    return t;
}

Dense adjacency(const SignedDigraph& g, bool absolute) {
    Dense a(g.vertex_count(), std::vector<BigInt>(g.vertex_count(), 0));
    for (const auto& e : g.edges()) a[e.source][e.target] = absolute ? 1 : sign_value(e.sign);
    return a;
}

}  // namespace

TEST_CASE("moebius function") {
    const int expected[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
    for (std::uint64_t n = 1; n <= 12; ++n) CHECK(mobius(n) == expected[n - 1]);
    CHECK(mobius(30) == -1);
    CHECK_THROWS_AS(mobius(0), UsageError);
}

TEST_CASE("hashimoto structure") {
    // undirected path a - b - c: 4 oriented edges, only straight continuations
    const SignedDigraph p(3, {{0, 1, Sign::Positive}, {1, 0, Sign::Positive}, {1, 2, Sign::Negative}, {2, 1, Sign::Negative}},
                          Origin::Undirected);
    const HashimotoMatrix t = hashimoto_matrix(p);
    CHECK(t.dimension() == 4);
    CHECK(t.nonzero_count() == 2);
    CHECK(t.entry(0, 2) == 1);  // (0,1) then (1,2), row sign of (0,1)
    CHECK(t.entry(0, 1) == 0);  // reversal
    CHECK(t.entry(3, 1) == -1);
    CHECK(t.entry(3, 1, true) == 1);
    CHECK_THROWS_AS(hashimoto_matrix(SignedDigraph(1, {{0, 0, Sign::Positive}})), DataError);
}

TEST_CASE("hashimoto traces match dense powers") {
    Rng rng(404);
    for (int trial = 0; trial < 25; ++trial) {
        const SignedDigraph g = testing::random_graph({3 + rng.below(6), 0.45, 0.5, trial % 2 == 0, false}, rng);
        const std::size_t L = 8;
        const HashimotoMatrix t = hashimoto_matrix(g);
        for (std::size_t cap : {std::size_t{0}, std::size_t{4096}}) {
            const HashimotoTraces tr = hashimoto_traces(t, L, {cap, 2});
            CHECK(tr.signed_traces == power_traces(hashimoto_dense(g, false), L));
            CHECK(tr.abs_traces == power_traces(hashimoto_dense(g, true), L));
        }
    }
}

TEST_CASE("primitive orbits equal simple cycles for lengths 3 to 5") {
    Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const SignedDigraph g = testing::random_graph({3 + rng.below(8), 0.4, 0.5, trial % 2 == 0, false}, rng);
        const OrbitCensus o = primitive_orbit_counts(g, 5);
        const CycleCensus c = testing::subset_dp_census(g, 5);
        for (std::size_t l = 3; l <= 5; ++l) CHECK(o.at(l) == c.at(l));
    }
    CHECK_THROWS_AS(primitive_orbit_counts(complete_graph(3), 2), UsageError);
}

TEST_CASE("powers of a negative orbit are positive") {
    // One triangle with a single negative edge: two negative orbits of
    // length 3 and no primitive orbit of length 6, although Tr T^6 = 6.
    const SignedDigraph tri = symmetrize(SignedDigraph(3, {{0, 1, Sign::Positive}, {1, 2, Sign::Positive}, {0, 2, Sign::Negative}}));
    const OrbitCensus o = primitive_orbit_counts(tri, 9);
    CHECK(o.at(3) == SignedCount{0, 2});
    CHECK(o.at(6) == SignedCount{0, 0});
    CHECK(o.at(9) == SignedCount{0, 0});
    const auto tr = hashimoto_traces(hashimoto_matrix(tri), 9);
    CHECK(tr.signed_traces[6] == 6);
    CHECK(tr.signed_traces[9] == -6);
}

TEST_CASE("traces round trip through orbit counts") {
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const SignedDigraph g = testing::random_graph({4 + rng.below(6), 0.4, 0.4, trial % 2 == 0, false}, rng);
        const HashimotoTraces tr = hashimoto_traces(hashimoto_matrix(g), 10);
        const OrbitCensus o = orbits_from_traces(tr);
        const auto s = traces_from_orbits(o, true);
        const auto a = traces_from_orbits(o, false);
        for (std::size_t l = 1; l <= 10; ++l) {
            CHECK(s[l] == tr.signed_traces[l]);
            CHECK(a[l] == tr.abs_traces[l]);
        }
    }
}

TEST_CASE("Stark-Terras walks equal Hashimoto traces") {
    Rng rng(8);
    for (int trial = 0; trial < 25; ++trial) {
        const SignedDigraph g = testing::random_graph({3 + rng.below(8), 0.4, rng.uniform(), true, false}, rng);
        const OrbitWalks w = stark_terras_orbit_walks(g, 10);
        const auto signed_t = power_traces(hashimoto_dense(g, false), 10);
        const auto abs_t = power_traces(hashimoto_dense(g, true), 10);
        for (std::size_t l = 1; l <= 10; ++l) {
            CHECK(w.positive[l] - w.negative[l] == signed_t[l]);
            CHECK(w.positive[l] + w.negative[l] == abs_t[l]);
        }
    }
    CHECK_THROWS_AS(stark_terras_orbit_walks(SignedDigraph(2, {{0, 1, Sign::Positive}}), 4), DataError);
}

TEST_CASE("walk ratios match dense adjacency powers") {
    Rng rng(12);
    for (int trial = 0; trial < 15; ++trial) {
        const SignedDigraph g = testing::random_graph({2 + rng.below(8), 0.4, 0.4, trial % 2 == 0, true}, rng);
        const BalanceTable t = walk_ratios(g, 7);
        const auto s = power_traces(adjacency(g, false), 7);
        const auto a = power_traces(adjacency(g, true), 7);
        for (std::size_t l = 1; l <= 7; ++l) {
            const BalanceRow& row = t.rows[l - 1];
            CHECK(row.n_pos * 2 == a[l] + s[l]);
            CHECK(row.n_neg * 2 == a[l] - s[l]);
        }
    }
}

TEST_CASE("weighted degree of balance against an eigendecomposition") {
    Rng rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const SignedDigraph g = testing::random_graph({2 + rng.below(10), 0.5, 0.5, true, false}, rng);
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.vertex_count(), g.vertex_count());
        Eigen::MatrixXd b = a;
        for (const auto& e : g.edges()) {
            a(e.source, e.target) = sign_value(e.sign);
            b(e.source, e.target) = 1;
        }
        const double ta = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a).eigenvalues().array().exp().sum();
        const double tb = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(b).eigenvalues().array().exp().sum();
        const DegreeOfBalance d = weighted_degree_of_balance(g);
        CHECK(d.k == doctest::Approx(ta / tb).epsilon(1e-10));
        CHECK(d.u == doctest::Approx((1 - ta / tb) / (1 + ta / tb)).epsilon(1e-10));
    }
    CHECK_THROWS_AS(weighted_degree_of_balance(complete_graph(5), 4), UsageError);
}
