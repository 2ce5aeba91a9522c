#include <doctest.h>

#include <sstream>

#include "cyclebal/edge_list_io.hpp"
#include "cyclebal/errors.hpp"
#include "cyclebal/signed_digraph.hpp"

using namespace cyclebal;

namespace {

SignedDigraph parse(const std::string& text, LoadOptions opts = {}) {
    std::istringstream in(text);
    return load_edge_list(in, opts);
}

}  // namespace

TEST_CASE("edges are sorted and adjacency views agree") {
    const SignedDigraph g(4, {{2, 0, Sign::Negative}, {0, 1, Sign::Positive}, {1, 2, Sign::Positive}, {3, 3, Sign::Negative}});
    REQUIRE(g.edge_count() == 4);
    CHECK(g.edges()[0] == Edge{0, 1, Sign::Positive});
    CHECK(g.out_arcs(0).size() == 1);
    CHECK(g.in_arcs(0).size() == 1);
    CHECK(g.in_arcs(0)[0].vertex == 2);
    CHECK(g.edge_sign(2, 0) == Sign::Negative);
    CHECK_FALSE(g.edge_sign(0, 2).has_value());
    CHECK(g.negative_edge_count() == 2);
    CHECK(g.self_loop_count() == 1);
    CHECK(g.neighbours(0).size() == 2);
    CHECK(g.neighbours(3).empty());
}

TEST_CASE("constructor rejects malformed input") {
    CHECK_THROWS_AS(SignedDigraph(2, {{0, 2, Sign::Positive}}), DataError);
    CHECK_THROWS_AS(SignedDigraph(2, {{0, 1, Sign::Positive}, {0, 1, Sign::Negative}}), DataError);
    CHECK_THROWS_AS(SignedDigraph(2, {{0, 1, Sign::Positive}}, Origin::Undirected), DataError);
    CHECK_THROWS_AS(SignedDigraph(2, {}, Origin::Directed, {"a"}), DataError);
}

TEST_CASE("symmetrize adds reverses and detects sign conflicts") {
    const SignedDigraph g(3, {{0, 1, Sign::Negative}, {1, 2, Sign::Positive}, {2, 1, Sign::Positive}});
    const SignedDigraph s = symmetrize(g);
    CHECK(s.edge_count() == 4);
    CHECK(s.edge_sign(1, 0) == Sign::Negative);
    CHECK(s.origin() == Origin::Undirected);
    CHECK_THROWS_AS(symmetrize(SignedDigraph(2, {{0, 1, Sign::Negative}, {1, 0, Sign::Positive}})), DataError);
}

TEST_CASE("induced subgraph, neighbourhood and connectivity") {
    // 0 -> 1 -> 2, 3 -> 2, 4 isolated
    const SignedDigraph g(5, {{0, 1, Sign::Positive}, {1, 2, Sign::Negative}, {3, 2, Sign::Positive}});
    const VertexSet h({1, 2});
    const auto sub = induced_subgraph(g, h);
    CHECK(sub.graph.vertex_count() == 2);
    CHECK(sub.graph.edge_count() == 1);
    CHECK(sub.parent_ids == std::vector<VertexId>{1, 2});
    CHECK(neighbourhood(g, h) == VertexSet({0, 3}));
    CHECK(is_weakly_connected(g, VertexSet({0, 1, 2, 3})));
    CHECK_FALSE(is_weakly_connected(g, VertexSet({0, 3})));
    CHECK_FALSE(is_weakly_connected(g, VertexSet{}));
    CHECK(negative_edge_fraction(g) == doctest::Approx(1.0 / 3.0));
    CHECK_THROWS_AS(negative_edge_fraction(SignedDigraph(2, {})), DataError);
}

TEST_CASE("without_self_loops and complete graphs") {
    const SignedDigraph k = complete_graph(4, true);
    CHECK(k.edge_count() == 16);
    CHECK(without_self_loops(k).edge_count() == 12);
    CHECK(complete_graph(4).edge_count() == 12);
}

TEST_CASE("edge list parsing") {
    SUBCASE("comments, sign tokens and extra columns") {
        const auto g = parse("# comment\n% konect header\n\n1 2 +1 123\n2 3 -\n3 1 -1\n10 1 +\n");
        CHECK(g.vertex_count() == 4);
        CHECK(g.labels() == std::vector<std::string>{"1", "2", "3", "10"});
        CHECK(g.negative_edge_count() == 2);
        CHECK(g.edge_sign(3, 0) == Sign::Positive);
    }
    SUBCASE("non-numeric labels are ordered lexicographically") {
        const auto g = parse("b a 1\nc b -1\n");
        CHECK(g.labels() == std::vector<std::string>{"a", "b", "c"});
        CHECK(g.edge_sign(1, 0) == Sign::Positive);
    }
    SUBCASE("undirected input is symmetrized") {
        LoadOptions o;
        o.undirected = true;
        const auto g = parse("a b 1\nb c -1\nc c 1\n", o);
        CHECK(g.origin() == Origin::Undirected);
        CHECK(g.edge_count() == 5);
        CHECK(g.edge_sign(2, 1) == Sign::Negative);
    }
    SUBCASE("identical repeats collapse") { CHECK(parse("1 2 1\n1 2 +1\n").edge_count() == 1); }
    SUBCASE("conflicting repeats") {
        CHECK_THROWS_AS(parse("1 2 1\n1 2 -1\n"), DataError);
        LoadOptions o;
        o.duplicates = DuplicatePolicy::LastWins;
        CHECK(parse("1 2 1\n1 2 -1\n", o).edge_sign(0, 1) == Sign::Negative);
    }
    SUBCASE("malformed lines report their line number") {
        try {
            parse("1 2 1\n\n1 3 x\n");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 3);
        }
        CHECK_THROWS_AS(parse("1 2\n"), ParseError);
    }
}

TEST_CASE("write_edge_list round trips") {
    LoadOptions o;
    o.undirected = true;
    const auto g = parse("x y -1\ny z 1\n", o);
    std::ostringstream out;
    write_edge_list(out, g);
    const auto back = parse(out.str(), o);
    CHECK(back.labels() == g.labels());
    CHECK(std::equal(back.edges().begin(), back.edges().end(), g.edges().begin(), g.edges().end()));

    const auto d = parse("5 7 1\n7 5 -1\n");
    std::ostringstream out2;
    write_edge_list(out2, d);
    const auto back2 = parse(out2.str());
    CHECK(std::equal(back2.edges().begin(), back2.edges().end(), d.edges().begin(), d.edges().end()));
}
