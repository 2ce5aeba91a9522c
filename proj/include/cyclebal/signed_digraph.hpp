#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cyclebal {

using VertexId = std::uint32_t;

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr int sign_value(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign flip(Sign s) noexcept { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }
constexpr Sign operator*(Sign a, Sign b) noexcept { return a == b ? Sign::Positive : Sign::Negative; }

struct Edge {
    VertexId source = 0;
    VertexId target = 0;
    Sign sign = Sign::Positive;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// One entry of an adjacency list: the vertex at the other end and the sign.
struct Arc {
    VertexId vertex = 0;
    Sign sign = Sign::Positive;
};

/// Whether a graph came from an undirected declaration (every edge has a
/// same-signed reverse) or was taken as directed.
enum class Origin : std::uint8_t { Directed, Undirected };

/// Immutable signed digraph on dense vertex ids [0, vertex_count).
///
/// Edges are stored once per ordered pair, sorted by (source, target). Out-,
/// in- and orientation-erased neighbour lists are precomputed in CSR form so
/// readers never allocate. Self-loops are kept; they are the length-1 cycles.
class SignedDigraph {
public:
    SignedDigraph() = default;

    /// Validates the invariants: ids in range, no repeated (source, target)
    /// pair, and for Origin::Undirected a same-signed reverse for every edge.
    /// Throws DataError on violation. `labels` is either empty or one label
    /// per vertex (the ids used in the source file).
    SignedDigraph(std::size_t vertex_count, std::vector<Edge> edges,
                  Origin origin = Origin::Directed, std::vector<std::string> labels = {});

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    Origin origin() const noexcept { return origin_; }

    std::span<const Arc> out_arcs(VertexId v) const noexcept {
        return {out_arcs_.data() + out_offsets_[v], out_arcs_.data() + out_offsets_[v + 1]};
    }
    std::span<const Arc> in_arcs(VertexId v) const noexcept {
        return {in_arcs_.data() + in_offsets_[v], in_arcs_.data() + in_offsets_[v + 1]};
    }
    /// Distinct vertices joined to v by an edge in either direction, v excluded.
    std::span<const VertexId> neighbours(VertexId v) const noexcept {
        return {neighbours_.data() + nbr_offsets_[v], neighbours_.data() + nbr_offsets_[v + 1]};
    }

    std::optional<Sign> edge_sign(VertexId source, VertexId target) const noexcept;

    std::size_t negative_edge_count() const noexcept { return negative_count_; }
    std::size_t self_loop_count() const noexcept { return loop_count_; }
    bool has_self_loops() const noexcept { return loop_count_ != 0; }

    /// Per-vertex labels from the input file; empty when built in code.
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::string label(VertexId v) const;

    /// Structural equality: same vertex count, edge set, signs and origin.
    friend bool operator==(const SignedDigraph& a, const SignedDigraph& b) {
        return a.vertex_count_ == b.vertex_count_ && a.origin_ == b.origin_ && a.edges_ == b.edges_;
    }

private:
    std::size_t vertex_count_ = 0;
    Origin origin_ = Origin::Directed;
    std::vector<Edge> edges_;
    std::vector<std::size_t> out_offsets_{0};
    std::vector<Arc> out_arcs_;
    std::vector<std::size_t> in_offsets_{0};
    std::vector<Arc> in_arcs_;
    std::vector<std::size_t> nbr_offsets_{0};
    std::vector<VertexId> neighbours_;
    std::size_t negative_count_ = 0;
    std::size_t loop_count_ = 0;
    std::vector<std::string> labels_;
};

/// Sorted set of distinct vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    /// Sorts the ids; throws UsageError if any id repeats.
    explicit VertexSet(std::vector<VertexId> ids);
    VertexSet(std::initializer_list<VertexId> ids) : VertexSet(std::vector<VertexId>(ids)) {}

    static VertexSet all(std::size_t vertex_count);

    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }
    bool contains(VertexId v) const noexcept;
    std::span<const VertexId> ids() const noexcept { return ids_; }
    auto begin() const noexcept { return ids_.begin(); }
    auto end() const noexcept { return ids_.end(); }

    /// Throws UsageError if an id is out of range for `g`.
    void validate_for(const SignedDigraph& g) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<VertexId> ids_;
};

/// Adds the reverse of every edge with the same sign. Throws DataError when
/// (u,v) and (v,u) already exist with different signs.
SignedDigraph symmetrize(const SignedDigraph& g);

/// The same graph with self-loops removed (the A - Diag(A) view).
SignedDigraph without_self_loops(const SignedDigraph& g);

struct InducedSubgraph {
    SignedDigraph graph;
    /// local id -> id in the parent graph
    std::vector<VertexId> parent_ids;
};

InducedSubgraph induced_subgraph(const SignedDigraph& g, const VertexSet& vs);

/// Vertices outside `vs` with at least one edge, in either direction, into `vs`.
VertexSet neighbourhood(const SignedDigraph& g, const VertexSet& vs);

/// Fraction of directed edges that are negative. Throws DataError when the
/// graph has no edges.
double negative_edge_fraction(const SignedDigraph& g);

/// True when the orientation-erased graph induced on `vs` is connected.
/// The empty set counts as disconnected.
bool is_weakly_connected(const SignedDigraph& g, const VertexSet& vs);

/// Complete digraph K_n (both orientations of every pair), all edges
/// positive. With `with_loops` every vertex also carries a positive loop, so
/// the adjacency matrix is all ones.
SignedDigraph complete_graph(std::size_t n, bool with_loops = false);

}  // namespace cyclebal
