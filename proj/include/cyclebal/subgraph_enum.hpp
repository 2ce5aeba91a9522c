#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cyclebal/signed_digraph.hpp"

namespace cyclebal {

/// One weakly connected induced subgraph H, as seen by the visitor.
///
/// `vertices` is in insertion order (the first entry is the smallest id) and
/// only valid for the duration of the callback.
struct SubgraphVisit {
    std::span<const VertexId> vertices;
    /// |N(H)|: vertices outside H joined to H by an edge in either direction.
    std::size_t neighbour_count = 0;
};

using SubgraphVisitor = std::function<void(const SubgraphVisit&)>;

/// Visits every weakly connected induced subgraph with 1 <= |H| <= max_size
/// exactly once and returns the number of visits.
///
/// Extension-set enumeration: each H is generated from its smallest vertex,
/// growing only through vertices larger than that root which are not already
/// adjacent to the current set, so every connected set has exactly one
/// generating path. The order is deterministic.
std::uint64_t enumerate_connected_induced_subgraphs(const SignedDigraph& g, std::size_t max_size,
                                                    const SubgraphVisitor& visitor);

/// Reusable enumerator for the subgraphs generated from one root at a time
/// (those whose smallest vertex is the root). The union over all roots is the
/// full enumeration; the engine hands roots to threads this way. Scratch
/// space is sized to the graph once and restored after every run.
class ConnectedSubgraphEnumerator {
public:
    ConnectedSubgraphEnumerator(const SignedDigraph& g, std::size_t max_size);

    std::uint64_t run(VertexId root, const SubgraphVisitor& visitor);

private:
    void extend(std::size_t depth);
    void add(VertexId w);
    void remove(VertexId w);

    const SignedDigraph& g_;
    std::size_t max_size_;
    const SubgraphVisitor* visitor_ = nullptr;
    std::vector<std::uint32_t> touch_;  // members adjacent to each vertex
    std::vector<std::uint8_t> in_set_;
    std::vector<std::vector<VertexId>> ext_levels_;
    std::vector<VertexId> members_;
    std::size_t neighbour_count_ = 0;
    VertexId root_ = 0;
    std::uint64_t visits_ = 0;
};

}  // namespace cyclebal
