#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cyclebal/census.hpp"
#include "cyclebal/signed_digraph.hpp"

namespace cyclebal {

/// Callback for one simple cycle: its length, sign and vertex sequence
/// starting at its smallest vertex and following the edge orientation.
using CycleVisitor = std::function<void(std::size_t length, Sign sign, std::span<const VertexId> cycle)>;

/// Brute-force depth-first enumeration of every directed simple cycle of
/// length <= L. Each cycle is reported once, from its minimum vertex, with
/// orientation kept (u->v->u and the two orientations of a triangle are
/// distinct cycles; a self-loop is a cycle of length 1). Returns the count.
std::uint64_t enumerate_simple_cycles(const SignedDigraph& g, std::size_t max_length, const CycleVisitor& visitor);

/// Tally of enumerate_simple_cycles by length and sign.
CycleCensus brute_force_census(const SignedDigraph& g, std::size_t max_length);

/// Closed form for K_N: entry l (index 0 unused, 1..N) is N!/((N-l)! l) for
/// l >= 2. Entry 1 is N when every vertex carries a loop, else 0.
std::vector<BigInt> complete_graph_census(std::size_t n, bool with_loops = false);

/// Sum of complete_graph_census over all lengths.
BigInt complete_graph_cycle_total(std::size_t n, bool with_loops = false);

}  // namespace cyclebal
