#pragma once

#include <filesystem>
#include <iosfwd>

#include "cyclebal/signed_digraph.hpp"

namespace cyclebal {

/// What to do when the same (source, target) pair appears twice with
/// different signs. Identical repeats always collapse silently.
enum class DuplicatePolicy { Reject, LastWins };

struct LoadOptions {
    DuplicatePolicy duplicates = DuplicatePolicy::Reject;
    /// Treat every line as an undirected edge; the result is symmetrized.
    bool undirected = false;
};

/// Reads whitespace-separated "src dst sign" lines. Blank lines and lines
/// starting with '#' or '%' are skipped; columns after the sign are ignored
/// (SNAP and KONECT layouts both load). Sign tokens: 1, +1, +, -1, -, and the
/// unicode minus forms. Vertex tokens may be any non-space strings and are
/// remapped densely: numerically when every token is an integer, otherwise
/// lexicographically, so the remap is independent of line order.
SignedDigraph load_edge_list(std::istream& in, const LoadOptions& options = {});
SignedDigraph load_edge_list_file(const std::filesystem::path& path, const LoadOptions& options = {});

/// Writes the graph back in the same layout using the vertex labels. For
/// undirected graphs each pair is written once.
void write_edge_list(std::ostream& out, const SignedDigraph& g);

}  // namespace cyclebal
