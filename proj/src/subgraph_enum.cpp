#include "cyclebal/subgraph_enum.hpp"

#include "cyclebal/errors.hpp"

namespace cyclebal {

ConnectedSubgraphEnumerator::ConnectedSubgraphEnumerator(const SignedDigraph& g, std::size_t max_size)
    : g_(g), max_size_(max_size), touch_(g.vertex_count(), 0), in_set_(g.vertex_count(), 0),
      ext_levels_(max_size + 1) {
    if (max_size == 0) throw UsageError("subgraph enumeration needs max_size >= 1");
    members_.reserve(max_size);
}

std::uint64_t ConnectedSubgraphEnumerator::run(VertexId root, const SubgraphVisitor& visitor) {
    if (root >= g_.vertex_count()) throw UsageError("root vertex is not in the graph");
    visitor_ = &visitor;
    root_ = root;
    visits_ = 0;
    add(root);
    auto& ext = ext_levels_[1];
    ext.clear();
    for (VertexId u : g_.neighbours(root))
        if (u > root) ext.push_back(u);
    extend(1);
    remove(root);
    return visits_;
}

void ConnectedSubgraphEnumerator::extend(std::size_t depth) {
    (*visitor_)(SubgraphVisit{members_, neighbour_count_});
    ++visits_;
    if (depth == max_size_) return;
    const auto& ext = ext_levels_[depth];
    auto& next = ext_levels_[depth + 1];
    for (std::size_t i = 0; i < ext.size(); ++i) {
        const VertexId w = ext[i];
        next.assign(ext.begin() + static_cast<std::ptrdiff_t>(i) + 1, ext.end());
        // Exclusive neighbours of w: above the root, not in H, not yet adjacent to H.
        for (VertexId u : g_.neighbours(w))
            if (u > root_ && !in_set_[u] && touch_[u] == 0) next.push_back(u);
        add(w);
        extend(depth + 1);
        remove(w);
    }
}

void ConnectedSubgraphEnumerator::add(VertexId w) {
    members_.push_back(w);
    in_set_[w] = 1;
    if (touch_[w] > 0) --neighbour_count_;
    for (VertexId u : g_.neighbours(w))
        if (touch_[u]++ == 0 && !in_set_[u]) ++neighbour_count_;
}

void ConnectedSubgraphEnumerator::remove(VertexId w) {
    for (VertexId u : g_.neighbours(w))
        if (--touch_[u] == 0 && !in_set_[u]) --neighbour_count_;
    in_set_[w] = 0;
    if (touch_[w] > 0) ++neighbour_count_;
    members_.pop_back();
}

std::uint64_t enumerate_connected_induced_subgraphs(const SignedDigraph& g, std::size_t max_size,
                                                    const SubgraphVisitor& visitor) {
    ConnectedSubgraphEnumerator e(g, max_size);
    std::uint64_t total = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) total += e.run(v, visitor);
    return total;
}

}  // namespace cyclebal
