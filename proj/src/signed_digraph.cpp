#include "cyclebal/signed_digraph.hpp"

#include <algorithm>
#include <numeric>

#include "cyclebal/errors.hpp"

namespace cyclebal {

namespace {

template <class Entry, class Key, class Make>
void build_csr(std::size_t n, const std::vector<Edge>& edges, Key key, Make make,
               std::vector<std::size_t>& offsets, std::vector<Entry>& entries) {
    offsets.assign(n + 1, 0);
    for (const Edge& e : edges) ++offsets[key(e) + 1];
    std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
    entries.resize(edges.size());
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const Edge& e : edges) entries[cursor[key(e)]++] = make(e);
}

}  // namespace

SignedDigraph::SignedDigraph(std::size_t vertex_count, std::vector<Edge> edges, Origin origin,
                             std::vector<std::string> labels)
    : vertex_count_(vertex_count), origin_(origin), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != vertex_count_) {
        throw DataError("label table has " + std::to_string(labels_.size()) + " entries for " +
                        std::to_string(vertex_count_) + " vertices");
    }
    for (const Edge& e : edges_) {
        if (e.source >= vertex_count_ || e.target >= vertex_count_) {
            throw DataError("edge (" + std::to_string(e.source) + "," + std::to_string(e.target) +
                            ") references a vertex outside [0, " + std::to_string(vertex_count_) + ")");
        }
        if (e.sign != Sign::Positive && e.sign != Sign::Negative) {
            throw DataError("edge sign must be +1 or -1");
        }
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return a.source != b.source ? a.source < b.source : a.target < b.target;
    });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i].source == edges_[i - 1].source && edges_[i].target == edges_[i - 1].target) {
            throw DataError("duplicate edge (" + std::to_string(edges_[i].source) + "," +
                            std::to_string(edges_[i].target) + ")");
        }
    }

    // edges_ is sorted by (source, target), so both CSR views come out sorted.
    build_csr(vertex_count_, edges_, [](const Edge& e) { return e.source; },
              [](const Edge& e) { return Arc{e.target, e.sign}; }, out_offsets_, out_arcs_);
    build_csr(vertex_count_, edges_, [](const Edge& e) { return e.target; },
              [](const Edge& e) { return Arc{e.source, e.sign}; }, in_offsets_, in_arcs_);

    nbr_offsets_.assign(vertex_count_ + 1, 0);
    neighbours_.clear();
    std::vector<VertexId> scratch;
    for (VertexId v = 0; v < vertex_count_; ++v) {
        scratch.clear();
        for (const Arc& a : out_arcs(v)) if (a.vertex != v) scratch.push_back(a.vertex);
        for (const Arc& a : in_arcs(v)) if (a.vertex != v) scratch.push_back(a.vertex);
        std::sort(scratch.begin(), scratch.end());
        scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
        neighbours_.insert(neighbours_.end(), scratch.begin(), scratch.end());
        nbr_offsets_[v + 1] = neighbours_.size();
    }

    for (const Edge& e : edges_) {
        if (e.sign == Sign::Negative) ++negative_count_;
        if (e.source == e.target) ++loop_count_;
    }

    if (origin_ == Origin::Undirected) {
        for (const Edge& e : edges_) {
            auto back = edge_sign(e.target, e.source);
            if (!back || *back != e.sign) {
                throw DataError("graph declared undirected but edge (" + std::to_string(e.source) + "," +
                                std::to_string(e.target) + ") has no same-signed reverse");
            }
        }
    }
}

std::optional<Sign> SignedDigraph::edge_sign(VertexId source, VertexId target) const noexcept {
    if (source >= vertex_count_) return std::nullopt;
    auto arcs = out_arcs(source);
    auto it = std::lower_bound(arcs.begin(), arcs.end(), target,
                               [](const Arc& a, VertexId t) { return a.vertex < t; });
    if (it == arcs.end() || it->vertex != target) return std::nullopt;
    return it->sign;
}

std::string SignedDigraph::label(VertexId v) const {
    return labels_.empty() ? std::to_string(v) : labels_.at(v);
}

VertexSet::VertexSet(std::vector<VertexId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end()) {
        throw UsageError("vertex set contains a repeated id");
    }
}

VertexSet VertexSet::all(std::size_t vertex_count) {
    std::vector<VertexId> ids(vertex_count);
    std::iota(ids.begin(), ids.end(), VertexId{0});
    return VertexSet(std::move(ids));
}

bool VertexSet::contains(VertexId v) const noexcept {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::validate_for(const SignedDigraph& g) const {
    if (!ids_.empty() && ids_.back() >= g.vertex_count()) {
        throw UsageError("vertex id " + std::to_string(ids_.back()) + " is not in the graph (" +
                         std::to_string(g.vertex_count()) + " vertices)");
    }
}

SignedDigraph symmetrize(const SignedDigraph& g) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (const Edge& e : g.edges()) {
        if (e.source == e.target) continue;
        auto back = g.edge_sign(e.target, e.source);
        if (!back) {
            edges.push_back({e.target, e.source, e.sign});
        } else if (*back != e.sign) {
            throw DataError("cannot symmetrize: edges (" + g.label(e.source) + "," + g.label(e.target) +
                            ") and its reverse carry different signs");
        }
    }
    return SignedDigraph(g.vertex_count(), std::move(edges), Origin::Undirected, g.labels());
}

SignedDigraph without_self_loops(const SignedDigraph& g) {
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const Edge& e : g.edges()) if (e.source != e.target) edges.push_back(e);
    return SignedDigraph(g.vertex_count(), std::move(edges), g.origin(), g.labels());
}

InducedSubgraph induced_subgraph(const SignedDigraph& g, const VertexSet& vs) {
    vs.validate_for(g);
    const auto ids = vs.ids();
    auto local = [&](VertexId parent) -> std::optional<VertexId> {
        auto it = std::lower_bound(ids.begin(), ids.end(), parent);
        if (it == ids.end() || *it != parent) return std::nullopt;
        return static_cast<VertexId>(it - ids.begin());
    };
    std::vector<Edge> edges;
    for (VertexId i = 0; i < ids.size(); ++i) {
        for (const Arc& a : g.out_arcs(ids[i])) {
            if (auto j = local(a.vertex)) edges.push_back({i, *j, a.sign});
        }
    }
    std::vector<std::string> labels;
    if (!g.labels().empty()) {
        labels.reserve(ids.size());
        for (VertexId v : ids) labels.push_back(g.labels()[v]);
    }
    return {SignedDigraph(ids.size(), std::move(edges), g.origin(), std::move(labels)),
            std::vector<VertexId>(ids.begin(), ids.end())};
}

VertexSet neighbourhood(const SignedDigraph& g, const VertexSet& vs) {
    vs.validate_for(g);
    std::vector<VertexId> out;
    for (VertexId v : vs) {
        for (VertexId u : g.neighbours(v)) {
            if (!vs.contains(u)) out.push_back(u);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return VertexSet(std::move(out));
}

double negative_edge_fraction(const SignedDigraph& g) {
    if (g.edge_count() == 0) throw DataError("negative edge fraction is undefined on a graph without edges");
    return static_cast<double>(g.negative_edge_count()) / static_cast<double>(g.edge_count());
}

bool is_weakly_connected(const SignedDigraph& g, const VertexSet& vs) {
    if (vs.empty()) return false;
    vs.validate_for(g);
    std::vector<VertexId> stack{*vs.begin()};
    std::vector<VertexId> seen{*vs.begin()};
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId u : g.neighbours(v)) {
            if (vs.contains(u) && std::find(seen.begin(), seen.end(), u) == seen.end()) {
                seen.push_back(u);
                stack.push_back(u);
            }
        }
    }
    return seen.size() == vs.size();
}

SignedDigraph complete_graph(std::size_t n, bool with_loops) {
    std::vector<Edge> edges;
    edges.reserve(n * n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v)
            if (u != v || with_loops) edges.push_back({u, v, Sign::Positive});
    return SignedDigraph(n, std::move(edges), Origin::Undirected);
}

}  // namespace cyclebal
