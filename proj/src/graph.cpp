#include "trunkmatch/graph.hpp"

#include <algorithm>
#include <set>

namespace trunkmatch {

Graph::Graph(VertexId n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n < 0) throw Error("negative vertex count");
    if (!labels_.empty() && static_cast<VertexId>(labels_.size()) != n)
        throw Error("label count does not match vertex count");
    adjacency_.assign(n_, {});
    std::set<Edge> seen;
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.v >= n_)
            throw Error("edge endpoint out of range: " + std::to_string(e.u + 1) + " " +
                        std::to_string(e.v + 1));
        if (!seen.insert(e).second)
            throw Error("duplicate edge " + std::to_string(e.u + 1) + " " +
                        std::to_string(e.v + 1));
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    const auto& adj = adjacency_.at(u);
    return std::find(adj.begin(), adj.end(), v) != adj.end();
}

std::string Graph::label(VertexId v) const {
    if (!labels_.empty() && !labels_[v].empty()) return labels_[v];
    return std::to_string(v + 1);
}

VertexId Graph::find_vertex(const std::string& name) const {
    for (VertexId v = 0; v < n_; ++v)
        if (!labels_.empty() && labels_[v] == name) return v;
    try {
        size_t pos = 0;
        long idx = std::stol(name, &pos);
        if (pos == name.size() && idx >= 1 && idx <= n_) return static_cast<VertexId>(idx - 1);
    } catch (const std::exception&) {
    }
    return kNoVertex;
}

bool Graph::has_isolated_vertices() const {
    for (VertexId v = 0; v < n_; ++v)
        if (adjacency_[v].empty()) return true;
    return false;
}

Matching Matching::from_edges(VertexId n, const std::vector<Edge>& edges) {
    Matching m(n);
    for (const Edge& e : edges) m.add(e.u, e.v);
    return m;
}

void Matching::add(VertexId u, VertexId v) {
    if (u == v) throw Error("matching edge is a loop");
    if (mate_.at(u) != kNoVertex || mate_.at(v) != kNoVertex)
        throw Error("matching edges share vertex " + std::to_string((mate_[u] != kNoVertex ? u : v) + 1));
    mate_[u] = v;
    mate_[v] = u;
    ++size_;
}

void Matching::remove(VertexId u, VertexId v) {
    if (mate_.at(u) != v) throw Error("edge not in matching");
    mate_[u] = kNoVertex;
    mate_[v] = kNoVertex;
    --size_;
}

std::vector<Edge> Matching::edges() const {
    std::vector<Edge> out;
    for (VertexId v = 0; v < vertex_count(); ++v)
        if (mate_[v] > v) out.emplace_back(v, mate_[v]);
    return out;
}

std::vector<VertexId> Matching::free_vertices() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < vertex_count(); ++v)
        if (mate_[v] == kNoVertex) out.push_back(v);
    return out;
}

bool Matching::valid_on(const Graph& g) const {
    if (vertex_count() != g.vertex_count()) return false;
    for (VertexId v = 0; v < vertex_count(); ++v) {
        VertexId w = mate_[v];
        if (w == kNoVertex) continue;
        if (w < 0 || w >= vertex_count() || mate_[w] != v) return false;
        if (v < w && !g.has_edge(v, w)) return false;
    }
    return true;
}

}  // namespace trunkmatch
