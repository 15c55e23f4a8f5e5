#ifndef TRUNKMATCH_GRAPH_HPP
#define TRUNKMATCH_GRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace trunkmatch {

using VertexId = std::int32_t;
inline constexpr VertexId kNoVertex = -1;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Unordered vertex pair, normalized so that u < v.
struct Edge {
    VertexId u;
    VertexId v;

    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw Error("loop edge " + std::to_string(a));
    }

    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

/// Immutable simple undirected graph. Adjacency lists are ordered by first
/// appearance of each neighbor in the edge list, and that order is part of
/// the graph's identity: it drives sprout selection and trace reproduction.
class Graph {
public:
    Graph() = default;

    /// Builds from an ordered edge list. Rejects loops, duplicate edges and
    /// out-of-range endpoints. Labels, when given, must have size n.
    Graph(VertexId n, std::vector<Edge> edges, std::vector<std::string> labels = {});

    VertexId vertex_count() const { return n_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }

    std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
    int degree(VertexId v) const { return static_cast<int>(adjacency_.at(v).size()); }
    bool has_edge(VertexId u, VertexId v) const;

    /// Edges in their original (file/generation) order.
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Display name of a vertex: its label, or the 1-based index.
    std::string label(VertexId v) const;

    /// Resolves a display name back to a vertex (label first, then 1-based
    /// index). Returns kNoVertex when nothing matches.
    VertexId find_vertex(const std::string& name) const;

    bool has_isolated_vertices() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_ && labels_ == other.labels_;
    }

private:
    VertexId n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<std::string> labels_;
};

/// A set of vertex-disjoint edges, stored as the mate index.
class Matching {
public:
    Matching() = default;
    explicit Matching(VertexId n) : mate_(n, kNoVertex) {}

    /// Builds from explicit edges; throws if two edges share a vertex.
    static Matching from_edges(VertexId n, const std::vector<Edge>& edges);

    VertexId vertex_count() const { return static_cast<VertexId>(mate_.size()); }
    int size() const { return size_; }

    VertexId mate(VertexId v) const { return mate_.at(v); }
    bool is_matched(VertexId v) const { return mate_.at(v) != kNoVertex; }
    bool contains(VertexId u, VertexId v) const { return mate_.at(u) == v; }

    void add(VertexId u, VertexId v);
    void remove(VertexId u, VertexId v);

    /// Matched edges ordered by lower endpoint.
    std::vector<Edge> edges() const;

    std::vector<VertexId> free_vertices() const;

    /// True when every matched edge exists in g (the host-graph invariant).
    bool valid_on(const Graph& g) const;

    bool operator==(const Matching&) const = default;

private:
    std::vector<VertexId> mate_;
    int size_ = 0;
};

}  // namespace trunkmatch

#endif
