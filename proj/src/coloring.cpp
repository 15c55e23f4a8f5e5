#include "trunkmatch/coloring.hpp"

#include <algorithm>
#include <sstream>

namespace trunkmatch {

ColorConfiguration::ColorConfiguration(const Graph& g, std::vector<VertexId> red_target)
    : graph_(&g), red_target_(std::move(red_target)) {
    if (static_cast<VertexId>(red_target_.size()) != g.vertex_count())
        throw Error("red target size mismatch");
    if (!is_consistent()) throw Error("inconsistent color configuration");
}

bool ColorConfiguration::is_consistent() const {
    for (VertexId v = 0; v < graph_->vertex_count(); ++v) {
        VertexId t = red_target_[v];
        if (t == kNoVertex || !graph_->has_edge(v, t)) return false;
    }
    return true;
}

int ColorConfiguration::variable_count() const {
    int count = 0;
    for (const Edge& e : graph_->edges())
        if (edge_coloring(e).is_variable()) ++count;
    return count;
}

std::vector<VertexId> ColorConfiguration::exposed() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < graph_->vertex_count(); ++v)
        if (red_target_[red_target_[v]] != v) out.push_back(v);
    return out;
}

ColorConfiguration from_matching(const Graph& g, const Matching& m) {
    if (!m.valid_on(g)) throw Error("matching invalid on graph");
    if (g.has_isolated_vertices()) throw Error("graph has isolated vertices");
    std::vector<VertexId> red(g.vertex_count(), kNoVertex);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (m.is_matched(v)) {
            red[v] = m.mate(v);
        } else {
            auto nb = g.neighbors(v);
            red[v] = *std::min_element(nb.begin(), nb.end());
        }
    }
    return ColorConfiguration(g, std::move(red));
}

Matching to_matching(const ColorConfiguration& c) {
    const Graph& g = c.graph();
    Matching m(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        VertexId t = c.red_target(v);
        if (t > v && c.red_target(t) == v) m.add(v, t);
    }
    return m;
}

ColorConfiguration color_exchange(const ColorConfiguration& c, VertexId pivot, const Edge& e1,
                                  const Edge& e2) {
    auto other_end = [&](const Edge& e) {
        if (e.u == pivot) return e.v;
        if (e.v == pivot) return e.u;
        throw Error("edge not incident to pivot");
    };
    VertexId a = other_end(e1);
    VertexId b = other_end(e2);
    if (a == b) throw Error("color exchange needs two distinct edges");
    if (!c.graph().has_edge(pivot, a) || !c.graph().has_edge(pivot, b))
        throw Error("edge not in graph");

    bool red1 = c.color_at(pivot, a) == LinkColor::red;
    bool red2 = c.color_at(pivot, b) == LinkColor::red;
    if (!red1 && !red2) throw Error("ineffective color exchange: neither pivot link is red");
    // red1 && red2 cannot happen: the pivot has a single red link.
    if (!red1) std::swap(a, b);

    // The red pivot link moves from <pivot,a> to <pivot,b>. Variable count
    // changes by [far(a)=r] + [far(b)=b] - [far(a)=b] - [far(b)=r].
    bool far_a_red = c.color_at(a, pivot) == LinkColor::red;
    bool far_b_red = c.color_at(b, pivot) == LinkColor::red;
    if (far_a_red && !far_b_red)
        throw Error("ineffective color exchange: would increase variable count");

    std::vector<VertexId> red(c.graph().vertex_count());
    for (VertexId v = 0; v < c.graph().vertex_count(); ++v) red[v] = c.red_target(v);
    red[pivot] = b;
    return ColorConfiguration(c.graph(), std::move(red));
}

namespace {

void check_augmenting(const Matching& m, const Graph& g, std::span<const VertexId> p) {
    if (p.size() < 2 || p.size() % 2 != 0) throw Error("augmenting path must have even length");
    std::vector<bool> seen(g.vertex_count(), false);
    for (VertexId v : p) {
        if (v < 0 || v >= g.vertex_count()) throw Error("path vertex out of range");
        if (seen[v]) throw Error("path revisits vertex " + g.label(v));
        seen[v] = true;
    }
    if (m.is_matched(p.front()) || m.is_matched(p.back()))
        throw Error("path endpoint is matched");
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (!g.has_edge(p[i], p[i + 1])) throw Error("path edge not in graph");
        bool want_matched = (i % 2 == 1);
        if (m.contains(p[i], p[i + 1]) != want_matched)
            throw Error("path does not alternate at position " + std::to_string(i));
    }
}

}  // namespace

ColorConfiguration eliminate_along_path(const ColorConfiguration& c,
                                        std::span<const VertexId> p) {
    const Graph& g = c.graph();
    check_augmenting(to_matching(c), g, p);

    ColorConfiguration cur = c;
    auto exchange = [&](VertexId pivot, VertexId from, VertexId to) {
        cur = color_exchange(cur, pivot, Edge(pivot, from), Edge(pivot, to));
        if (!cur.is_consistent()) throw Error("color exchange broke consistency");
    };

    std::size_t last = p.size() - 1;
    // Move the endpoints' red links onto the path first.
    if (cur.red_target(p[0]) != p[1]) exchange(p[0], cur.red_target(p[0]), p[1]);
    if (cur.red_target(p[last]) != p[last - 1])
        exchange(p[last], cur.red_target(p[last]), p[last - 1]);
    // Walk the variable down the path, flipping one matched pair at a time.
    for (std::size_t i = 1; i + 2 < p.size(); i += 2) {
        exchange(p[i], p[i + 1], p[i - 1]);
        exchange(p[i + 1], p[i], p[i + 2]);
    }
    return cur;
}

std::string dump_colors(const ColorConfiguration& c) {
    std::ostringstream out;
    for (const Edge& e : c.graph().edges()) {
        EdgeColoring ec = c.edge_coloring(e);
        out << (e.u + 1) << " " << (e.v + 1) << " "
            << (ec.at_u == LinkColor::red ? 'r' : 'b')
            << (ec.at_v == LinkColor::red ? 'r' : 'b') << "\n";
    }
    return out.str();
}

}  // namespace trunkmatch
