#ifndef TRUNKMATCH_COLORING_HPP
#define TRUNKMATCH_COLORING_HPP

#include <span>
#include <string>
#include <vector>

#include "trunkmatch/graph.hpp"

namespace trunkmatch {

enum class LinkColor { red, blue };

/// Per-edge pair of link colors. An edge is a variable when exactly one of
/// its two links is red; red-red edges form the matching.
struct EdgeColoring {
    Edge edge;
    LinkColor at_u;
    LinkColor at_v;

    bool is_variable() const { return (at_u == LinkColor::red) != (at_v == LinkColor::red); }
    bool is_red_constant() const { return at_u == LinkColor::red && at_v == LinkColor::red; }
};

/// Two-coloring of edge links where each vertex has exactly one red link,
/// stored as the neighbor that link points to. Mutually-red edges are the
/// matching; vertices whose red link is not reciprocated are exposed.
class ColorConfiguration {
public:
    ColorConfiguration(const Graph& g, std::vector<VertexId> red_target);

    const Graph& graph() const { return *graph_; }
    VertexId red_target(VertexId v) const { return red_target_.at(v); }

    LinkColor color_at(VertexId endpoint, VertexId other) const {
        return red_target_.at(endpoint) == other ? LinkColor::red : LinkColor::blue;
    }
    EdgeColoring edge_coloring(const Edge& e) const {
        return {e, color_at(e.u, e.v), color_at(e.v, e.u)};
    }

    bool is_consistent() const;
    int variable_count() const;

    /// Exposed vertices: red link not reciprocated.
    std::vector<VertexId> exposed() const;

    bool operator==(const ColorConfiguration&) const = default;

private:
    const Graph* graph_;
    std::vector<VertexId> red_target_;

    friend ColorConfiguration color_exchange(const ColorConfiguration&, VertexId, const Edge&,
                                             const Edge&);
};

/// Matched vertices point red at their mate; free vertices at their
/// lowest-index neighbor (deterministic stand-in for an arbitrary choice).
ColorConfiguration from_matching(const Graph& g, const Matching& m);

/// The derived matching: edges whose two links are both red.
Matching to_matching(const ColorConfiguration& c);

/// Swaps the colors of the two links incident to pivot on edges e1 and e2;
/// far-end links are untouched. Rejects exchanges that are no-ops (neither
/// pivot link red) or would increase the variable count.
ColorConfiguration color_exchange(const ColorConfiguration& c, VertexId pivot, const Edge& e1,
                                  const Edge& e2);

/// Augments the derived matching along path p by a walk of color exchanges;
/// eliminates exactly two variables. p must be an augmenting path for
/// to_matching(c). Equivalent to the symmetric-difference augmentation.
ColorConfiguration eliminate_along_path(const ColorConfiguration& c,
                                        std::span<const VertexId> p);

/// Debug dump: one line per edge, `u v <color_at_u><color_at_v>` (1-based).
std::string dump_colors(const ColorConfiguration& c);

}  // namespace trunkmatch

#endif
