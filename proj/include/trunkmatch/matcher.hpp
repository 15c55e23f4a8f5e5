#ifndef TRUNKMATCH_MATCHER_HPP
#define TRUNKMATCH_MATCHER_HPP

#include <functional>
#include <set>
#include <span>

#include "trunkmatch/graph.hpp"
#include "trunkmatch/trunk_search.hpp"

namespace trunkmatch {

enum class InitMode { empty, greedy };

struct MatcherConfig {
    InitMode init_mode = InitMode::greedy;
    bool prefer_free_tips = false;
    double budget_factor = 1.0;  // scales default_budget(g)
    bool trace = false;
    std::uint64_t seed = 0;  // reserved; current modes are deterministic

    /// Test/diagnostic hook, called after every root search with the
    /// matching the search ran against.
    std::function<void(const Graph&, const Matching&, VertexId, const SearchOutcome&)>
        observer;
};

struct MatchResult {
    Matching matching;
    int augmentations = 0;
    std::set<VertexId> failed_roots;
    std::set<VertexId> budget_exceeded;
    int searches = 0;
    std::uint64_t total_steps = 0;
    std::size_t max_path_entries = 0;
    std::size_t max_sprout_entries = 0;
    std::vector<TraceRecord> trace;  // concatenated per-search traces
};

/// empty: no edges. greedy: scan edges in graph order, keep each edge whose
/// endpoints are both still uncovered (a maximal matching).
Matching initial_matching(const Graph& g, InitMode mode);

/// M ⊕ p for an augmenting path p. Fully validated (endpoints free, strict
/// alternation, distinct vertices, even vertex count) in all builds.
Matching augment(const Matching& m, std::span<const VertexId> p);

/// Also checks that every path edge exists in g.
Matching augment(const Graph& g, const Matching& m, std::span<const VertexId> p);

/// Builds a maximum matching: start from the configured initial matching,
/// then search from each free vertex in ascending index order. A root whose
/// search fails is excluded permanently, even after later augmentations
/// (free vertices of a maximum matching stay isolated in their component of
/// the decomposition, so retrying cannot help). Budget-exhausted roots are
/// recorded separately and otherwise treated like failures.
MatchResult maximum_matching(const Graph& g, const MatcherConfig& config = {});

/// Same, but starting from an explicit initial matching.
MatchResult maximum_matching(const Graph& g, const Matching& initial,
                             const MatcherConfig& config = {});

}  // namespace trunkmatch

#endif
