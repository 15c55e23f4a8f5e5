#include "trunkmatch/matcher.hpp"

#include <cmath>

namespace trunkmatch {

Matching initial_matching(const Graph& g, InitMode mode) {
    Matching m(g.vertex_count());
    if (mode == InitMode::empty) return m;
    for (const Edge& e : g.edges())
        if (!m.is_matched(e.u) && !m.is_matched(e.v)) m.add(e.u, e.v);
    return m;
}

Matching augment(const Matching& m, std::span<const VertexId> p) {
    if (p.size() < 2 || p.size() % 2 != 0)
        throw Error("augmenting path must have an even number of vertices");
    VertexId n = m.vertex_count();
    std::vector<bool> seen(n, false);
    for (VertexId v : p) {
        if (v < 0 || v >= n) throw Error("path vertex out of range");
        if (seen[v]) throw Error("augmenting path revisits a vertex");
        seen[v] = true;
    }
    if (m.is_matched(p.front()) || m.is_matched(p.back()))
        throw Error("augmenting path endpoint is matched");
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (m.contains(p[i], p[i + 1]) != (i % 2 == 1))
            throw Error("path does not alternate with the matching");

    Matching out = m;
    for (std::size_t i = 1; i + 2 < p.size(); i += 2) out.remove(p[i], p[i + 1]);
    for (std::size_t i = 0; i + 1 < p.size(); i += 2) out.add(p[i], p[i + 1]);
    return out;
}

Matching augment(const Graph& g, const Matching& m, std::span<const VertexId> p) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.has_edge(p[i], p[i + 1])) throw Error("path edge not in graph");
    return augment(m, p);
}

MatchResult maximum_matching(const Graph& g, const MatcherConfig& config) {
    return maximum_matching(g, initial_matching(g, config.init_mode), config);
}

MatchResult maximum_matching(const Graph& g, const Matching& initial,
                             const MatcherConfig& config) {
    if (g.vertex_count() == 0) throw Error("empty graph");
    if (g.has_isolated_vertices()) throw Error("graph has isolated vertices");
    if (!initial.valid_on(g)) throw Error("initial matching invalid on graph");
    if (config.budget_factor <= 0.0) throw Error("budget factor must be positive");

    SearchOptions opts;
    opts.prefer_free_tips = config.prefer_free_tips;
    opts.trace = config.trace;
    opts.budget = static_cast<std::uint64_t>(
        std::ceil(config.budget_factor * static_cast<double>(default_budget(g))));
    if (opts.budget == 0) opts.budget = 1;

    MatchResult result;
    result.matching = initial;
    int initial_size = initial.size();

    // One ascending pass suffices: every vertex still free when its turn
    // comes is searched exactly once, and augmentations only remove vertices
    // from the free set.
    for (VertexId v0 = 0; v0 < g.vertex_count(); ++v0) {
        if (result.matching.is_matched(v0)) continue;
        SearchOutcome outcome = search(g, result.matching, v0, opts);
        ++result.searches;
        result.total_steps += outcome.steps_used;
        result.max_path_entries = std::max(result.max_path_entries, outcome.max_path_entries);
        result.max_sprout_entries =
            std::max(result.max_sprout_entries, outcome.max_sprout_entries);
        if (config.trace)
            result.trace.insert(result.trace.end(), outcome.trace.begin(),
                                outcome.trace.end());
        if (config.observer) config.observer(g, result.matching, v0, outcome);
        switch (outcome.result) {
            case SearchResult::AugmentingPath:
                result.matching = augment(g, result.matching, outcome.augmenting_path);
                ++result.augmentations;
                break;
            case SearchResult::NoAugmentingPath:
                result.failed_roots.insert(v0);
                break;
            case SearchResult::BudgetExceeded:
                result.budget_exceeded.insert(v0);
                break;
        }
    }

    if (result.matching.size() != initial_size + result.augmentations)
        throw Error("internal: augmentation count out of sync");
    return result;
}

}  // namespace trunkmatch
