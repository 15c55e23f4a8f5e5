#include "trunkmatch/generators.hpp"

#include <set>

#include "trunkmatch/random.hpp"

namespace trunkmatch {

Graph gen_random_regular(VertexId n, int delta, std::uint64_t seed) {
    if (n <= 0) throw Error("vertex count must be positive");
    if (delta <= 0) throw Error("degree must be positive");
    if (delta >= n) throw Error("degree must be smaller than vertex count");
    if ((static_cast<std::int64_t>(n) * delta) % 2 != 0)
        throw Error("infeasible: n*delta is odd");

    constexpr int kMaxAttempts = 20000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(attempt)));
        std::vector<VertexId> stubs;
        stubs.reserve(static_cast<std::size_t>(n) * delta);
        for (VertexId v = 0; v < n; ++v)
            for (int k = 0; k < delta; ++k) stubs.push_back(v);
        rng.shuffle(stubs);

        std::vector<Edge> edges;
        std::set<Edge> seen;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            VertexId a = stubs[i], b = stubs[i + 1];
            if (a == b) {
                ok = false;
                break;
            }
            Edge e(a, b);
            if (!seen.insert(e).second) {
                ok = false;
                break;
            }
            edges.push_back(e);
        }
        if (ok) return Graph(n, std::move(edges));
    }
    throw Error("rejection budget exceeded generating regular graph");
}

Graph gen_gnp(VertexId n, double p, std::uint64_t seed) {
    if (n < 0) throw Error("negative vertex count");
    if (p < 0.0 || p > 1.0) throw Error("probability out of range");

    Rng rng(seed);
    std::vector<Edge> raw;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j)
            if (rng.unit() < p) raw.emplace_back(i, j);

    std::vector<int> degree(n, 0);
    for (const Edge& e : raw) {
        ++degree[e.u];
        ++degree[e.v];
    }
    std::vector<VertexId> remap(n, kNoVertex);
    VertexId kept = 0;
    for (VertexId v = 0; v < n; ++v)
        if (degree[v] > 0) remap[v] = kept++;
    if (kept == n) return Graph(n, std::move(raw));

    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const Edge& e : raw) edges.emplace_back(remap[e.u], remap[e.v]);
    std::vector<std::string> labels(kept);
    for (VertexId v = 0; v < n; ++v)
        if (remap[v] != kNoVertex) labels[remap[v]] = std::to_string(v + 1);
    return Graph(kept, std::move(edges), std::move(labels));
}

}  // namespace trunkmatch
