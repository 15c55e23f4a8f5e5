#include "trunkmatch/oracle.hpp"

#include <bit>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "trunkmatch/dimacs.hpp"

namespace trunkmatch::oracle {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(g.vertex_count(), 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= Mask{1} << e.v;
        adj[e.v] |= Mask{1} << e.u;
    }
    return adj;
}

void check_size(const Graph& g, int limit, const char* what) {
    if (g.vertex_count() > limit)
        throw Error(std::string(what) + " limited to " + std::to_string(limit) +
                    " vertices, got " + std::to_string(g.vertex_count()));
}

struct NuSearch {
    explicit NuSearch(const std::vector<Mask>& adjacency) : adj(adjacency) {}

    const std::vector<Mask>& adj;
    int best = 0;
    std::vector<Edge> current;
    std::vector<Edge> best_edges;

    void run(Mask remaining, int count) {
        // Even a perfect matching on what's left cannot beat best.
        if (count + std::popcount(remaining) / 2 <= best) return;
        Mask live = remaining;
        VertexId v = kNoVertex;
        while (live) {
            VertexId cand = static_cast<VertexId>(std::countr_zero(live));
            if (adj[cand] & remaining) {
                v = cand;
                break;
            }
            live &= live - 1;
        }
        if (v == kNoVertex) {
            if (count > best) {
                best = count;
                best_edges = current;
            }
            return;
        }
        Mask nbrs = adj[v] & remaining;
        Mask without_v = remaining & ~(Mask{1} << v);
        while (nbrs) {
            VertexId u = static_cast<VertexId>(std::countr_zero(nbrs));
            nbrs &= nbrs - 1;
            current.emplace_back(v, u);
            run(without_v & ~(Mask{1} << u), count + 1);
            current.pop_back();
        }
        run(without_v, count);
    }
};

int nu_on_mask(const std::vector<Mask>& adj, Mask mask) {
    NuSearch s(adj);
    s.run(mask, 0);
    return s.best;
}

}  // namespace

NuResult nu_bruteforce(const Graph& g) {
    check_size(g, 24, "nu_bruteforce");
    auto adj = adjacency_masks(g);
    NuSearch s(adj);
    Mask all = g.vertex_count() == 32 ? ~Mask{0} : (Mask{1} << g.vertex_count()) - 1;
    s.run(all, 0);
    return {s.best, Matching::from_edges(g.vertex_count(), s.best_edges)};
}

std::optional<std::vector<VertexId>> has_augmenting_path_exhaustive(const Graph& g,
                                                                    const Matching& m,
                                                                    VertexId v0) {
    check_size(g, 24, "has_augmenting_path_exhaustive");
    if (m.is_matched(v0)) throw Error("v0 is not free");

    std::vector<VertexId> path{v0};
    std::vector<bool> on_path(g.vertex_count(), false);
    on_path[v0] = true;
    std::optional<std::vector<VertexId>> found;

    // Alternates free/matched edges; a free edge into a free vertex wins.
    auto dfs = [&](auto&& self, VertexId v, bool next_is_matched) -> bool {
        for (VertexId u : g.neighbors(v)) {
            if (on_path[u]) continue;
            if (next_is_matched != m.contains(v, u)) continue;
            if (!next_is_matched && !m.is_matched(u)) {
                path.push_back(u);
                found = path;
                return true;
            }
            path.push_back(u);
            on_path[u] = true;
            if (self(self, u, !next_is_matched)) return true;
            on_path[u] = false;
            path.pop_back();
        }
        return false;
    };
    dfs(dfs, v0, false);
    return found;
}

bool verify_maximum(const Graph& g, const Matching& m) {
    check_size(g, 24, "verify_maximum");
    if (!m.valid_on(g)) throw Error("matching invalid on graph");
    return m.size() == nu_bruteforce(g).nu;
}

GEDecomposition gallai_edmonds_bruteforce(const Graph& g) {
    check_size(g, 20, "gallai_edmonds_bruteforce");
    auto adj = adjacency_masks(g);
    Mask all = (Mask{1} << g.vertex_count()) - 1;
    int nu = nu_on_mask(adj, all);

    GEDecomposition ge;
    ge.nu = nu;
    Mask d_mask = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (nu_on_mask(adj, all & ~(Mask{1} << v)) == nu) {
            ge.d.push_back(v);
            d_mask |= Mask{1} << v;
        }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (d_mask & (Mask{1} << v)) continue;
        if (adj[v] & d_mask)
            ge.a.push_back(v);
        else
            ge.c.push_back(v);
    }
    return ge;
}

namespace {

std::vector<Mask> components_of(const std::vector<Mask>& adj, Mask set) {
    std::vector<Mask> comps;
    Mask left = set;
    while (left) {
        Mask comp = Mask{1} << std::countr_zero(left);
        while (true) {
            Mask grown = comp;
            Mask scan = comp;
            while (scan) {
                VertexId v = static_cast<VertexId>(std::countr_zero(scan));
                scan &= scan - 1;
                grown |= adj[v] & set;
            }
            if (grown == comp) break;
            comp = grown;
        }
        comps.push_back(comp);
        left &= ~comp;
    }
    return comps;
}

}  // namespace

std::optional<std::string> validate_gallai_edmonds(const Graph& g, const GEDecomposition& ge) {
    auto adj = adjacency_masks(g);
    Matching witness = nu_bruteforce(g).witness;

    Mask c_mask = 0, d_mask = 0;
    for (VertexId v : ge.c) c_mask |= Mask{1} << v;
    for (VertexId v : ge.d) d_mask |= Mask{1} << v;

    for (Mask comp : components_of(adj, c_mask)) {
        if (std::popcount(comp) % 2 != 0)
            return "component of G[C] has odd size";
        Mask scan = comp;
        while (scan) {
            VertexId v = static_cast<VertexId>(std::countr_zero(scan));
            scan &= scan - 1;
            VertexId w = witness.mate(v);
            if (w == kNoVertex || !(comp & (Mask{1} << w)))
                return "vertex of C not matched inside its component";
        }
    }
    for (Mask comp : components_of(adj, d_mask)) {
        int size = std::popcount(comp);
        if (size % 2 != 1) return "component of G[D] has even size";
        Mask scan = comp;
        while (scan) {
            VertexId w = static_cast<VertexId>(std::countr_zero(scan));
            scan &= scan - 1;
            if (nu_on_mask(adj, comp & ~(Mask{1} << w)) != (size - 1) / 2)
                return "component of G[D] is not factor-critical";
        }
        int matched_inside = 0;
        scan = comp;
        while (scan) {
            VertexId v = static_cast<VertexId>(std::countr_zero(scan));
            scan &= scan - 1;
            VertexId w = witness.mate(v);
            if (w != kNoVertex && (comp & (Mask{1} << w))) ++matched_inside;
        }
        if (matched_inside < size - 1)
            return "witness is not near-perfect on a component of G[D]";
    }
    return std::nullopt;
}

std::string write_counterexample(const std::string& directory, const Graph& g,
                                 std::uint64_t seed, int matcher_size,
                                 const NuResult& expected) {
    std::string dimacs = write_dimacs(g);
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : dimacs) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    std::ostringstream name;
    name << std::hex << hash;

    std::filesystem::create_directories(directory);
    std::string base = directory + "/" + name.str();
    {
        std::ofstream out(base + ".dimacs");
        out << dimacs;
    }
    {
        std::ofstream out(base + ".report.txt");
        out << "seed " << seed << "\n";
        out << "matcher |M| " << matcher_size << "\n";
        out << "oracle nu " << expected.nu << "\n";
        out << "oracle witness:\n";
        for (const Edge& e : expected.witness.edges())
            out << "  " << (e.u + 1) << " " << (e.v + 1) << "\n";
    }
    return base + ".dimacs";
}

}  // namespace trunkmatch::oracle
