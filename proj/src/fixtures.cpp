#include "trunkmatch/fixtures.hpp"

namespace trunkmatch {

namespace {

Fixture make(VertexId n, std::vector<std::string> labels,
             const std::vector<std::pair<VertexId, VertexId>>& edge_list,
             const std::vector<std::pair<VertexId, VertexId>>& matched) {
    std::vector<Edge> edges;
    edges.reserve(edge_list.size());
    for (auto [u, v] : edge_list) edges.emplace_back(u, v);
    Graph g(n, std::move(edges), std::move(labels));
    std::vector<Edge> med;
    med.reserve(matched.size());
    for (auto [u, v] : matched) med.emplace_back(u, v);
    Matching m = Matching::from_edges(n, med);
    if (!m.valid_on(g)) throw Error("fixture matching invalid");
    return {std::move(g), std::move(m)};
}

// v0=0 v1=1 va=2 vb=3 vc=4 vd=5 ve=6 vx=7 vy=8 vz=9
const std::vector<std::string> kFig4Labels = {"v0", "v1", "va", "vb", "vc",
                                              "vd", "ve", "vx", "vy", "vz"};

Fixture fig4() {
    // Edge order pins adjacency: va [v1,vb,ve], vc [vb,vd,vy], vd [ve,vx,vc].
    // With vd's sprout order [vx, vc] the search takes the direct ending.
    return make(10, kFig4Labels,
                {{0, 1}, {1, 2}, {2, 3}, {2, 6}, {3, 4}, {5, 6}, {5, 7}, {4, 5}, {4, 8}, {8, 9}},
                {{1, 2}, {3, 4}, {5, 6}, {8, 9}});
}

Fixture fig4_alt() {
    // vd [ve,vc,vx]: the search grows into the odd cycle once more before the
    // final detour reaches vx.
    return make(10, kFig4Labels,
                {{0, 1}, {1, 2}, {2, 3}, {2, 6}, {3, 4}, {5, 6}, {4, 5}, {5, 7}, {4, 8}, {8, 9}},
                {{1, 2}, {3, 4}, {5, 6}, {8, 9}});
}

// v0=0 v1=1 v2=2 va=3 vb=4 vc=5 vd=6 vx=7 vy=8 vz=9
const std::vector<std::string> kFig5Labels = {"v0", "v1", "v2", "va", "vb",
                                              "vc", "vd", "vx", "vy", "vz"};

Fixture fig5() {
    // vb [va,vc,vy], vd [vc,va,vx]: even-cycle detection, then detour to vx.
    return make(10, kFig5Labels,
                {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 6}, {6, 7}, {4, 8}, {8, 9}},
                {{1, 2}, {3, 4}, {5, 6}, {8, 9}});
}

Fixture fig5_alt() {
    // vb [va,vy,vc], vd [vc,vx,va]: dead end at vz first, then the direct run.
    return make(10, kFig5Labels,
                {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 8}, {4, 5}, {5, 6}, {6, 7}, {3, 6}, {8, 9}},
                {{1, 2}, {3, 4}, {5, 6}, {8, 9}});
}

Fixture fig8() {
    // Two nested odd cycles. v0=0 v1=1 va=2 vb=3 vc=4 vd=5 ve=6 vf=7 vg=8 vh=9.
    // Adjacency: va [v1,vb,ve], vb [vc,va,vh], vc [vb,vf,vg], vf [vd,vc,vg].
    return make(10, {"v0", "v1", "va", "vb", "vc", "vd", "ve", "vf", "vg", "vh"},
                {{0, 1},
                 {1, 2},
                 {3, 4},
                 {2, 3},
                 {2, 6},
                 {3, 9},
                 {5, 7},
                 {4, 7},
                 {4, 8},
                 {5, 6},
                 {7, 8}},
                {{1, 2}, {3, 4}, {5, 6}, {7, 8}});
}

Fixture sylvester() {
    // Three 5-cycles, each with one vertex adjacent to the cut vertex va.
    // Deficiency 2: va can serve only one of the three odd components.
    std::vector<std::string> labels = {"va"};
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int comp = 0; comp < 3; ++comp) {
        VertexId base = 1 + 5 * comp;
        char name = static_cast<char>('b' + comp);
        for (int k = 0; k < 5; ++k) labels.push_back(std::string(1, name) + std::to_string(k));
        edges.push_back({0, base});
        for (int k = 0; k < 4; ++k) edges.push_back({base + k, base + k + 1});
        edges.push_back({base, base + 4});
    }
    return make(16, std::move(labels), edges, {});
}

Fixture petersen() {
    // Outer 5-cycle u0..u4, spokes, inner pentagram w0..w4.
    std::vector<std::string> labels;
    for (int k = 0; k < 5; ++k) labels.push_back("u" + std::to_string(k));
    for (int k = 0; k < 5; ++k) labels.push_back("w" + std::to_string(k));
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId k = 0; k < 5; ++k) edges.push_back({k, static_cast<VertexId>((k + 1) % 5)});
    for (VertexId k = 0; k < 5; ++k) edges.push_back({k, static_cast<VertexId>(k + 5)});
    for (VertexId k = 0; k < 5; ++k)
        edges.push_back({static_cast<VertexId>(k + 5), static_cast<VertexId>((k + 2) % 5 + 5)});
    return make(10, std::move(labels), edges, {});
}

}  // namespace

Fixture fixture(const std::string& name) {
    if (name == "fig4") return fig4();
    if (name == "fig4_alt") return fig4_alt();
    if (name == "fig5") return fig5();
    if (name == "fig5_alt") return fig5_alt();
    if (name == "fig8") return fig8();
    if (name == "sylvester") return sylvester();
    if (name == "petersen") return petersen();
    throw Error("unknown fixture '" + name + "'");
}

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {"fig4", "fig4_alt", "fig5", "fig5_alt",
                                                   "fig8", "sylvester", "petersen"};
    return names;
}

}  // namespace trunkmatch
