// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code is the number of
// failing criteria. Pass criterion numbers as arguments to run a subset.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "trunkmatch/bench.hpp"
#include "trunkmatch/coloring.hpp"
#include "trunkmatch/dimacs.hpp"
#include "trunkmatch/fixtures.hpp"
#include "trunkmatch/generators.hpp"
#include "trunkmatch/matcher.hpp"
#include "trunkmatch/oracle.hpp"
#include "trunkmatch/random.hpp"
#include "trunkmatch/trunk_search.hpp"

using namespace trunkmatch;

namespace {

const std::string kSourceDir = TRUNKMATCH_SOURCE_DIR;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CriterionResult {
    int id;
    bool pass;
    std::string detail;
};

// Aggregated results of the oracle differential runs, shared by criteria
// 3, 4, 5 and 7.
struct DifferentialStats {
    int gnp_runs = 0;
    int regular_runs = 0;
    int optimality_mismatches = 0;
    int invalid_matchings = 0;
    int below_nu = 0;
    int above_nu = 0;
    int fail_outcomes = 0;
    int exhaustiveness_checked = 0;
    int exhaustiveness_violations = 0;
    int gnp_budget_exceeded = 0;
    int regular_budget_exceeded = 0;
    bool occupancy_ok = true;
    std::string occupancy_problem;
    std::size_t max_path_seen = 0;
    std::size_t max_sprouts_seen = 0;
    std::size_t regular_max_sprouts = 0;
    bool regular_sprouts_le_2n = true;
    std::vector<std::string> artifacts;
    bool done = false;
};

DifferentialStats run_differential() {
    DifferentialStats stats;
    const double ps[3] = {0.2, 0.4, 0.6};

    auto solve_checked = [&](const Graph& g, std::uint64_t seed, bool regular) {
        MatcherConfig cfg;
        int fails_here = 0;
        cfg.observer = [&](const Graph& gg, const Matching& before, VertexId v0,
                           const SearchOutcome& out) {
            if (out.max_path_entries > static_cast<std::size_t>(gg.vertex_count()) ||
                out.max_sprout_entries > static_cast<std::size_t>(gg.edge_count())) {
                stats.occupancy_ok = false;
                stats.occupancy_problem = "P or S exceeded n/m on seed " + std::to_string(seed);
            }
            stats.max_path_seen = std::max(stats.max_path_seen, out.max_path_entries);
            stats.max_sprouts_seen = std::max(stats.max_sprouts_seen, out.max_sprout_entries);
            if (out.result == SearchResult::NoAugmentingPath) {
                ++fails_here;
                ++stats.exhaustiveness_checked;
                if (oracle::has_augmenting_path_exhaustive(gg, before, v0))
                    ++stats.exhaustiveness_violations;
            }
        };
        MatchResult r = maximum_matching(g, cfg);
        stats.fail_outcomes += fails_here;
        if (regular) {
            stats.regular_budget_exceeded += static_cast<int>(r.budget_exceeded.size());
            stats.regular_max_sprouts = std::max(stats.regular_max_sprouts,
                                                 r.max_sprout_entries);
            if (r.max_sprout_entries > 2 * static_cast<std::size_t>(g.vertex_count()))
                stats.regular_sprouts_le_2n = false;
        } else {
            stats.gnp_budget_exceeded += static_cast<int>(r.budget_exceeded.size());
        }
        if (!r.matching.valid_on(g)) {
            ++stats.invalid_matchings;
            return;
        }
        auto nu = oracle::nu_bruteforce(g);
        if (r.matching.size() > nu.nu) ++stats.above_nu;
        if (r.matching.size() < nu.nu) {
            ++stats.below_nu;
            ++stats.optimality_mismatches;
            stats.artifacts.push_back(oracle::write_counterexample(
                "counterexamples", g, seed, r.matching.size(), nu));
        }
    };

    for (int i = 0; stats.gnp_runs < 10000; ++i) {
        int n = 2 + i % 11;
        std::uint64_t seed = mix_seed(0xD1FFu, static_cast<std::uint64_t>(i));
        Graph g = gen_gnp(n, ps[i % 3], seed);
        if (g.vertex_count() < 2) continue;
        ++stats.gnp_runs;
        solve_checked(g, seed, false);
    }

    const std::pair<int, int> combos[] = {{4, 2}, {4, 3},  {6, 2},  {6, 3},  {6, 4},
                                          {6, 5}, {8, 2},  {8, 3},  {8, 4},  {8, 5},
                                          {10, 2}, {10, 3}, {10, 4}, {10, 5}, {12, 2},
                                          {12, 3}, {12, 4}, {12, 5}};
    for (int i = 0; stats.regular_runs < 1000; ++i) {
        auto [n, delta] = combos[i % std::size(combos)];
        std::uint64_t seed = mix_seed(0x2E6u, static_cast<std::uint64_t>(i));
        Graph g = gen_random_regular(n, delta, seed);
        ++stats.regular_runs;
        solve_checked(g, seed, true);
    }

    stats.done = true;
    return stats;
}

CriterionResult criterion1_golden_traces() {
    struct Row {
        const char* fixture_name;
        const char* golden_name;
    };
    std::string detail;
    bool pass = true;
    for (Row row : {Row{"fig4", "table1"}, Row{"fig4_alt", "table1_alt"},
                    Row{"fig5", "table2"}, Row{"fig5_alt", "table2_alt"},
                    Row{"fig8", "fig8"}}) {
        Fixture f = fixture(row.fixture_name);
        SearchOptions opts;
        opts.trace = true;
        SearchOutcome out = search(f.graph, f.initial_matching, 0, opts);
        std::string rendered = render_trace(out.trace);
        std::string expected = slurp(kSourceDir + "/golden/" + row.golden_name + ".tsv");
        if (rendered != expected) {
            pass = false;
            detail += std::string(row.fixture_name) + " trace differs; ";
        }
    }

    // fig8 must pass through the seven documented trunk states and end on
    // the documented augmenting path.
    Fixture f8 = fixture("fig8");
    SearchOptions opts;
    opts.trace = true;
    SearchOutcome out = search(f8.graph, f8.initial_matching, 0, opts);
    const std::pair<const char*, const char*> states[] = {
        {"v0 0 v1 1 va 0 vb 1 vc 0 vf 1 vg 0 vc 1", "<va,ve>;<vc,vg>"},
        {"v0 0 v1 1 va 0 vb 1 vc 0 vg 1", "<va,ve>"},
        {"v0 0 v1 1 va 0 vb 1 vc 0 vg 1 vf 0 vd 1 ve 0 va 1", "<va,ve>;<vf,vc>"},
        {"v0 0 v1 1 va 0 vb 1 vc 0 vg 1 vf 0 vc 1", "<va,ve>"},
        {"v0 0 v1 1 va 0 ve 1", "-"},
        {"v0 0 v1 1 va 0 ve 1 vd 0 vf 1 vg 0 vc 1 vb 0 va 1", "<vb,vh>"},
        {"v0 0 v1 1 va 0 ve 1 vd 0 vf 1 vg 0 vc 1 vb 0 vh 1", "-"},
    };
    std::size_t next_state = 0;
    for (const TraceRecord& r : out.trace)
        if (next_state < std::size(states) && r.path == states[next_state].first &&
            r.sprouts == states[next_state].second)
            ++next_state;
    if (next_state != std::size(states)) {
        pass = false;
        detail += "fig8 reproduced only " + std::to_string(next_state) + "/7 trunk states; ";
    }
    std::vector<VertexId> expected_path;
    for (const char* n : {"v0", "v1", "va", "ve", "vd", "vf", "vg", "vc", "vb", "vh"})
        expected_path.push_back(f8.graph.find_vertex(n));
    if (out.augmenting_path != expected_path) {
        pass = false;
        detail += "fig8 augmenting path differs; ";
    }
    if (pass) detail = "5 golden traces byte-exact, fig8 shows all 7 trunk states";
    return {1, pass, detail};
}

CriterionResult criterion2_worked_examples() {
    bool pass = true;
    std::string detail;

    Fixture f4 = fixture("fig4");
    MatchResult r4 = maximum_matching(f4.graph, f4.initial_matching, MatcherConfig{});
    if (r4.matching.size() != 5 || !r4.matching.free_vertices().empty()) {
        pass = false;
        detail += "fig4 solve: |M|=" + std::to_string(r4.matching.size()) + "; ";
    }

    Fixture syl = fixture("sylvester");
    MatchResult rs = maximum_matching(syl.graph, MatcherConfig{});
    int exposed = syl.graph.vertex_count() - 2 * rs.matching.size();
    if (exposed != 2) {
        pass = false;
        detail += "sylvester exposed=" + std::to_string(exposed) + "; ";
    }

    Fixture pet = fixture("petersen");
    MatcherConfig empty_cfg;
    empty_cfg.init_mode = InitMode::empty;
    MatchResult rp = maximum_matching(pet.graph, empty_cfg);
    if (rp.matching.size() != 5) {
        pass = false;
        detail += "petersen |M|=" + std::to_string(rp.matching.size()) + "; ";
    }
    if (pass)
        detail = "fig4 |M|=5 all covered, sylvester leaves 2 exposed, petersen reaches 5";
    return {2, pass, detail};
}

CriterionResult criterion3_differential(const DifferentialStats& s) {
    bool pass = s.invalid_matchings == 0 && s.above_nu == 0 && s.optimality_mismatches == 0;
    std::ostringstream detail;
    detail << s.gnp_runs << " gnp + " << s.regular_runs << " regular runs, invalid="
           << s.invalid_matchings << ", |M|>nu=" << s.above_nu
           << ", |M|<nu=" << s.optimality_mismatches;
    if (!s.artifacts.empty()) detail << ", artifacts: " << s.artifacts.front() << "...";
    return {3, pass, detail.str()};
}

CriterionResult criterion4_exhaustiveness(const DifferentialStats& s) {
    bool pass = s.exhaustiveness_violations == 0 && s.exhaustiveness_checked > 0;
    std::ostringstream detail;
    detail << s.exhaustiveness_checked << " Fail outcomes cross-checked exhaustively, "
           << s.exhaustiveness_violations << " violations";
    return {4, pass, detail.str()};
}

CriterionResult criterion5_termination(const DifferentialStats& s,
                                       const std::vector<bench::BenchRecord>& records) {
    int bench_exceeded = 0;
    for (const auto& r : records) bench_exceeded += r.budget_exceeded;
    int total = s.gnp_budget_exceeded + s.regular_budget_exceeded + bench_exceeded;
    std::ostringstream detail;
    detail << "BudgetExceeded at 4(m+1)(n+1): gnp=" << s.gnp_budget_exceeded
           << ", regular=" << s.regular_budget_exceeded << ", bench=" << bench_exceeded;
    if (total > 0)
        detail << " (searches that exhaust or wander the alternating-path space exceed any "
                  "fixed polynomial budget; they are capped and reported, not hung)";
    return {5, total == 0, detail.str()};
}

CriterionResult criterion6_scaling(const std::vector<bench::BenchRecord>& records) {
    bool pass = true;
    std::ostringstream detail;
    for (int delta : {3, 4, 5}) {
        auto fit = bench::fit_loglog_slope(records, delta);
        char buf[96];
        std::snprintf(buf, sizeof buf, "delta=%d slope=%.3f r2=%.3f; ", delta, fit.slope,
                      fit.r2);
        detail << buf;
        if (fit.slope < 1.5 || fit.slope > 2.5 || fit.r2 < 0.9) pass = false;
    }
    detail << "(target slope in [1.5,2.5], r2 >= 0.9)";
    return {6, pass, detail.str()};
}

CriterionResult criterion7_space(const DifferentialStats& s) {
    bool pass = s.occupancy_ok && s.regular_sprouts_le_2n;
    std::ostringstream detail;
    detail << "max |P|=" << s.max_path_seen << ", max |S|=" << s.max_sprouts_seen
           << " across the suite; regular-suite max |S|=" << s.regular_max_sprouts
           << " (bound 2n=24)";
    if (!s.occupancy_ok) detail << "; " << s.occupancy_problem;
    return {7, pass, detail.str()};
}

CriterionResult criterion8_coloring_equivalence() {
    int done = 0;
    for (int i = 0; done < 1000; ++i) {
        if (i >= 40000) return {8, false, "could not assemble 1000 augmentation instances"};
        Graph g = gen_gnp(4 + i % 9, 0.45, mix_seed(0xC01u, static_cast<std::uint64_t>(i)));
        if (g.vertex_count() < 2 || g.has_isolated_vertices()) continue;
        Matching m = initial_matching(g, InitMode::greedy);
        for (VertexId v0 : m.free_vertices()) {
            auto witness = oracle::has_augmenting_path_exhaustive(g, m, v0);
            if (!witness) continue;
            // eliminate_along_path re-validates consistency after every
            // exchange and throws on violation
            Matching via_walk = to_matching(eliminate_along_path(from_matching(g, m), *witness));
            Matching via_sym = augment(g, m, *witness);
            if (!(via_walk == via_sym))
                return {8, false, "walk and symmetric difference disagree at instance " +
                                      std::to_string(done)};
            ++done;
            break;
        }
    }
    return {8, true, "1000 instances agree; consistency held after every exchange"};
}

CriterionResult criterion9_gallai_edmonds() {
    std::vector<Edge> k3_edges{Edge(0, 1), Edge(1, 2), Edge(0, 2)};
    Graph k3(3, k3_edges);
    auto ge3 = oracle::gallai_edmonds_bruteforce(k3);
    if (ge3.d.size() != 3 || oracle::validate_gallai_edmonds(k3, ge3))
        return {9, false, "K3 decomposition wrong"};

    Fixture syl = fixture("sylvester");
    auto ges = oracle::gallai_edmonds_bruteforce(syl.graph);
    if (ges.a.size() != 1 || ges.c.size() != 0 || ges.d.size() != 15 ||
        oracle::validate_gallai_edmonds(syl.graph, ges))
        return {9, false, "sylvester decomposition wrong"};

    int checked = 0;
    for (int i = 0; checked < 200; ++i) {
        if (i >= 4000) return {9, false, "could not assemble 200 random graphs"};
        Graph g = gen_gnp(2 + i % 13, 0.35, mix_seed(0x6Eu, static_cast<std::uint64_t>(i)));
        if (g.vertex_count() < 1) continue;
        auto ge = oracle::gallai_edmonds_bruteforce(g);
        if (ge.d.size() + ge.a.size() + ge.c.size() !=
            static_cast<std::size_t>(g.vertex_count()))
            return {9, false, "partition not covering"};
        if (auto problem = oracle::validate_gallai_edmonds(g, ge))
            return {9, false, "structure violated on seed graph " + std::to_string(i) + ": " +
                                  *problem};
        ++checked;
    }
    return {9, true, "K3, sylvester and 200 random graphs satisfy both structure properties"};
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
    auto selected = [&](int id) { return wanted.empty() || wanted.count(id) > 0; };

    std::vector<CriterionResult> results;
    DifferentialStats stats;
    std::vector<bench::BenchRecord> bench_records;

    auto need_differential = selected(3) || selected(4) || selected(5) || selected(7);
    auto need_bench = selected(5) || selected(6);

    try {
        if (need_differential) {
            auto start = std::chrono::steady_clock::now();
            stats = run_differential();
            auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
            std::fprintf(stderr, "[differential suite: %.1fs]\n", secs.count());
        }
        if (need_bench) {
            auto start = std::chrono::steady_clock::now();
            bench::BenchPlan plan;  // desk-scale defaults: deltas 3..5, n 100..1000, 5 trials
            bench_records = bench::run_bench(plan, 1);
            std::ofstream csv("bench.csv");
            csv << bench::records_to_csv(bench_records);
            std::ofstream svg("bench.svg");
            svg << bench::emit_plot(bench_records);
            auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
            std::fprintf(stderr, "[bench (bench.csv, bench.svg): %.1fs]\n", secs.count());
        }

        if (selected(1)) results.push_back(criterion1_golden_traces());
        if (selected(2)) results.push_back(criterion2_worked_examples());
        if (selected(3)) results.push_back(criterion3_differential(stats));
        if (selected(4)) results.push_back(criterion4_exhaustiveness(stats));
        if (selected(5)) results.push_back(criterion5_termination(stats, bench_records));
        if (selected(6)) results.push_back(criterion6_scaling(bench_records));
        if (selected(7)) results.push_back(criterion7_space(stats));
        if (selected(8)) results.push_back(criterion8_coloring_equivalence());
        if (selected(9)) results.push_back(criterion9_gallai_edmonds());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance suite aborted: %s\n", e.what());
        return 99;
    }

    int failures = 0;
    for (const auto& r : results) {
        std::printf("criterion %d: %s - %s\n", r.id, r.pass ? "PASS" : "FAIL",
                    r.detail.c_str());
        if (!r.pass) ++failures;
    }
    return failures;
}
