// Command-line front end: solve | trace | gen | verify | oracle | ge | bench.
//
// Exit codes: 0 completed, 1 check failed (golden diff, non-maximum
// matching), 2 completed with budget-exceeded searches, 3 input error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "trunkmatch/bench.hpp"
#include "trunkmatch/dimacs.hpp"
#include "trunkmatch/fixtures.hpp"
#include "trunkmatch/generators.hpp"
#include "trunkmatch/matcher.hpp"
#include "trunkmatch/oracle.hpp"
#include "trunkmatch/trunk_search.hpp"

namespace {

using namespace trunkmatch;

std::string read_stream_or_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_stream_or_file(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << content;
}

Graph load_graph(const std::string& path) { return parse_dimacs(read_stream_or_file(path)); }

// The sibling matching file of fixtures/fig4.dimacs is fixtures/fig4.matching.
std::string sibling_matching_path(const std::string& graph_path) {
    auto dot = graph_path.rfind('.');
    std::string stem = dot == std::string::npos ? graph_path : graph_path.substr(0, dot);
    return stem + ".matching";
}

Matching load_initial(const std::string& graph_path, const Graph& g, const std::string& mode) {
    if (mode == "empty") return Matching(g.vertex_count());
    if (mode == "greedy") return initial_matching(g, InitMode::greedy);
    if (mode == "fixture") {
        std::string path = sibling_matching_path(graph_path);
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Error("no matching file '" + path + "' next to the graph");
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_matching(buf.str(), g);
    }
    throw Error("unknown init mode '" + mode + "'");
}

double resolve_budget_factor(bool flag_given, double flag_value) {
    if (flag_given) return flag_value;
    if (const char* env = std::getenv("TRUNK_MATCH_BUDGET_FACTOR")) {
        try {
            return std::stod(env);
        } catch (const std::exception&) {
            throw Error("bad TRUNK_MATCH_BUDGET_FACTOR value");
        }
    }
    return 1.0;
}

std::string normalize_newlines(std::string s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (c != '\r') out.push_back(c);
    return out;
}

std::vector<int> parse_int_list(const std::string& spec) {
    // "100:1000:100" ranges or "3,4,5" lists
    std::vector<int> out;
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        int from, to, step;
        if (std::sscanf(spec.c_str(), "%d:%d:%d", &from, &to, &step) != 3 || step <= 0)
            throw Error("bad range '" + spec + "', expected from:to:step");
        for (int v = from; v <= to; v += step) out.push_back(v);
        return out;
    }
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    if (out.empty()) throw Error("empty list '" + spec + "'");
    return out;
}

int cmd_solve(const std::string& graph_path, const std::string& init_mode,
              bool prefer_free_tips, double budget_factor, const std::string& matching_out) {
    Graph g = load_graph(graph_path);
    Matching m0 = load_initial(graph_path, g, init_mode);
    MatcherConfig cfg;
    cfg.prefer_free_tips = prefer_free_tips;
    cfg.budget_factor = budget_factor;
    MatchResult result = maximum_matching(g, m0, cfg);
    int exposed = g.vertex_count() - 2 * result.matching.size();
    std::cout << "matched=" << result.matching.size() << " exposed=" << exposed
              << " augmentations=" << result.augmentations << " steps=" << result.total_steps
              << "\n";
    if (!matching_out.empty()) write_stream_or_file(matching_out, write_matching(result.matching));
    return result.budget_exceeded.empty() ? 0 : 2;
}

int cmd_trace(const std::string& graph_path, const std::string& root_name,
              const std::string& golden_path, bool prefer_free_tips, double budget_factor) {
    Graph g = load_graph(graph_path);
    std::string matching_path = sibling_matching_path(graph_path);
    Matching m(g.vertex_count());
    if (std::ifstream probe(matching_path); probe.good())
        m = parse_matching(read_stream_or_file(matching_path), g);
    VertexId root = g.find_vertex(root_name);
    if (root == kNoVertex) throw Error("no vertex named '" + root_name + "'");
    if (m.is_matched(root)) throw Error("root " + g.label(root) + " is matched");

    SearchOptions opts;
    opts.trace = true;
    opts.prefer_free_tips = prefer_free_tips;
    opts.budget = std::max<std::uint64_t>(
        1, static_cast<std::uint64_t>(budget_factor * static_cast<double>(default_budget(g))));
    SearchOutcome outcome = search(g, m, root, opts);
    std::string tsv = render_trace(outcome.trace);
    std::cout << tsv;
    if (!golden_path.empty()) {
        std::string golden = normalize_newlines(read_stream_or_file(golden_path));
        if (normalize_newlines(tsv) != golden) {
            std::cerr << "trace differs from golden file " << golden_path << "\n";
            return 1;
        }
    }
    return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& matching_path) {
    Graph g = load_graph(graph_path);
    Matching m = parse_matching(read_stream_or_file(matching_path), g);
    auto nu = oracle::nu_bruteforce(g);
    bool maximum = m.size() == nu.nu;
    std::cout << "|M|=" << m.size() << " nu=" << nu.nu
              << " maximum=" << (maximum ? "yes" : "no") << "\n";
    return maximum ? 0 : 1;
}

int cmd_oracle(const std::string& graph_path) {
    Graph g = load_graph(graph_path);
    std::cout << "nu=" << oracle::nu_bruteforce(g).nu << "\n";
    return 0;
}

int cmd_ge(const std::string& graph_path) {
    Graph g = load_graph(graph_path);
    auto ge = oracle::gallai_edmonds_bruteforce(g);
    auto print_set = [&](const char* name, const std::vector<VertexId>& set) {
        std::cout << name << ":";
        for (VertexId v : set) std::cout << " " << g.label(v);
        std::cout << "\n";
    };
    std::cout << "nu=" << ge.nu << "\n";
    std::cout << "|D|=" << ge.d.size() << "\n";
    std::cout << "|A|=" << ge.a.size() << "\n";
    std::cout << "|C|=" << ge.c.size() << "\n";
    print_set("D", ge.d);
    print_set("A", ge.a);
    print_set("C", ge.c);
    if (auto problem = oracle::validate_gallai_edmonds(g, ge)) {
        std::cerr << "structure check failed: " << *problem << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximum matching in general graphs by detour-based DFS"};
    app.require_subcommand(1);

    std::string graph_path, matching_out, matching_path, root_name, golden_path;
    std::string init_mode = "greedy";
    bool prefer_free_tips = false;
    double budget_factor = 1.0;
    bool budget_given = false;

    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_flag("--prefer-free-tips", prefer_free_tips,
                      "jump to a free sprout tip as soon as one exists");
        cmd->add_option("--budget-factor", budget_factor, "scale the per-search step budget")
            ->each([&](const std::string&) { budget_given = true; });
    };

    auto* solve = app.add_subcommand("solve", "compute a maximum matching");
    solve->add_option("graph", graph_path, "DIMACS graph file, or - for stdin")->required();
    solve->add_option("--init", init_mode, "initial matching: empty|greedy|fixture")
        ->check(CLI::IsMember({"empty", "greedy", "fixture"}));
    solve->add_option("--matching-out", matching_out, "write the matching here (- for stdout)");
    add_budget(solve);

    auto* trace = app.add_subcommand("trace", "print one search as a TSV trace");
    trace->add_option("graph", graph_path, "DIMACS graph file")->required();
    trace->add_option("--root", root_name, "free vertex to start from")->required();
    trace->add_option("--golden", golden_path, "compare against this golden trace");
    add_budget(trace);

    auto* gen = app.add_subcommand("gen", "generate a random graph");
    std::vector<std::string> regular_args, gnp_args;
    std::uint64_t gen_seed = 1;
    std::string gen_out = "-";
    auto* opt_regular =
        gen->add_option("--regular", regular_args, "n delta: random regular graph")
            ->expected(2);
    auto* opt_gnp =
        gen->add_option("--gnp", gnp_args, "n p: Erdos-Renyi graph")->expected(2);
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--out", gen_out, "output file (- for stdout)");
    opt_regular->excludes(opt_gnp);

    auto* verify = app.add_subcommand("verify", "check a matching file against the oracle");
    verify->add_option("graph", graph_path)->required();
    verify->add_option("matching", matching_path, "matching file")->required();

    auto* orc = app.add_subcommand("oracle", "print the exact maximum matching size");
    orc->add_option("graph", graph_path)->required();

    auto* ge = app.add_subcommand("ge", "print the D/A/C decomposition");
    ge->add_option("graph", graph_path)->required();

    auto* bench_cmd = app.add_subcommand("bench", "timing runs over random regular graphs");
    std::string deltas_spec = "3,4,5", sizes_spec = "100:1000:100";
    int trials = 5, workers = 1;
    std::uint64_t bench_seed = 1;
    std::string csv_out = "-", plot_out;
    bool strict = false;
    bench_cmd->add_option("--deltas", deltas_spec, "degrees, e.g. 3,4,5");
    bench_cmd->add_option("--sizes", sizes_spec, "sizes, e.g. 100:1000:100 or 100,200");
    bench_cmd->add_option("--trials", trials, "trials per (delta,n) cell");
    bench_cmd->add_option("--seed", bench_seed, "plan seed");
    bench_cmd->add_option("--workers", workers, "worker threads");
    bench_cmd->add_option("--out", csv_out, "CSV output (- for stdout)");
    bench_cmd->add_option("--plot", plot_out, "write an SVG plot here");
    bench_cmd->add_flag("--strict", strict, "fail on any budget-exceeded search");
    add_budget(bench_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        double factor = resolve_budget_factor(budget_given, budget_factor);
        if (solve->parsed())
            return cmd_solve(graph_path, init_mode, prefer_free_tips, factor, matching_out);
        if (trace->parsed())
            return cmd_trace(graph_path, root_name, golden_path, prefer_free_tips, factor);
        if (gen->parsed()) {
            Graph g = !regular_args.empty()
                          ? gen_random_regular(std::stoi(regular_args[0]),
                                               std::stoi(regular_args[1]), gen_seed)
                          : (!gnp_args.empty()
                                 ? gen_gnp(std::stoi(gnp_args[0]), std::stod(gnp_args[1]),
                                           gen_seed)
                                 : throw Error("gen needs --regular or --gnp"));
            write_stream_or_file(gen_out, write_dimacs(g));
            return 0;
        }
        if (verify->parsed()) return cmd_verify(graph_path, matching_path);
        if (orc->parsed()) return cmd_oracle(graph_path);
        if (ge->parsed()) return cmd_ge(graph_path);
        if (bench_cmd->parsed()) {
            bench::BenchPlan plan;
            plan.deltas = parse_int_list(deltas_spec);
            plan.sizes = parse_int_list(sizes_spec);
            plan.trials = trials;
            plan.seed = bench_seed;
            plan.budget_factor = factor;
            plan.prefer_free_tips = prefer_free_tips;
            auto records = bench::run_bench(plan, workers);
            write_stream_or_file(csv_out, bench::records_to_csv(records));
            if (!plot_out.empty()) write_stream_or_file(plot_out, bench::emit_plot(records));
            int exceeded = 0;
            for (const auto& r : records) exceeded += r.budget_exceeded;
            if (exceeded > 0) {
                std::cerr << exceeded << " searches exceeded the step budget\n";
                if (strict) return 2;
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
