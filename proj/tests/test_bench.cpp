#include <doctest.h>

#include <vector>

#include "trunkmatch/bench.hpp"
#include "trunkmatch/graph.hpp"

using namespace trunkmatch;
using bench::BenchPlan;
using bench::BenchRecord;

namespace {

std::vector<BenchRecord> synthetic(double (*cost)(int)) {
    std::vector<BenchRecord> records;
    for (int n : {100, 200, 400, 800}) {
        BenchRecord r;
        r.delta = 3;
        r.n = n;
        r.wall_micros = cost(n);
        records.push_back(r);
    }
    return records;
}

// Minimal well-formedness scan: every <tag> has a matching </tag> or is
// self-closing, nesting is balanced.
bool xml_well_formed(const std::string& text) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    while ((i = text.find('<', i)) != std::string::npos) {
        std::size_t end = text.find('>', i);
        if (end == std::string::npos) return false;
        std::string tag = text.substr(i + 1, end - i - 1);
        i = end + 1;
        if (tag.starts_with("?") || tag.starts_with("!")) continue;
        if (tag.starts_with("/")) {
            if (stack.empty()) return false;
            std::string name = tag.substr(1);
            if (stack.back() != name) return false;
            stack.pop_back();
            continue;
        }
        if (tag.ends_with("/")) continue;
        std::string name = tag.substr(0, tag.find_first_of(" \t\n"));
        stack.push_back(name);
    }
    return stack.empty();
}

}  // namespace

TEST_CASE("loglog fit recovers planted exponents") {
    auto quad = bench::fit_loglog_slope(synthetic([](int n) { return 3.7 * n * n; }), 3);
    CHECK(quad.slope == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(quad.r2 == doctest::Approx(1.0).epsilon(1e-9));

    auto lin = bench::fit_loglog_slope(synthetic([](int n) { return 0.4 * n; }), 3);
    CHECK(lin.slope == doctest::Approx(1.0).epsilon(1e-9));

    std::vector<BenchRecord> two(synthetic([](int n) { return 1.0 * n; }));
    two.resize(2);
    CHECK_THROWS_AS(bench::fit_loglog_slope(two, 3), Error);
    CHECK_THROWS_AS(bench::fit_loglog_slope(two, 7), Error);  // no such delta
}

TEST_CASE("run_bench produces one deterministic record per cell and trial") {
    BenchPlan plan;
    plan.deltas = {3};
    plan.sizes = {100};
    plan.trials = 2;
    plan.seed = 9;
    auto records = bench::run_bench(plan);
    REQUIRE(records.size() == 2);
    for (const auto& r : records) {
        CHECK(r.matched <= 50);
        CHECK(r.matched > 0);
        CHECK(r.wall_micros >= 0.0);
    }
    auto again = bench::run_bench(plan);
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(records[i].seed == again[i].seed);
        CHECK(records[i].matched == again[i].matched);
        CHECK(records[i].augmentations == again[i].augmentations);
        CHECK(records[i].steps == again[i].steps);
        CHECK(records[i].budget_exceeded == again[i].budget_exceeded);
    }
}

TEST_CASE("worker pool keeps record order and fields deterministic") {
    BenchPlan plan;
    plan.deltas = {3, 4};
    plan.sizes = {50, 100};
    plan.trials = 2;
    plan.seed = 4;
    auto solo = bench::run_bench(plan, 1);
    auto pooled = bench::run_bench(plan, 4);
    REQUIRE(solo.size() == pooled.size());
    for (std::size_t i = 0; i < solo.size(); ++i) {
        CHECK(solo[i].delta == pooled[i].delta);
        CHECK(solo[i].n == pooled[i].n);
        CHECK(solo[i].trial == pooled[i].trial);
        CHECK(solo[i].steps == pooled[i].steps);
        CHECK(solo[i].matched == pooled[i].matched);
    }
}

TEST_CASE("infeasible cells are rejected") {
    BenchPlan plan;
    plan.deltas = {3};
    plan.sizes = {5};
    CHECK_THROWS_WITH_AS(bench::run_bench(plan), doctest::Contains("infeasible"), Error);
    plan.deltas = {10};
    plan.sizes = {8};
    CHECK_THROWS_AS(bench::run_bench(plan), Error);
}

TEST_CASE("csv header and shape") {
    BenchPlan plan;
    plan.deltas = {3};
    plan.sizes = {20};
    plan.trials = 1;
    auto records = bench::run_bench(plan);
    std::string csv = bench::records_to_csv(records);
    CHECK(csv.starts_with(
        "delta,n,trial,seed,wall_micros,matched,augmentations,steps,budget_exceeded\n"));
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
}

TEST_CASE("svg plot is well-formed and deterministic") {
    BenchPlan plan;
    plan.deltas = {3};
    plan.sizes = {20};
    plan.trials = 1;
    auto records = bench::run_bench(plan);
    std::string svg = bench::emit_plot(records);
    CHECK(xml_well_formed(svg));
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(bench::emit_plot(records) == svg);

    records[0].wall_micros = 123.0;  // timing value must not be re-measured
    std::string svg2 = bench::emit_plot(records);
    CHECK(xml_well_formed(svg2));

    CHECK_THROWS_AS(bench::emit_plot({}), Error);
}

TEST_CASE("multi-series plot has monotone series and a legend per degree") {
    std::vector<BenchRecord> records;
    for (int delta : {3, 4, 5})
        for (int n : {100, 200, 400}) {
            BenchRecord r;
            r.delta = delta;
            r.n = n;
            r.wall_micros = 0.5 * delta * n * n;
            records.push_back(r);
        }
    std::string svg = bench::emit_plot(records);
    CHECK(xml_well_formed(svg));
    CHECK(svg.find("delta=3") != std::string::npos);
    CHECK(svg.find("delta=4") != std::string::npos);
    CHECK(svg.find("delta=5") != std::string::npos);
}
