#include "trunkmatch/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <thread>

#include "trunkmatch/generators.hpp"
#include "trunkmatch/matcher.hpp"
#include "trunkmatch/random.hpp"

namespace trunkmatch::bench {

std::vector<BenchRecord> run_bench(const BenchPlan& plan, int workers) {
    if (plan.trials < 1) throw Error("trials must be >= 1");
    if (workers < 1) throw Error("workers must be >= 1");
    for (int delta : plan.deltas)
        for (int n : plan.sizes) {
            if (delta >= n || (static_cast<std::int64_t>(n) * delta) % 2 != 0)
                throw Error("infeasible bench cell: n=" + std::to_string(n) +
                            " delta=" + std::to_string(delta));
        }

    std::vector<BenchRecord> records;
    for (int delta : plan.deltas)
        for (int n : plan.sizes)
            for (int trial = 0; trial < plan.trials; ++trial) {
                BenchRecord r;
                r.delta = delta;
                r.n = n;
                r.trial = trial;
                r.seed = mix_seed(plan.seed, static_cast<std::uint64_t>(delta),
                                  static_cast<std::uint64_t>(n),
                                  static_cast<std::uint64_t>(trial));
                records.push_back(r);
            }

    auto run_one = [&](BenchRecord& r) {
        Graph g = gen_random_regular(r.n, r.delta, r.seed);
        MatcherConfig cfg;
        cfg.budget_factor = plan.budget_factor;
        cfg.prefer_free_tips = plan.prefer_free_tips;
        auto start = std::chrono::steady_clock::now();
        MatchResult result = maximum_matching(g, cfg);
        auto stop = std::chrono::steady_clock::now();
        r.wall_micros =
            std::chrono::duration<double, std::micro>(stop - start).count();
        r.matched = result.matching.size();
        r.augmentations = result.augmentations;
        r.steps = result.total_steps;
        r.budget_exceeded = static_cast<int>(result.budget_exceeded.size());
        r.max_sprouts = result.max_sprout_entries;
    };

    if (workers == 1) {
        for (BenchRecord& r : records) run_one(r);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= records.size()) return;
                    run_one(records[i]);
                }
            });
        for (auto& t : pool) t.join();
    }
    return records;
}

SlopeFit fit_loglog_slope(std::span<const BenchRecord> records, int delta) {
    std::map<int, std::pair<double, int>> sums;  // n -> (sum micros, count)
    for (const BenchRecord& r : records)
        if (r.delta == delta) {
            sums[r.n].first += r.wall_micros;
            sums[r.n].second += 1;
        }
    if (sums.size() < 3) throw Error("need at least 3 distinct sizes to fit a slope");

    std::vector<double> xs, ys;
    for (auto& [n, acc] : sums) {
        double mean = acc.first / acc.second;
        if (mean <= 0.0) throw Error("non-positive mean timing");
        xs.push_back(std::log(static_cast<double>(n)));
        ys.push_back(std::log(mean));
    }
    double k = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    double intercept = (sy - slope * sx) / k;
    double ss_res = 0, ss_tot = 0, mean_y = sy / k;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double fit = slope * xs[i] + intercept;
        ss_res += (ys[i] - fit) * (ys[i] - fit);
        ss_tot += (ys[i] - mean_y) * (ys[i] - mean_y);
    }
    double r2 = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
    return {slope, r2};
}

std::string records_to_csv(std::span<const BenchRecord> records) {
    std::ostringstream out;
    out << "delta,n,trial,seed,wall_micros,matched,augmentations,steps,budget_exceeded\n";
    char buf[64];
    for (const BenchRecord& r : records) {
        std::snprintf(buf, sizeof buf, "%.3f", r.wall_micros);
        out << r.delta << "," << r.n << "," << r.trial << "," << r.seed << "," << buf << ","
            << r.matched << "," << r.augmentations << "," << r.steps << ","
            << r.budget_exceeded << "\n";
    }
    return out.str();
}

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

const char* kSeriesColors[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e"};

}  // namespace

std::string emit_plot(std::span<const BenchRecord> records) {
    if (records.empty()) throw Error("no records to plot");

    // delta -> n -> (median, min, max)
    std::map<int, std::map<int, std::vector<double>>> series;
    for (const BenchRecord& r : records) series[r.delta][r.n].push_back(r.wall_micros);

    double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
    for (auto& [delta, by_n] : series)
        for (auto& [n, micros] : by_n) {
            lo_x = std::min(lo_x, static_cast<double>(n));
            hi_x = std::max(hi_x, static_cast<double>(n));
            for (double v : micros) {
                lo_y = std::min(lo_y, std::max(v, 0.01));
                hi_y = std::max(hi_y, std::max(v, 0.01));
            }
        }
    if (hi_x == lo_x) hi_x = lo_x * 2;
    if (hi_y == lo_y) hi_y = lo_y * 2;

    const double width = 800, height = 560;
    const double ml = 80, mr = 30, mt = 40, mb = 60;
    auto x_of = [&](double n) {
        return ml + (std::log(n) - std::log(lo_x)) / (std::log(hi_x) - std::log(lo_x)) *
                        (width - ml - mr);
    };
    auto y_of = [&](double micros) {
        return height - mb -
               (std::log(micros) - std::log(lo_y)) / (std::log(hi_y) - std::log(lo_y)) *
                   (height - mt - mb);
    };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    svg << "<text x=\"" << width / 2
        << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
           "maximum matching running time vs n (log-log)</text>\n";
    svg << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr
        << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << height - mb << "\" stroke=\"black\"/>\n";

    // x ticks at each distinct n, y ticks at powers of ten
    std::map<int, bool> xs;
    for (auto& [delta, by_n] : series)
        for (auto& [n, _] : by_n) xs[n] = true;
    for (auto& [n, _] : xs) {
        double x = x_of(n);
        svg << "<line x1=\"" << fmt(x) << "\" y1=\"" << height - mb << "\" x2=\"" << fmt(x)
            << "\" y2=\"" << height - mb + 5 << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << fmt(x) << "\" y=\"" << height - mb + 20
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << n
            << "</text>\n";
    }
    for (double p = std::pow(10.0, std::floor(std::log10(lo_y))); p <= hi_y * 1.0001;
         p *= 10.0) {
        if (p < lo_y * 0.9999) continue;
        double y = y_of(p);
        svg << "<line x1=\"" << ml - 5 << "\" y1=\"" << fmt(y) << "\" x2=\"" << ml
            << "\" y2=\"" << fmt(y) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << ml - 8 << "\" y=\"" << fmt(y + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << fmt(p) << "</text>\n";
    }
    svg << "<text x=\"" << width / 2 << "\" y=\"" << height - 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">n</text>\n";
    svg << "<text x=\"20\" y=\"" << height / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 20 "
        << height / 2 << ")\">wall time (us)</text>\n";

    int color_index = 0;
    for (auto& [delta, by_n] : series) {
        const char* color = kSeriesColors[color_index % 5];
        std::ostringstream line;
        for (auto& [n, micros] : by_n) {
            std::vector<double> sorted(micros);
            std::sort(sorted.begin(), sorted.end());
            double median = sorted[sorted.size() / 2];
            double lo = sorted.front(), hi = sorted.back();
            double x = x_of(n);
            svg << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(y_of(std::max(lo, 0.01)))
                << "\" x2=\"" << fmt(x) << "\" y2=\"" << fmt(y_of(std::max(hi, 0.01)))
                << "\" stroke=\"" << color << "\" stroke-width=\"1\"/>\n";
            svg << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y_of(std::max(median, 0.01)))
                << "\" r=\"3\" fill=\"" << color << "\"/>\n";
            line << (line.tellp() > 0 ? " " : "") << fmt(x) << ","
                 << fmt(y_of(std::max(median, 0.01)));
        }
        svg << "<polyline points=\"" << line.str() << "\" fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.5\"/>\n";
        double ly = mt + 16.0 * color_index;
        svg << "<line x1=\"" << width - mr - 120 << "\" y1=\"" << fmt(ly) << "\" x2=\""
            << width - mr - 95 << "\" y2=\"" << fmt(ly) << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << width - mr - 90 << "\" y=\"" << fmt(ly + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\">delta=" << delta
            << "</text>\n";
        ++color_index;
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace trunkmatch::bench
