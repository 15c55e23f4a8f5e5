#include "trunkmatch/trunk_search.hpp"

#include <sstream>

namespace trunkmatch {

const char* event_name(EventKind k) {
    switch (k) {
        case EventKind::Init: return "Init";
        case EventKind::Grow: return "Grow";
        case EventKind::OddCycle: return "OddCycle";
        case EventKind::EvenCycle: return "EvenCycle";
        case EventKind::DeadEnd: return "DeadEnd";
        case EventKind::Detour: return "Detour";
        case EventKind::Augment: return "Augment";
        case EventKind::Fail: return "Fail";
        case EventKind::BudgetExceeded: return "BudgetExceeded";
    }
    return "?";
}

std::vector<Sprout> sprout_set(const Graph& g, const Matching& m, VertexId v) {
    std::vector<Sprout> out;
    for (VertexId u : g.neighbors(v))
        if (m.mate(v) != u) out.push_back({v, u});
    return out;
}

Trunk::Trunk(const Graph& g, const Matching& m, VertexId root, bool prefer_free_tips)
    : graph_(&g),
      matching_(&m),
      root_(root),
      prefer_free_tips_(prefer_free_tips),
      position_(g.vertex_count(), -1) {
    if (root < 0 || root >= g.vertex_count()) throw Error("search root out of range");
    if (m.is_matched(root)) throw Error("search root " + g.label(root) + " is matched");
    if (g.degree(root) == 0) throw Error("search root " + g.label(root) + " is isolated");
}

void Trunk::append(VertexId v) {
    position_[v] = static_cast<int>(path_.size());
    path_.push_back({v, position_[v] % 2});
    if (path_.size() > max_path_) max_path_ = path_.size();
}

void Trunk::truncate_to(int position) {
    while (static_cast<int>(path_.size()) - 1 > position) {
        position_[path_.back().vertex] = -1;
        path_.pop_back();
    }
}

std::vector<VertexId> Trunk::path_vertices() const {
    std::vector<VertexId> out;
    out.reserve(path_.size());
    for (const PathEntry& e : path_) out.push_back(e.vertex);
    return out;
}

SearchEvent Trunk::init_search() {
    for (VertexId x : graph_->neighbors(root_))
        if (!matching_->is_matched(x)) {
            append(root_);
            append(x);
            return {EventKind::Augment, EventPhase::Init, root_, x};
        }
    auto sprouts = sprout_set(*graph_, *matching_, root_);
    Sprout first = sprouts.front();
    append(root_);
    append(first.tip);
    for (std::size_t i = 1; i < sprouts.size(); ++i) {
        sprouts_.push_back(sprouts[i]);
    }
    if (sprouts_.size() > max_sprouts_) max_sprouts_ = sprouts_.size();
    return {EventKind::Init, EventPhase::Init, root_, first.tip};
}

SearchEvent Trunk::classify(VertexId x, SearchEvent ev) {
    ev.b = x;
    if (!matching_->is_matched(x) && !in_path(x)) {
        append(x);
        ev.kind = EventKind::Augment;
        return ev;
    }
    if (in_path(x)) {
        ev.kind = stored_parity(x) == 0 ? EventKind::OddCycle : EventKind::EvenCycle;
        return ev;
    }
    append(x);
    ev.kind = ev.phase == EventPhase::Grow ? EventKind::Grow : EventKind::Detour;
    return ev;
}

SearchEvent Trunk::grow_step() {
    const PathEntry tip = path_.back();
    if (tip.parity != 1 || !matching_->is_matched(tip.vertex))
        throw Error("internal: grow step from a non-matched or even tip");
    VertexId w = matching_->mate(tip.vertex);
    if (in_path(w)) throw Error("internal: mate of the tip is already on the path");

    auto nbrs = graph_->neighbors(w);
    std::size_t pick = nbrs.size();
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        VertexId x = nbrs[i];
        if (x == tip.vertex) continue;  // the matched edge is not a sprout
        if (pick == nbrs.size()) pick = i;
        if (prefer_free_tips_ && !matching_->is_matched(x) && !in_path(x)) {
            pick = i;
            break;
        }
    }
    if (pick == nbrs.size()) return {EventKind::DeadEnd, EventPhase::Grow, tip.vertex, w};

    append(w);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        if (i != pick && nbrs[i] != tip.vertex) sprouts_.push_back({w, nbrs[i]});
    if (sprouts_.size() > max_sprouts_) max_sprouts_ = sprouts_.size();

    SearchEvent ev{EventKind::Grow, EventPhase::Grow, w, kNoVertex, {}};
    return classify(nbrs[pick], ev);
}

SearchEvent Trunk::detour() {
    if (sprouts_.empty()) return {EventKind::Fail, EventPhase::Detour, root_, kNoVertex};
    Sprout s = sprouts_.back();
    sprouts_.pop_back();
    int pos = position_[s.root];
    // Roots enter P together with their sprouts and can only be cut away
    // after every deeper sprout has been popped, so the root is still here.
    if (pos < 0 || pos % 2 != 0) throw Error("internal: popped sprout root not an s-root");
    truncate_to(pos);

    SearchEvent ev{EventKind::Detour, EventPhase::Detour, s.root, kNoVertex, s};
    return classify(s.tip, ev);
}

void Trunk::check_invariants() const {
    const Graph& g = *graph_;
    const Matching& m = *matching_;
    if (path_.empty()) return;
    if (path_[0].vertex != root_ || path_[0].parity != 0)
        throw Error("invariant: path must start at the root with parity 0");
    std::vector<bool> seen(g.vertex_count(), false);
    for (std::size_t i = 0; i < path_.size(); ++i) {
        VertexId v = path_[i].vertex;
        if (seen[v]) throw Error("invariant: duplicate vertex on path");
        seen[v] = true;
        if (path_[i].parity != static_cast<int>(i % 2))
            throw Error("invariant: parity does not match path position");
        if (position_[v] != static_cast<int>(i)) throw Error("invariant: stale position index");
        if (i > 0) {
            VertexId u = path_[i - 1].vertex;
            if (!g.has_edge(u, v)) throw Error("invariant: path edge not in graph");
            bool matched = m.contains(u, v);
            if (matched != (i % 2 == 0)) throw Error("invariant: path does not alternate");
        }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (position_[v] >= 0 && (!seen[v] || path_[position_[v]].vertex != v))
            throw Error("invariant: position index out of sync");
    int last_pos = 0;
    for (const Sprout& s : sprouts_) {
        int pos = position_[s.root];
        if (pos < 0 || pos % 2 != 0) throw Error("invariant: sprout root not an s-root in P");
        if (pos < last_pos) throw Error("invariant: sprout roots out of stack order");
        last_pos = pos;
        if (!g.has_edge(s.root, s.tip) || m.contains(s.root, s.tip))
            throw Error("invariant: sprout is not a free edge");
    }
    if (path_.size() > static_cast<std::size_t>(g.vertex_count()))
        throw Error("invariant: path larger than vertex count");
    if (sprouts_.size() > static_cast<std::size_t>(g.edge_count()))
        throw Error("invariant: sprout stack larger than edge count");
}

namespace {

std::string render_path(const Trunk& t, const SearchEvent& ev) {
    const Graph& g = t.graph();
    std::ostringstream out;
    bool first = true;
    for (const PathEntry& e : t.path()) {
        if (!first) out << " ";
        out << g.label(e.vertex) << " " << e.parity;
        first = false;
    }
    if (ev.kind == EventKind::OddCycle || ev.kind == EventKind::EvenCycle)
        out << " " << g.label(ev.b) << " 1";
    return out.str();
}

std::string render_sprouts(const Trunk& t) {
    if (t.sprouts().empty()) return "-";
    const Graph& g = t.graph();
    std::ostringstream out;
    bool first = true;
    for (const Sprout& s : t.sprouts()) {
        if (!first) out << ";";
        out << "<" << g.label(s.root) << "," << g.label(s.tip) << ">";
        first = false;
    }
    return out.str();
}

std::string render_path_list(const Trunk& t) {
    const Graph& g = t.graph();
    std::ostringstream out;
    bool first = true;
    for (const PathEntry& e : t.path()) {
        if (!first) out << ",";
        out << g.label(e.vertex);
        first = false;
    }
    return out.str();
}

std::string make_remark(const Trunk& t, const SearchEvent& ev) {
    const Graph& g = t.graph();
    auto lbl = [&](VertexId v) { return g.label(v); };
    std::ostringstream out;
    switch (ev.phase) {
        case EventPhase::Init:
            if (ev.kind == EventKind::Augment)
                out << "free neighbor " << lbl(ev.b) << "; augmenting path "
                    << render_path_list(t) << " identified";
            else
                out << "start at free vertex " << lbl(ev.a) << "; add " << lbl(ev.a) << ", "
                    << lbl(ev.b) << " to P";
            break;
        case EventPhase::Grow:
            switch (ev.kind) {
                case EventKind::DeadEnd:
                    out << "dead end at " << lbl(ev.b);
                    break;
                case EventKind::OddCycle:
                    out << "add " << lbl(ev.a) << " to P; odd cycle at " << lbl(ev.b);
                    break;
                case EventKind::EvenCycle:
                    out << "add " << lbl(ev.a) << " to P; even cycle at " << lbl(ev.b);
                    break;
                case EventKind::Augment:
                    out << "add " << lbl(ev.a) << ", " << lbl(ev.b)
                        << " to P; augmenting path " << render_path_list(t) << " identified";
                    break;
                default:
                    out << "add " << lbl(ev.a) << ", " << lbl(ev.b) << " to P";
                    break;
            }
            break;
        case EventPhase::Detour:
            if (ev.kind == EventKind::Fail) {
                out << "sprout stack empty: no augmenting path from " << lbl(t.root());
                break;
            }
            out << "pop <" << lbl(ev.popped.root) << "," << lbl(ev.popped.tip)
                << ">, cut P after " << lbl(ev.popped.root) << "; ";
            switch (ev.kind) {
                case EventKind::OddCycle:
                    out << "odd cycle at " << lbl(ev.b);
                    break;
                case EventKind::EvenCycle:
                    out << "even cycle at " << lbl(ev.b);
                    break;
                case EventKind::Augment:
                    out << "augmenting path " << render_path_list(t) << " identified";
                    break;
                default:
                    out << "add " << lbl(ev.b) << " to P";
                    break;
            }
            break;
    }
    return out.str();
}

void validate_augmenting(const Graph& g, const Matching& m, const std::vector<VertexId>& p) {
    if (p.size() < 2 || p.size() % 2 != 0)
        throw Error("internal: augmenting path has odd length");
    if (m.is_matched(p.front()) || m.is_matched(p.back()))
        throw Error("internal: augmenting path endpoint is matched");
    std::vector<bool> seen(g.vertex_count(), false);
    for (VertexId v : p) {
        if (seen[v]) throw Error("internal: augmenting path revisits a vertex");
        seen[v] = true;
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (!g.has_edge(p[i], p[i + 1])) throw Error("internal: path edge not in graph");
        if (m.contains(p[i], p[i + 1]) != (i % 2 == 1))
            throw Error("internal: augmenting path does not alternate");
    }
}

}  // namespace

std::string render_trace(const std::vector<TraceRecord>& records) {
    std::ostringstream out;
    for (const TraceRecord& r : records)
        out << r.step << "\t" << event_name(r.kind) << "\t" << r.path << "\t" << r.sprouts
            << "\t" << r.remark << "\n";
    return out.str();
}

std::uint64_t default_budget(const Graph& g) {
    return 4ULL * (static_cast<std::uint64_t>(g.edge_count()) + 1) *
           (static_cast<std::uint64_t>(g.vertex_count()) + 1);
}

SearchOutcome search(const Graph& g, const Matching& m, VertexId v0,
                     const SearchOptions& options) {
    std::uint64_t budget = options.budget ? options.budget : default_budget(g);
    Trunk trunk(g, m, v0, options.prefer_free_tips);
    SearchOutcome out;

    auto record = [&](const SearchEvent& ev) {
        ++out.steps_used;
        if (options.trace)
            out.trace.push_back({static_cast<int>(out.steps_used), ev.kind,
                                 render_path(trunk, ev), render_sprouts(trunk),
                                 make_remark(trunk, ev)});
        if (options.validate) trunk.check_invariants();
    };

    SearchEvent ev = trunk.init_search();
    record(ev);
    while (true) {
        if (ev.kind == EventKind::Augment) {
            out.result = SearchResult::AugmentingPath;
            out.augmenting_path = trunk.path_vertices();
            validate_augmenting(g, m, out.augmenting_path);
            break;
        }
        if (ev.kind == EventKind::Fail) {
            out.result = SearchResult::NoAugmentingPath;
            break;
        }
        if (out.steps_used >= budget) {
            out.result = SearchResult::BudgetExceeded;
            if (options.trace)
                out.trace.push_back({static_cast<int>(out.steps_used + 1),
                                     EventKind::BudgetExceeded, render_path(trunk, ev),
                                     render_sprouts(trunk), "step budget exhausted"});
            break;
        }
        bool grow = ev.kind == EventKind::Init || ev.kind == EventKind::Grow ||
                    ev.kind == EventKind::Detour;
        ev = grow ? trunk.grow_step() : trunk.detour();
        record(ev);
    }
    out.max_path_entries = trunk.max_path_entries();
    out.max_sprout_entries = trunk.max_sprout_entries();
    return out;
}

}  // namespace trunkmatch
