#ifndef TRUNKMATCH_TRUNK_SEARCH_HPP
#define TRUNKMATCH_TRUNK_SEARCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "trunkmatch/graph.hpp"

namespace trunkmatch {

enum class EventKind {
    Init,
    Grow,
    OddCycle,
    EvenCycle,
    DeadEnd,
    Detour,
    Augment,
    Fail,
    BudgetExceeded,
};

const char* event_name(EventKind k);

/// Which routine produced an event; selects the remark wording.
enum class EventPhase { Init, Grow, Detour };

struct PathEntry {
    VertexId vertex;
    int parity;  // distance from the root mod 2; equals position mod 2
};

/// A free edge held in reserve at an even-parity path vertex (its root).
struct Sprout {
    VertexId root;
    VertexId tip;
    bool operator==(const Sprout&) const = default;
};

struct SearchEvent {
    EventKind kind;
    EventPhase phase;
    VertexId a = kNoVertex;  // grow: appended s-root; detour/deadend: see remark
    VertexId b = kNoVertex;  // selected/offending tip, or the dead-end vertex
    Sprout popped{kNoVertex, kNoVertex};  // detour-phase events only
};

/// All free edges at v, in adjacency order. Stateless: tips already on the
/// path are not filtered here (sprouts are pushed statically and
/// re-classified when popped).
std::vector<Sprout> sprout_set(const Graph& g, const Matching& m, VertexId v);

/// The search state T = {P, S}: a directional alternating path grown from
/// one free vertex, plus the stack of sprouts reserved for detours.
///
/// The duplicate vertex of a cycle detection is never stored in P; the event
/// carries the offending edge and the trace renders it, so printed states
/// match the duplicate-appending presentation.
class Trunk {
public:
    Trunk(const Graph& g, const Matching& m, VertexId root, bool prefer_free_tips = false);

    /// Starts the trunk. If some neighbor of the root is free this
    /// short-circuits to Augment (a length-1 augmenting path, first free
    /// neighbor in adjacency order). Otherwise P = [root, u] for the first
    /// sprout tip u, and the remaining sprouts are pushed.
    SearchEvent init_search();

    /// One growing step from the current odd tip: follow the matched edge to
    /// w = mate(tip), then classify w's first sprout. DeadEnd when w has no
    /// sprouts (w is not appended). Otherwise w is appended as an s-root,
    /// its remaining sprouts are pushed, and the selected tip yields Grow,
    /// Augment, or a cycle event (stored parity even = odd cycle, odd = even
    /// cycle).
    SearchEvent grow_step();

    /// One pruning step: pop the last sprout <r,t>, cut P strictly after r,
    /// and re-classify t exactly like a grow tip (it may have entered P
    /// since it was pushed, cascading into another cycle event). Fail when
    /// the stack is empty.
    SearchEvent detour();

    VertexId root() const { return root_; }
    const std::vector<PathEntry>& path() const { return path_; }
    const std::vector<Sprout>& sprouts() const { return sprouts_; }
    std::vector<VertexId> path_vertices() const;

    bool in_path(VertexId v) const { return position_[v] >= 0; }
    int stored_parity(VertexId v) const { return position_[v] < 0 ? -1 : position_[v] % 2; }

    std::size_t max_path_entries() const { return max_path_; }
    std::size_t max_sprout_entries() const { return max_sprouts_; }

    /// Full structural validation of P and S; throws on violation.
    void check_invariants() const;

    const Graph& graph() const { return *graph_; }

private:
    void append(VertexId v);
    void truncate_to(int position);  // keep entries [0 .. position]
    SearchEvent classify(VertexId x, SearchEvent ev);

    const Graph* graph_;
    const Matching* matching_;
    VertexId root_;
    bool prefer_free_tips_;
    std::vector<PathEntry> path_;
    std::vector<Sprout> sprouts_;
    std::vector<int> position_;
    std::size_t max_path_ = 0;
    std::size_t max_sprouts_ = 0;
};

struct TraceRecord {
    int step;
    EventKind kind;
    std::string path;
    std::string sprouts;
    std::string remark;
};

/// TSV rendering: `step<TAB>event<TAB>path<TAB>sprouts<TAB>remark` per line.
std::string render_trace(const std::vector<TraceRecord>& records);

enum class SearchResult { AugmentingPath, NoAugmentingPath, BudgetExceeded };

struct SearchOutcome {
    SearchResult result = SearchResult::NoAugmentingPath;
    std::vector<VertexId> augmenting_path;  // set when result is AugmentingPath
    std::vector<TraceRecord> trace;
    std::uint64_t steps_used = 0;
    std::size_t max_path_entries = 0;
    std::size_t max_sprout_entries = 0;
};

struct SearchOptions {
    bool prefer_free_tips = false;
    std::uint64_t budget = 0;  // 0 = default_budget(g)
    bool trace = false;
    bool validate = false;  // run check_invariants after every event
};

/// Step budget per search. The grow/prune loop has no proven step bound, so
/// a search that exceeds this reports BudgetExceeded instead of spinning.
std::uint64_t default_budget(const Graph& g);

/// Runs the grow/prune loop from free vertex v0 until an augmenting path is
/// found, the sprout stack empties, or the budget is exhausted. A returned
/// path is validated (both endpoints free, strict alternation, distinct
/// vertices).
SearchOutcome search(const Graph& g, const Matching& m, VertexId v0,
                     const SearchOptions& options = {});

}  // namespace trunkmatch

#endif
