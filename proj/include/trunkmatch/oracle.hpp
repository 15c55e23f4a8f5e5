#ifndef TRUNKMATCH_ORACLE_HPP
#define TRUNKMATCH_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trunkmatch/graph.hpp"

namespace trunkmatch::oracle {

// Desk-scale ground truth by exhaustive recursion. Deliberately shares no
// code with the solver beyond the Graph/Matching types: the whole point is
// an independent answer. Size guards are hard errors, never warnings.

struct NuResult {
    int nu = 0;
    Matching witness;
};

/// Exact maximum matching cardinality with one optimal witness, via
/// branch-on-an-edge recursion with a trivial upper-bound prune. n <= 24.
NuResult nu_bruteforce(const Graph& g);

/// Exhaustive DFS over all simple alternating paths from the free vertex v0;
/// returns a witness augmenting path if one exists. n <= 24.
std::optional<std::vector<VertexId>> has_augmenting_path_exhaustive(const Graph& g,
                                                                    const Matching& m,
                                                                    VertexId v0);

/// |m| == nu(g), with m validated first. n <= 24.
bool verify_maximum(const Graph& g, const Matching& m);

struct GEDecomposition {
    std::vector<VertexId> d;  // missed by some maximum matching
    std::vector<VertexId> a;  // neighbors of D outside D
    std::vector<VertexId> c;  // the rest
    int nu = 0;
};

/// D = {v : nu(g - v) = nu(g)}, A = N(D) \ D, C the rest. n <= 20 (computes
/// nu on every vertex-deleted subgraph).
GEDecomposition gallai_edmonds_bruteforce(const Graph& g);

/// Structural validation of a decomposition: every component of G[C] is even
/// and perfectly matched by a witness maximum matching; every component of
/// G[D] is odd, factor-critical, and near-perfectly matched by the witness.
/// Returns an error description, or nullopt when everything holds.
std::optional<std::string> validate_gallai_edmonds(const Graph& g, const GEDecomposition& ge);

/// Writes `<hash>.dimacs` and `<hash>.report.txt` describing a differential
/// mismatch; returns the dimacs path.
std::string write_counterexample(const std::string& directory, const Graph& g,
                                 std::uint64_t seed, int matcher_size,
                                 const NuResult& expected);

}  // namespace trunkmatch::oracle

#endif
