#ifndef TRUNKMATCH_GENERATORS_HPP
#define TRUNKMATCH_GENERATORS_HPP

#include <cstdint>

#include "trunkmatch/graph.hpp"

namespace trunkmatch {

/// Random delta-regular simple graph on n vertices via the pairing
/// (configuration) model: pair up delta stubs per vertex, reject samples with
/// loops or multi-edges, retry with a derived sub-seed. Deterministic per
/// seed. Throws on infeasible (n*delta odd, delta >= n) input and when the
/// rejection budget runs out.
Graph gen_random_regular(VertexId n, int delta, std::uint64_t seed);

/// Erdos-Renyi G(n, p) sample, deterministic per seed. Isolated vertices are
/// pruned; when pruning happens, each surviving vertex is labeled with its
/// original 1-based index.
Graph gen_gnp(VertexId n, double p, std::uint64_t seed);

}  // namespace trunkmatch

#endif
