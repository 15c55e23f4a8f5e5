#ifndef TRUNKMATCH_FIXTURES_HPP
#define TRUNKMATCH_FIXTURES_HPP

#include <string>
#include <vector>

#include "trunkmatch/graph.hpp"

namespace trunkmatch {

struct Fixture {
    Graph graph;
    Matching initial_matching;
};

/// Named example graphs with their initial matchings. The fig* fixtures pin
/// adjacency order precisely; the golden search traces depend on it. The
/// `_alt` variants differ only in adjacency order and steer the search into
/// the alternate branch.
Fixture fixture(const std::string& name);

const std::vector<std::string>& fixture_names();

}  // namespace trunkmatch

#endif
