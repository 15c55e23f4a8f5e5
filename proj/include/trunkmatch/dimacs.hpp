#ifndef TRUNKMATCH_DIMACS_HPP
#define TRUNKMATCH_DIMACS_HPP

#include <iosfwd>
#include <string>

#include "trunkmatch/graph.hpp"

namespace trunkmatch {

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// DIMACS edge format: `c` comments, one `p edge <n> <m>` header, `m` lines
/// `e <u> <v>` with 1-based endpoints, plus optional `l <u> <name>` label
/// lines. Adjacency order is the order of first appearance in the file.
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs(const std::string& text);

/// Inverse of parse_dimacs, including adjacency order: parsing the output
/// reproduces the graph exactly.
std::string write_dimacs(const Graph& g);

/// Matching file: one `<u> <v>` pair per line (1-based), `#` comments.
/// Validated against the host graph.
Matching parse_matching(std::istream& in, const Graph& g);
Matching parse_matching(const std::string& text, const Graph& g);
std::string write_matching(const Matching& m);

}  // namespace trunkmatch

#endif
