#include "trunkmatch/dimacs.hpp"

#include <set>
#include <sstream>

namespace trunkmatch {

namespace {

// Splits a line into whitespace-separated tokens.
std::vector<std::string> tokens(const std::string& line) {
    std::istringstream iss(line);
    std::vector<std::string> out;
    std::string t;
    while (iss >> t) out.push_back(t);
    return out;
}

long parse_long(const std::string& t, int line, const char* what) {
    try {
        size_t pos = 0;
        long v = std::stol(t, &pos);
        if (pos != t.size()) throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, std::string("malformed ") + what + " '" + t + "'");
    }
}

}  // namespace

Graph parse_dimacs(std::istream& in) {
    long n = -1, m = -1;
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    std::set<Edge> seen;
    bool any_label = false;

    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto tok = tokens(line);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "p") {
            if (n >= 0) throw ParseError(ln, "duplicate header");
            if (tok.size() != 4 || tok[1] != "edge")
                throw ParseError(ln, "malformed header; expected 'p edge <n> <m>'");
            n = parse_long(tok[2], ln, "vertex count");
            m = parse_long(tok[3], ln, "edge count");
            if (n < 0 || m < 0) throw ParseError(ln, "negative count in header");
            labels.assign(n, "");
        } else if (tok[0] == "e") {
            if (n < 0) throw ParseError(ln, "edge before header");
            if (tok.size() != 3) throw ParseError(ln, "malformed edge line");
            long u = parse_long(tok[1], ln, "vertex index");
            long v = parse_long(tok[2], ln, "vertex index");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(ln, "vertex index out of range");
            if (u == v) throw ParseError(ln, "loop edge " + tok[1]);
            Edge e(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
            if (!seen.insert(e).second)
                throw ParseError(ln, "duplicate edge " + tok[1] + " " + tok[2]);
            edges.push_back(e);
        } else if (tok[0] == "l") {
            if (n < 0) throw ParseError(ln, "label before header");
            if (tok.size() != 3) throw ParseError(ln, "malformed label line");
            long u = parse_long(tok[1], ln, "vertex index");
            if (u < 1 || u > n) throw ParseError(ln, "vertex index out of range");
            labels[u - 1] = tok[2];
            any_label = true;
        } else {
            throw ParseError(ln, "unknown line type '" + tok[0] + "'");
        }
    }
    if (n < 0) throw ParseError(ln, "missing 'p edge' header");
    if (static_cast<long>(edges.size()) != m)
        throw ParseError(ln, "header declares " + std::to_string(m) + " edges, file has " +
                                 std::to_string(edges.size()));
    if (!any_label) labels.clear();
    return Graph(static_cast<VertexId>(n), std::move(edges), std::move(labels));
}

Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

std::string write_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    if (g.has_labels())
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (!g.labels()[v].empty()) out << "l " << (v + 1) << " " << g.labels()[v] << "\n";
    for (const Edge& e : g.edges()) out << "e " << (e.u + 1) << " " << (e.v + 1) << "\n";
    return out.str();
}

Matching parse_matching(std::istream& in, const Graph& g) {
    Matching m(g.vertex_count());
    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto tok = tokens(line);
        if (tok.empty()) continue;
        if (tok.size() != 2) throw ParseError(ln, "malformed matching line");
        long u = parse_long(tok[0], ln, "vertex index");
        long v = parse_long(tok[1], ln, "vertex index");
        if (u < 1 || u > g.vertex_count() || v < 1 || v > g.vertex_count())
            throw ParseError(ln, "vertex index out of range");
        VertexId a = static_cast<VertexId>(u - 1), b = static_cast<VertexId>(v - 1);
        if (!g.has_edge(a, b)) throw ParseError(ln, "matching edge not in graph");
        try {
            m.add(a, b);
        } catch (const Error& e) {
            throw ParseError(ln, e.what());
        }
    }
    return m;
}

Matching parse_matching(const std::string& text, const Graph& g) {
    std::istringstream in(text);
    return parse_matching(in, g);
}

std::string write_matching(const Matching& m) {
    std::ostringstream out;
    for (const Edge& e : m.edges()) out << (e.u + 1) << " " << (e.v + 1) << "\n";
    return out.str();
}

}  // namespace trunkmatch
