#ifndef MAG_IO_HPP
#define MAG_IO_HPP

#include <string>

#include "mag/graph.hpp"

namespace mag {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line(line) {}
};

// Grammar: optional '#' comment lines; one "vertices:" line with
// space-separated names ([A-Za-z0-9_]+); then "edge NAME TOKEN NAME" lines
// with TOKEN in {->, <-, <->, --}.
MixedGraph parseGraph(const std::string& text);

// Canonical form: vertices sorted, edges sorted by canonical pair, the
// lexicographically smaller endpoint written first ("<-" when the arrow
// points at it).  parse(serialize(g)) == g.
std::string serializeGraph(const MixedGraph& g);

// DOT export: directed edges render with one arrowhead, bidirected with
// two, undirected with none.
std::string dotExport(const MixedGraph& g);

} // namespace mag

#endif
