#include "mag/io.hpp"

#include <sstream>

namespace mag {

namespace {

bool validName(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

std::vector<std::string> splitWords(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> words;
    std::string w;
    while (in >> w) words.push_back(w);
    return words;
}

} // namespace

MixedGraph parseGraph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    bool sawVertices = false;
    std::vector<std::string> vertices;
    std::vector<EdgeSpec> edges;

    while (std::getline(in, line)) {
        ++lineNo;
        std::vector<std::string> words = splitWords(line);
        if (words.empty() || words[0][0] == '#') continue;
        if (words[0] == "vertices:") {
            if (sawVertices) throw ParseError(lineNo, "duplicate vertices: line");
            sawVertices = true;
            for (std::size_t i = 1; i < words.size(); ++i) {
                if (!validName(words[i]))
                    throw ParseError(lineNo, "invalid vertex name: " + words[i]);
                vertices.push_back(words[i]);
            }
            if (vertices.empty())
                throw ParseError(lineNo, "vertices: line names no vertices");
        } else if (words[0] == "edge") {
            if (!sawVertices)
                throw ParseError(lineNo, "edge line before vertices: line");
            if (words.size() != 4)
                throw ParseError(lineNo, "expected: edge NAME TOKEN NAME");
            const std::string& a = words[1];
            const std::string& token = words[2];
            const std::string& b = words[3];
            if (!validName(a)) throw ParseError(lineNo, "invalid vertex name: " + a);
            if (!validName(b)) throw ParseError(lineNo, "invalid vertex name: " + b);
            Mark atA, atB;
            if (token == "->") {
                atA = Mark::Tail;
                atB = Mark::Arrowhead;
            } else if (token == "<-") {
                atA = Mark::Arrowhead;
                atB = Mark::Tail;
            } else if (token == "<->") {
                atA = Mark::Arrowhead;
                atB = Mark::Arrowhead;
            } else if (token == "--") {
                atA = Mark::Tail;
                atB = Mark::Tail;
            } else {
                throw ParseError(lineNo, "unknown edge token: " + token);
            }
            edges.push_back({a, b, atA, atB});
        } else {
            throw ParseError(lineNo, "unrecognized line: " + words[0]);
        }
    }
    if (!sawVertices) throw ParseError(lineNo, "missing vertices: line");
    return buildGraph(vertices, edges);
}

std::string serializeGraph(const MixedGraph& g) {
    std::ostringstream out;
    out << "vertices:";
    for (const std::string& v : g.vertices()) out << " " << v;
    out << "\n";
    for (const auto& [pair, marks] : g.edgeMap()) {
        const char* token;
        if (marks.atFirst == Mark::Tail && marks.atSecond == Mark::Arrowhead)
            token = "->";
        else if (marks.atFirst == Mark::Arrowhead && marks.atSecond == Mark::Tail)
            token = "<-";
        else if (marks.atFirst == Mark::Arrowhead && marks.atSecond == Mark::Arrowhead)
            token = "<->";
        else
            token = "--";
        out << "edge " << pair.first << " " << token << " " << pair.second << "\n";
    }
    return out.str();
}

std::string dotExport(const MixedGraph& g) {
    std::ostringstream out;
    out << "digraph G {\n";
    out << "  edge [dir=both];\n";
    for (const std::string& v : g.vertices()) out << "  " << v << ";\n";
    for (const auto& [pair, marks] : g.edgeMap()) {
        const char* tail = marks.atFirst == Mark::Arrowhead ? "normal" : "none";
        const char* head = marks.atSecond == Mark::Arrowhead ? "normal" : "none";
        out << "  " << pair.first << " -> " << pair.second << " [arrowtail=" << tail
            << ", arrowhead=" << head << "];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace mag
