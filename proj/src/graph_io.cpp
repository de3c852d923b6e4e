#include "stabletoric/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace stabletoric {

namespace {

LoopGraph parse(std::istream &in, bool allow_loops) {
    std::string line;
    int lineno = 0;
    int declared_edges = -1;
    int seen_edges = 0;
    LoopGraph h;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag) || tag[0] == 'c')
            continue;
        auto read_int = [&](const char *what) {
            long long v = 0;
            if (!(fields >> v))
                throw ParseError(lineno, std::string("expected ") + what);
            if (v < 0 || v > 1000000)
                throw ParseError(lineno, std::string(what) + " out of range");
            return static_cast<int>(v);
        };
        auto finish = [&] {
            std::string extra;
            if (fields >> extra)
                throw ParseError(lineno, "trailing token '" + extra + "'");
        };
        if (tag == "p") {
            if (have_header)
                throw ParseError(lineno, "duplicate header");
            const int n = read_int("vertex count");
            declared_edges = read_int("edge count");
            finish();
            if (n > kMaxVertices)
                throw ParseError(lineno, "at most " + std::to_string(kMaxVertices) + " vertices supported");
            h = LoopGraph(n);
            have_header = true;
        } else if (tag == "e") {
            if (!have_header)
                throw ParseError(lineno, "edge before header");
            const int i = read_int("endpoint");
            const int j = read_int("endpoint");
            finish();
            if (i < 1 || j < 1 || i > h.order() || j > h.order())
                throw ParseError(lineno, "endpoint outside 1.." + std::to_string(h.order()));
            if (i == j)
                throw ParseError(lineno, "loops must be given with 'l'");
            if (h.adjacent(i, j))
                throw ParseError(lineno, "duplicate edge");
            h.add_edge(i, j);
            ++seen_edges;
        } else if (tag == "l") {
            if (!allow_loops)
                throw ParseError(lineno, "loops are not allowed in a simple graph");
            if (!have_header)
                throw ParseError(lineno, "loop before header");
            const int v = read_int("loop vertex");
            finish();
            if (v < 1 || v > h.order())
                throw ParseError(lineno, "loop vertex out of range");
            if (h.has_loop(v))
                throw ParseError(lineno, "duplicate loop");
            h.add_loop(v);
        } else {
            throw ParseError(lineno, "unknown line type '" + tag + "'");
        }
    }
    if (!have_header)
        throw ParseError(lineno, "missing 'p' header");
    if (seen_edges != declared_edges)
        throw ParseError(lineno, "header declares " + std::to_string(declared_edges) + " edges, found " +
                                     std::to_string(seen_edges));
    return h;
}

} // namespace

SimpleGraph read_simple_graph(std::istream &in) { return parse(in, false).simple_part(); }

LoopGraph read_loop_graph(std::istream &in) { return parse(in, true); }

void write_graph(std::ostream &out, const SimpleGraph &g) {
    const auto edges = g.edges();
    out << "p " << g.order() << ' ' << edges.size() << '\n';
    for (auto [i, j] : edges)
        out << "e " << i << ' ' << j << '\n';
}

void write_graph(std::ostream &out, const LoopGraph &h) {
    write_graph(out, h.simple_part());
    for (int v : h.loops().vertices())
        out << "l " << v << '\n';
}

SimpleGraph read_simple_graph_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return read_simple_graph(in);
}

} // namespace stabletoric
