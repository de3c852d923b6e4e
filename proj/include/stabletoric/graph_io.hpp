#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "stabletoric/graph.hpp"

namespace stabletoric {

class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

// Text format: `p <n> <m>`, then m lines `e <i> <j>` (1-based), optional
// `l <i>` loop lines (loop graphs only), `c ...` comments.
SimpleGraph read_simple_graph(std::istream &in);
LoopGraph read_loop_graph(std::istream &in);
void write_graph(std::ostream &out, const SimpleGraph &g);
void write_graph(std::ostream &out, const LoopGraph &h);

SimpleGraph read_simple_graph_file(const std::string &path);

} // namespace stabletoric
