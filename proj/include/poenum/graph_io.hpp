#ifndef POENUM_GRAPH_IO_HPP
#define POENUM_GRAPH_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "poenum/graph.hpp"

namespace poe {

class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Text format: first line `n m`, then m lines `u v` (0-based). Duplicate
// lines are parallel edges; `#` starts a comment line.
MultiGraph read_graph(std::istream& in);
MultiGraph read_graph_file(const std::string& path);  // "-" means stdin
void write_graph(std::ostream& out, const MultiGraph& g);

bool is_simple(const MultiGraph& g);

}  // namespace poe

#endif
