#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "irr/digraph.hpp"

namespace irr {

/// Malformed input document; `line` is 1-based (0 when unknown).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Edge-list document: `n <count>`, then one `<u> <v>` per directed edge.
/// Lines starting with '#' and blank lines are ignored.
Digraph parse_edge_list(std::string_view text);

/// Same document read as the undirected edges of a tree.
std::pair<std::size_t, std::vector<UndirectedEdge>> parse_tree_edge_list(std::string_view text);

/// LF-terminated, edges in lexicographic order.
std::string serialize_edge_list(const Digraph& g);

struct DotGraph {
  Digraph graph;
  std::vector<std::string> names;  // label -> identifier from the file
};

/// `digraph [name] { a -> b; c; d -> e -> f; }` with bare or quoted
/// identifiers. Labels follow first appearance. No attributes or subgraphs.
DotGraph parse_dot(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace irr
