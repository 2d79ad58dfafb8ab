#include "triadic/edge_list.hpp"

#include <fstream>

namespace triadic {

Digraph load_digraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open input file: " + path);
  const auto pairs = parse_edge_list(in);
  return build_digraph(pairs);
}

}  // namespace triadic
