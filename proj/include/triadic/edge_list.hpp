#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "triadic/digraph.hpp"
#include "triadic/errors.hpp"

namespace triadic {

// Edge-list text: one "u w" integer pair per line, '#' lines are comments,
// blank lines ignored, LF or CRLF. fn(u, w) is invoked per pair as the
// stream is consumed. Throws ParseError with a 1-based line number.
template <typename Fn>
void parse_edge_list(std::istream& in, Fn&& fn) {
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const char* p = line.data();
    const char* end = p + line.size();
    auto skip_ws = [&] {
      while (p != end && (*p == ' ' || *p == '\t')) ++p;
    };
    auto token = [&](int64_t& value) {
      auto [next, ec] = std::from_chars(p, end, value);
      if (ec != std::errc())
        throw ParseError(lineno, "expected an integer vertex label");
      p = next;
    };
    skip_ws();
    if (p == end || *p == '#') continue;
    int64_t u, w;
    token(u);
    skip_ws();
    token(w);
    skip_ws();
    if (p != end) throw ParseError(lineno, "trailing characters after the vertex pair");
    fn(u, w);
  }
  if (in.bad()) throw IoError("read failure while parsing edge list");
}

inline std::vector<std::pair<int64_t, int64_t>> parse_edge_list(std::istream& in) {
  std::vector<std::pair<int64_t, int64_t>> pairs;
  parse_edge_list(in, [&](int64_t u, int64_t w) { pairs.emplace_back(u, w); });
  return pairs;
}

// Opens, parses, and builds in one step. Throws IoError if the file cannot
// be opened.
Digraph load_digraph(const std::string& path);

}  // namespace triadic
