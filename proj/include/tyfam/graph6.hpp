#ifndef TYFAM_GRAPH6_HPP
#define TYFAM_GRAPH6_HPP

#include <tyfam/graph.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tyfam {

// graph6: N(n) followed by the upper triangle, column by column, in 6-bit
// groups offset by 63. Orders up to 62 use one byte; up to 258047 use '~'
// plus three bytes.

inline constexpr std::size_t graph6_max_order = 258047;

inline std::string graph6_encode(const Graph& g) {
  const std::size_t n = g.order();
  if (n > graph6_max_order)
    throw std::invalid_argument("graph6: order " + std::to_string(n) + " not supported");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + 63));
  }
  int acc = 0, filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline Graph graph6_decode(std::string_view line) {
  constexpr std::string_view header = ">>graph6<<";
  if (line.starts_with(header))
    line.remove_prefix(header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.remove_suffix(1);
  if (line.empty())
    throw std::invalid_argument("graph6: empty line");
  for (char ch : line)
    if (ch < 63 || ch > 126)
      throw std::invalid_argument("graph6: character out of range");

  auto value = [](char ch) { return static_cast<std::size_t>(ch - 63); };
  std::size_t n = 0;
  std::size_t pos = 0;
  if (line[0] != '~') {
    n = value(line[0]);
    pos = 1;
  } else if (line.size() >= 2 && line[1] == '~') {
    throw std::invalid_argument("graph6: order exceeds supported range");
  } else {
    if (line.size() < 4)
      throw std::invalid_argument("graph6: truncated order field");
    n = (value(line[1]) << 12) | (value(line[2]) << 6) | value(line[3]);
    if (n <= 62)
      throw std::invalid_argument("graph6: non-minimal order field");
    pos = 4;
  }
  const std::size_t bits = n * (n - (n > 0)) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (line.size() - pos != expected)
    throw std::invalid_argument("graph6: expected " + std::to_string(expected) +
                                " data bytes, got " + std::to_string(line.size() - pos));
  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++bit)
      if ((value(line[pos + bit / 6]) >> (5 - bit % 6)) & 1u)
        g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  if (bit % 6 != 0 && (value(line.back()) & ((1u << (6 - bit % 6)) - 1)) != 0)
    throw std::invalid_argument("graph6: nonzero padding bits");
  return g;
}

} // namespace tyfam

#endif
