#ifndef TYFAM_GRAPH_HPP
#define TYFAM_GRAPH_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tyfam {

using Vertex = int;
using Word = std::uint64_t;

inline constexpr std::size_t word_bits = 64;

inline constexpr std::size_t words_for(std::size_t bits) noexcept {
  return (bits + word_bits - 1) / word_bits;
}

/**
 * Simple undirected graph on vertices 0..order-1 with one adjacency bitset
 * row per vertex. Rows are stored contiguously; each row holds
 * words_for(order) words.
 */
class Graph {
public:
  Graph() = default;

  explicit Graph(std::size_t order)
      : order_(order), words_(words_for(order)), bits_(order * words_, 0) {}

  static Graph from_edges(std::size_t order,
                          std::span<const std::pair<Vertex, Vertex>> edges) {
    Graph g(order);
    for (auto [u, v] : edges)
      g.add_edge(u, v);
    return g;
  }

  static Graph from_edges(std::size_t order,
                          std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    return from_edges(order, std::span<const std::pair<Vertex, Vertex>>(
                                 edges.begin(), edges.size()));
  }

  std::size_t order() const noexcept { return order_; }
  std::size_t words() const noexcept { return words_; }

  /// Edge count.
  std::size_t size() const noexcept {
    std::size_t twice = 0;
    for (Word w : bits_)
      twice += static_cast<std::size_t>(std::popcount(w));
    return twice / 2;
  }

  bool adjacent(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return (row(u)[v / word_bits] >> (v % word_bits)) & 1u;
  }

  std::size_t degree(Vertex v) const {
    check(v);
    std::size_t d = 0;
    for (Word w : row(v))
      d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }

  std::span<const Word> row(Vertex v) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    check(v);
    std::vector<Vertex> out;
    auto r = row(v);
    for (std::size_t k = 0; k < words_; ++k) {
      for (Word w = r[k]; w != 0; w &= w - 1)
        out.push_back(static_cast<Vertex>(k * word_bits + std::countr_zero(w)));
    }
    return out;
  }

  void add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v)
      throw std::invalid_argument("loops are not allowed");
    set_bit(u, v, true);
    set_bit(v, u, true);
  }

  void remove_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    set_bit(u, v, false);
    set_bit(v, u, false);
  }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < static_cast<Vertex>(order_); ++u)
      for (Vertex v : neighbors(u))
        if (u < v)
          out.emplace_back(u, v);
    return out;
  }

  /// Graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const Vertex> perm) const {
    if (perm.size() != order_)
      throw std::invalid_argument("permutation length does not match order");
    Graph out(order_);
    for (auto [u, v] : edges())
      out.add_edge(perm[u], perm[v]);
    return out;
  }

  /// Copy with one extra isolated vertex, numbered order().
  Graph with_extra_vertex() const {
    Graph out(order_ + 1);
    for (auto [u, v] : edges())
      out.add_edge(u, v);
    return out;
  }

  /// Copy with v deleted; vertices above v shift down by one.
  Graph without_vertex(Vertex v) const {
    check(v);
    Graph out(order_ - 1);
    for (auto [a, b] : edges()) {
      if (a == v || b == v)
        continue;
      out.add_edge(a > v ? a - 1 : a, b > v ? b - 1 : b);
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  void check(Vertex v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= order_)
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }

  void set_bit(Vertex u, Vertex v, bool on) {
    Word& w = bits_[static_cast<std::size_t>(u) * words_ + v / word_bits];
    const Word mask = Word{1} << (v % word_bits);
    w = on ? (w | mask) : (w & ~mask);
  }

  std::size_t order_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
};

/// Part sizes of a complete multipartite graph, sorted ascending.
class PartSpec {
public:
  PartSpec() = default;

  explicit PartSpec(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
      throw std::invalid_argument("part spec must have at least one part");
    for (int a : parts_)
      if (a < 1)
        throw std::invalid_argument("part sizes must be positive");
    std::sort(parts_.begin(), parts_.end());
  }

  PartSpec(std::initializer_list<int> parts) : PartSpec(std::vector<int>(parts)) {}

  /// Parses "2,3,6" (whitespace tolerated).
  static PartSpec parse(std::string_view text) {
    std::vector<int> parts;
    std::string item;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, item, ',')) {
      const auto first = item.find_first_not_of(" \t");
      const auto last = item.find_last_not_of(" \t");
      if (first == std::string::npos)
        throw std::invalid_argument("empty entry in part spec '" + std::string(text) + "'");
      item = item.substr(first, last - first + 1);
      std::size_t used = 0;
      long value = 0;
      try {
        value = std::stol(item, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad part size '" + item + "'");
      }
      if (used != item.size() || value > 1'000'000)
        throw std::invalid_argument("bad part size '" + item + "'");
      parts.push_back(static_cast<int>(value));
    }
    return PartSpec(std::move(parts));
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t count() const noexcept { return parts_.size(); }
  int largest() const { return parts_.back(); }

  std::size_t total() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i)
        out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  friend auto operator<=>(const PartSpec&, const PartSpec&) = default;

private:
  std::vector<int> parts_;
};

/// Three distinct vertices, sorted ascending.
struct Triangle {
  Vertex v1 = 0, v2 = 0, v3 = 0;

  static Triangle of(Vertex a, Vertex b, Vertex c) {
    std::array<Vertex, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2])
      throw std::invalid_argument("triangle vertices must be distinct");
    return {t[0], t[1], t[2]};
  }

  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

inline Graph complete_multipartite(const PartSpec& spec) {
  if (spec.count() == 0)
    throw std::invalid_argument("part spec must have at least one part");
  Graph g(spec.total());
  std::vector<int> part_of;
  part_of.reserve(spec.total());
  for (std::size_t p = 0; p < spec.count(); ++p)
    part_of.insert(part_of.end(), static_cast<std::size_t>(spec.parts()[p]),
                   static_cast<int>(p));
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v])
        g.add_edge(u, v);
  return g;
}

inline Graph complete_graph(std::size_t n) {
  return complete_multipartite(PartSpec(std::vector<int>(n, 1)));
}

/// All 3-cliques, lexicographically sorted.
inline std::vector<Triangle> triangles(const Graph& g) {
  std::vector<Triangle> out;
  const auto n = static_cast<Vertex>(g.order());
  std::vector<Word> common(g.words());
  for (Vertex u = 0; u < n; ++u) {
    auto ru = g.row(u);
    for (Vertex v : g.neighbors(u)) {
      if (v <= u)
        continue;
      auto rv = g.row(v);
      for (std::size_t k = 0; k < g.words(); ++k)
        common[k] = ru[k] & rv[k];
      for (std::size_t k = 0; k < g.words(); ++k) {
        for (Word w = common[k]; w != 0; w &= w - 1) {
          const auto x = static_cast<Vertex>(k * word_bits + std::countr_zero(w));
          if (x > v)
            out.push_back({u, v, x});
        }
      }
    }
  }
  return out;
}

/// True when no two of the given vertices are adjacent.
inline bool independent(const Graph& g, std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j]))
        return false;
  return true;
}

/// Degree-3 vertices whose neighborhood is an independent set, ascending.
inline std::vector<Vertex> eligible_y_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
    if (g.degree(v) != 3)
      continue;
    if (independent(g, g.neighbors(v)))
      out.push_back(v);
  }
  return out;
}

} // namespace tyfam

#endif
