#ifndef TYFAM_MOVES_HPP
#define TYFAM_MOVES_HPP

#include <tyfam/certificate.hpp>
#include <tyfam/graph.hpp>

#include <algorithm>
#include <stdexcept>
#include <variant>
#include <vector>

namespace tyfam {

enum class MoveKind { triangle_to_y, y_to_triangle };

/// One move between two isomorphism classes. Parent and child share size.
struct MoveRecord {
  MoveKind kind;
  std::variant<Triangle, Vertex> site;
  Certificate parent_cert;
  Certificate child_cert;
};

/**
 * Triangle-Y: deletes the edges of triangle t and joins a new vertex,
 * numbered g.order(), to its three corners.
 */
inline Graph apply_delta_y(const Graph& g, const Triangle& t) {
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex v : {t.v1, t.v2, t.v3})
    if (v < 0 || v >= n)
      throw std::invalid_argument("triangle vertex out of range");
  if (!(t.v1 < t.v2 && t.v2 < t.v3))
    throw std::invalid_argument("triangle vertices must be distinct and sorted");
  if (!g.adjacent(t.v1, t.v2) || !g.adjacent(t.v2, t.v3) || !g.adjacent(t.v1, t.v3))
    throw std::invalid_argument("not a triangle of the graph");
  Graph h = g.with_extra_vertex();
  h.remove_edge(t.v1, t.v2);
  h.remove_edge(t.v2, t.v3);
  h.remove_edge(t.v1, t.v3);
  for (Vertex v : {t.v1, t.v2, t.v3})
    h.add_edge(n, v);
  return h;
}

/**
 * Y-triangle: deletes a degree-3 vertex v with independent neighborhood and
 * joins its three neighbors pairwise. Higher vertex ids shift down by one.
 */
inline Graph apply_y_delta(const Graph& g, Vertex v) {
  if (v < 0 || static_cast<std::size_t>(v) >= g.order())
    throw std::invalid_argument("vertex out of range");
  auto nb = g.neighbors(v);
  if (nb.size() != 3)
    throw std::invalid_argument("Y-triangle needs a degree-3 vertex");
  if (!independent(g, nb))
    throw std::invalid_argument("Y-triangle at a vertex whose neighborhood has an edge");
  Graph h = g.without_vertex(v);
  for (Vertex& u : nb)
    if (u > v)
      --u;
  h.add_edge(nb[0], nb[1]);
  h.add_edge(nb[1], nb[2]);
  h.add_edge(nb[0], nb[2]);
  return h;
}

/// Which moves a frontier step may use.
enum class MoveSet { both, triangle_to_y_only };

/// Sorted, deduplicated certificates of every graph one move away from g.
inline std::vector<Certificate> one_move_neighbors(const Graph& g,
                                                   MoveSet moves = MoveSet::both) {
  std::vector<Certificate> out;
  for (const Triangle& t : triangles(g))
    out.push_back(canonical_certificate(apply_delta_y(g, t)));
  if (moves == MoveSet::both)
    for (Vertex v : eligible_y_vertices(g))
      out.push_back(canonical_certificate(apply_y_delta(g, v)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Every single move from g, one record per site.
inline std::vector<MoveRecord> move_records(const Graph& g) {
  std::vector<MoveRecord> out;
  const Certificate parent = canonical_certificate(g);
  for (const Triangle& t : triangles(g))
    out.push_back({MoveKind::triangle_to_y, t, parent,
                   canonical_certificate(apply_delta_y(g, t))});
  for (Vertex v : eligible_y_vertices(g))
    out.push_back({MoveKind::y_to_triangle, v, parent,
                   canonical_certificate(apply_y_delta(g, v))});
  return out;
}

} // namespace tyfam

#endif
