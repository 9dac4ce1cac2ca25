#ifndef TYFAM_CERTIFICATE_HPP
#define TYFAM_CERTIFICATE_HPP

#include <tyfam/graph.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tyfam {

/**
 * Canonical byte string of a graph: a two byte big-endian order prefix
 * followed by the canonically relabeled upper triangle, packed column by
 * column (bit (i,j), i < j, in the order j = 1..n-1, i = 0..j-1), most
 * significant bit first. Two graphs are isomorphic iff their certificates
 * are equal. Byte order sorts certificates by graph order first.
 */
struct Certificate {
  std::string bytes;

  std::size_t order() const {
    if (bytes.size() < 2)
      throw std::invalid_argument("truncated certificate");
    return (static_cast<std::size_t>(static_cast<unsigned char>(bytes[0])) << 8) |
           static_cast<unsigned char>(bytes[1]);
  }

  friend bool operator==(const Certificate&, const Certificate&) = default;
  friend auto operator<=>(const Certificate&, const Certificate&) = default;
};

struct CertificateHash {
  std::size_t operator()(const Certificate& c) const noexcept {
    return std::hash<std::string>{}(c.bytes);
  }
};

namespace detail {

inline std::size_t upper_triangle_bits(std::size_t n) { return n * (n - (n > 0)) / 2; }

inline std::size_t certificate_length(std::size_t n) {
  return 2 + (upper_triangle_bits(n) + 7) / 8;
}

/// Individualization-refinement search for a canonical labeling.
class CanonicalSearch {
public:
  explicit CanonicalSearch(const Graph& g)
      : g_(g), n_(static_cast<int>(g.order())), words_(g.words()) {}

  /// Returns canon[k] = vertex placed at canonical position k.
  std::vector<Vertex> run() {
    if (n_ == 0)
      return {};
    add_twin_generators();

    State root;
    root.lab.resize(n_);
    std::iota(root.lab.begin(), root.lab.end(), 0);
    root.cell_of.assign(n_, 0);
    root.cell_size.assign(n_, 0);
    root.cell_size[0] = n_;
    refine(root, {0});
    std::vector<Vertex> prefix;
    search(root, prefix);
    return best_lab_;
  }

private:
  struct State {
    std::vector<Vertex> lab;     // vertices in cell order
    std::vector<int> cell_of;    // vertex -> start position of its cell
    std::vector<int> cell_size;  // start position -> cell size (0 elsewhere)
  };

  int popcount_and(Vertex v, const std::vector<Word>& mask) const {
    auto r = g_.row(v);
    int c = 0;
    for (std::size_t k = 0; k < words_; ++k)
      c += std::popcount(r[k] & mask[k]);
    return c;
  }

  // Splits cells until the partition is equitable. Splitter order and the
  // order of split pieces depend only on positions and neighbor counts, so
  // the result commutes with relabeling.
  void refine(State& s, std::deque<int> queue) const {
    std::vector<char> queued(n_, 0);
    for (int q : queue)
      queued[q] = 1;
    std::vector<Word> mask(words_);
    std::vector<int> count(n_);
    std::vector<std::pair<int, Vertex>> keyed;
    while (!queue.empty()) {
      const int split = queue.front();
      queue.pop_front();
      queued[split] = 0;
      std::fill(mask.begin(), mask.end(), 0);
      for (int p = split; p < split + s.cell_size[split]; ++p)
        mask[s.lab[p] / word_bits] |= Word{1} << (s.lab[p] % word_bits);

      for (int start = 0; start < n_;) {
        const int size = s.cell_size[start];
        if (size > 1) {
          bool uniform = true;
          const int c0 = popcount_and(s.lab[start], mask);
          count[s.lab[start]] = c0;
          for (int p = start + 1; p < start + size; ++p) {
            count[s.lab[p]] = popcount_and(s.lab[p], mask);
            uniform = uniform && count[s.lab[p]] == c0;
          }
          if (!uniform) {
            keyed.clear();
            for (int p = start; p < start + size; ++p)
              keyed.emplace_back(count[s.lab[p]], s.lab[p]);
            std::sort(keyed.begin(), keyed.end());
            int piece = start;
            for (int p = start; p < start + size; ++p) {
              const int i = p - start;
              if (i > 0 && keyed[i].first != keyed[i - 1].first) {
                s.cell_size[piece] = p - piece;
                piece = p;
              }
              s.lab[p] = keyed[i].second;
              s.cell_of[keyed[i].second] = piece;
            }
            s.cell_size[piece] = start + size - piece;
            for (int p = start; p < start + size; p += s.cell_size[p]) {
              if (!queued[p]) {
                queued[p] = 1;
                queue.push_back(p);
              }
            }
          }
        }
        start += size;
      }
    }
  }

  State individualize(const State& s, Vertex v) const {
    State t = s;
    const int start = s.cell_of[v];
    const int size = s.cell_size[start];
    auto it = std::find(t.lab.begin() + start, t.lab.begin() + start + size, v);
    std::iter_swap(t.lab.begin() + start, it);
    t.cell_size[start] = 1;
    t.cell_size[start + 1] = size - 1;
    for (int p = start + 1; p < start + size; ++p)
      t.cell_of[t.lab[p]] = start + 1;
    refine(t, {start});
    return t;
  }

  int target_cell(const State& s) const {
    int best = -1;
    for (int start = 0; start < n_; start += s.cell_size[start]) {
      const int size = s.cell_size[start];
      if (size > 1 && (best < 0 || size < s.cell_size[best]))
        best = start;
    }
    return best;
  }

  std::vector<Word> relabeled_rows(const std::vector<Vertex>& lab) const {
    std::vector<int> pos(n_);
    for (int i = 0; i < n_; ++i)
      pos[lab[i]] = i;
    std::vector<Word> rows(static_cast<std::size_t>(n_) * words_, 0);
    for (int i = 0; i < n_; ++i) {
      auto r = g_.row(lab[i]);
      for (std::size_t k = 0; k < words_; ++k)
        for (Word w = r[k]; w != 0; w &= w - 1) {
          const int j = pos[k * word_bits + std::countr_zero(w)];
          rows[i * words_ + j / word_bits] |= Word{1} << (j % word_bits);
        }
    }
    return rows;
  }

  void record_automorphism(const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
    std::vector<Vertex> gen(n_);
    bool identity = true;
    for (int i = 0; i < n_; ++i) {
      gen[from[i]] = to[i];
      identity = identity && from[i] == to[i];
    }
    if (!identity)
      generators_.push_back(std::move(gen));
  }

  void leaf(const State& s) {
    auto rows = relabeled_rows(s.lab);
    if (best_lab_.empty()) {
      best_lab_ = first_lab_ = s.lab;
      best_rows_ = first_rows_ = std::move(rows);
      return;
    }
    if (rows == first_rows_) {
      record_automorphism(first_lab_, s.lab);
      return;
    }
    if (rows == best_rows_) {
      record_automorphism(best_lab_, s.lab);
      return;
    }
    if (rows < best_rows_) {
      best_rows_ = std::move(rows);
      best_lab_ = s.lab;
    }
  }

  int find(std::vector<int>& parent, int x) const {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }

  // Orbits of the group generated by known automorphisms that fix every
  // vertex of the prefix.
  std::vector<int> stabilizer_orbits(const std::vector<Vertex>& prefix) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& gen : generators_) {
      bool fixes = true;
      for (Vertex p : prefix)
        if (gen[p] != p) {
          fixes = false;
          break;
        }
      if (!fixes)
        continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(parent, v), b = find(parent, gen[v]);
        if (a != b)
          parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v)
      parent[v] = find(parent, v);
    return parent;
  }

  void search(const State& s, std::vector<Vertex>& prefix) {
    const int cell = target_cell(s);
    if (cell < 0) {
      leaf(s);
      return;
    }
    std::vector<Vertex> candidates(s.lab.begin() + cell,
                                   s.lab.begin() + cell + s.cell_size[cell]);
    std::sort(candidates.begin(), candidates.end());
    std::vector<Vertex> done;
    for (Vertex x : candidates) {
      if (!done.empty()) {
        auto orbit = stabilizer_orbits(prefix);
        if (std::any_of(done.begin(), done.end(),
                        [&](Vertex y) { return orbit[y] == orbit[x]; }))
          continue;
      }
      State child = individualize(s, x);
      prefix.push_back(x);
      search(child, prefix);
      prefix.pop_back();
      done.push_back(x);
    }
  }

  // Swapping two twins (equal neighborhoods apart from each other) is an
  // automorphism fixing everything else.
  void add_twin_generators() {
    std::vector<Word> a(words_), b(words_);
    std::vector<char> placed(n_, 0);
    for (Vertex u = 0; u < n_; ++u) {
      if (placed[u])
        continue;
      Vertex last = u;
      for (Vertex w = u + 1; w < n_; ++w) {
        if (placed[w] || g_.degree(u) != g_.degree(w))
          continue;
        auto ru = g_.row(u), rw = g_.row(w);
        std::copy(ru.begin(), ru.end(), a.begin());
        std::copy(rw.begin(), rw.end(), b.begin());
        a[w / word_bits] &= ~(Word{1} << (w % word_bits));
        b[u / word_bits] &= ~(Word{1} << (u % word_bits));
        if (a != b)
          continue;
        placed[w] = 1;
        std::vector<Vertex> gen(n_);
        std::iota(gen.begin(), gen.end(), 0);
        std::swap(gen[last], gen[w]);
        generators_.push_back(std::move(gen));
        last = w;
      }
    }
  }

  const Graph& g_;
  int n_;
  std::size_t words_;
  std::vector<std::vector<Vertex>> generators_;
  std::vector<Vertex> first_lab_, best_lab_;
  std::vector<Word> first_rows_, best_rows_;
};

} // namespace detail

/// canonical_labeling(g)[k] is the vertex of g placed at canonical position k.
inline std::vector<Vertex> canonical_labeling(const Graph& g) {
  return detail::CanonicalSearch(g).run();
}

inline Certificate canonical_certificate(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 0xFFFF)
    throw std::invalid_argument("graph too large for a certificate");
  const auto lab = canonical_labeling(g);
  std::string bytes(detail::certificate_length(n), '\0');
  bytes[0] = static_cast<char>((n >> 8) & 0xFF);
  bytes[1] = static_cast<char>(n & 0xFF);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++bit)
      if (g.adjacent(lab[i], lab[j]))
        bytes[2 + bit / 8] |= static_cast<char>(0x80u >> (bit % 8));
  return Certificate{std::move(bytes)};
}

/// The canonical representative encoded by a certificate.
inline Graph graph_from_certificate(const Certificate& c) {
  const std::size_t n = c.order();
  if (c.bytes.size() != detail::certificate_length(n))
    throw std::invalid_argument("certificate length does not match its order");
  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++bit)
      if (static_cast<unsigned char>(c.bytes[2 + bit / 8]) & (0x80u >> (bit % 8)))
        g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return g;
}

/// Edge count straight from the packed bits.
inline std::size_t certificate_size(const Certificate& c) {
  std::size_t e = 0;
  for (std::size_t k = 2; k < c.bytes.size(); ++k)
    e += static_cast<std::size_t>(std::popcount(static_cast<unsigned char>(c.bytes[k])));
  return e;
}

} // namespace tyfam

#endif
