#ifndef TYFAM_ENUMERATION_HPP
#define TYFAM_ENUMERATION_HPP

#include <tyfam/certificate.hpp>
#include <tyfam/checkpoint.hpp>
#include <tyfam/graph.hpp>
#include <tyfam/graph6.hpp>
#include <tyfam/moves.hpp>

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <deque>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

namespace tyfam {

struct EnumOptions {
  /// Cap on |members|; hitting it stops expansion and marks the report truncated.
  std::optional<std::size_t> max_members;
  std::optional<std::filesystem::path> checkpoint_path;
  std::size_t checkpoint_interval = 100'000;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned parallelism = 1;
};

/// Raised where a caller needs a complete answer and the budget ran out.
class BudgetExhausted : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct FamilyReport {
  std::string seed_label;
  Certificate seed_cert;
  std::vector<Certificate> members;  // sorted by (order, certificate bytes)
  std::map<std::size_t, std::size_t> histogram;
  std::size_t size = 0;
  EnumMode mode = EnumMode::full_family;
  bool truncated = false;

  std::size_t count() const noexcept { return members.size(); }

  bool contains(const Certificate& c) const {
    return std::binary_search(members.begin(), members.end(), c);
  }
};

/// Members per vertex count. Only meaningful for a complete enumeration.
inline std::map<std::size_t, std::size_t> order_histogram(const FamilyReport& report) {
  if (report.truncated)
    throw std::invalid_argument("order histogram of a truncated report");
  std::map<std::size_t, std::size_t> h;
  for (const auto& c : report.members)
    ++h[c.order()];
  return h;
}

namespace detail {

inline unsigned resolve_workers(unsigned requested) {
  if (requested == 0)
    requested = std::max(1u, std::thread::hardware_concurrency());
  return requested;
}

// Breadth-first closure over certificates. Frontier nodes are expanded in
// fixed-size batches; children are merged in batch order after each batch,
// so the queue contents never depend on the worker count.
class FamilyEnumerator {
public:
  static constexpr std::size_t batch_size = 512;

  FamilyEnumerator(const EnumOptions& opts, EnumMode mode) : opts_(opts), mode_(mode) {
    if (opts.max_members && *opts.max_members == 0)
      throw std::invalid_argument("max_members must be at least 1");
    if (opts.checkpoint_interval == 0)
      throw std::invalid_argument("checkpoint_interval must be positive");
  }

  FamilyReport from_seed(const Graph& seed, std::string label) {
    seed_label_ = std::move(label);
    seed_graph6_ = graph6_encode(seed);
    size_ = seed.size();
    seed_cert_ = canonical_certificate(seed);
    visited_.insert(seed_cert_);
    queue_.push_back(seed_cert_);
    return run();
  }

  FamilyReport from_checkpoint(const Checkpoint& cp) {
    if (cp.mode != mode_)
      throw CheckpointError("checkpoint mode does not match requested mode");
    seed_label_ = cp.seed_label;
    seed_graph6_ = cp.seed_graph6;
    size_ = cp.size;
    seed_cert_ = canonical_certificate(graph6_decode(cp.seed_graph6));
    expanded_ = cp.expanded;
    visited_.insert(cp.visited.begin(), cp.visited.end());
    if (!visited_.contains(seed_cert_))
      throw CheckpointError("checkpoint visited set does not contain the seed");
    queue_.assign(cp.frontier.begin(), cp.frontier.end());
    if (opts_.max_members && visited_.size() > *opts_.max_members)
      throw std::invalid_argument("checkpoint already exceeds max_members");
    return run();
  }

private:
  FamilyReport run() {
    const unsigned workers = resolve_workers(opts_.parallelism);
    const MoveSet moves =
        mode_ == EnumMode::full_family ? MoveSet::both : MoveSet::triangle_to_y_only;
    std::size_t next_checkpoint =
        (expanded_ / opts_.checkpoint_interval + 1) * opts_.checkpoint_interval;

    std::vector<Certificate> batch;
    std::vector<std::vector<Certificate>> children;
    while (!queue_.empty() && !truncated_) {
      const std::size_t take = std::min(batch_size, queue_.size());
      batch.assign(std::make_move_iterator(queue_.begin()),
                   std::make_move_iterator(queue_.begin() + static_cast<std::ptrdiff_t>(take)));
      queue_.erase(queue_.begin(), queue_.begin() + static_cast<std::ptrdiff_t>(take));

      children.assign(batch.size(), {});
      expand(batch, children, moves, workers);

      std::size_t merged = 0;
      for (; merged < batch.size() && !truncated_; ++merged) {
        for (auto& c : children[merged]) {
          if (visited_.contains(c))
            continue;
          if (opts_.max_members && visited_.size() >= *opts_.max_members) {
            truncated_ = true;
            break;
          }
          visited_.insert(c);
          queue_.push_back(std::move(c));
        }
        if (truncated_)
          break;
      }
      expanded_ += merged;
      // Parents whose children were not all admitted go back to the front.
      for (std::size_t i = batch.size(); i-- > merged;)
        queue_.push_front(std::move(batch[i]));

      if (opts_.checkpoint_path && expanded_ >= next_checkpoint) {
        save_checkpoint();
        next_checkpoint = (expanded_ / opts_.checkpoint_interval + 1) * opts_.checkpoint_interval;
      }
    }
    if (opts_.checkpoint_path)
      save_checkpoint();
    return report();
  }

  static void expand(const std::vector<Certificate>& batch,
                     std::vector<std::vector<Certificate>>& children, MoveSet moves,
                     unsigned workers) {
    auto work = [&](std::size_t i) {
      children[i] = one_move_neighbors(graph_from_certificate(batch[i]), moves);
    };
    const unsigned threads = static_cast<unsigned>(
        std::min<std::size_t>(workers, batch.size()));
    if (threads <= 1) {
      for (std::size_t i = 0; i < batch.size(); ++i)
        work(i);
      return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < batch.size();)
          work(i);
      });
  }

  Checkpoint snapshot() const {
    Checkpoint cp;
    cp.seed_label = seed_label_;
    cp.seed_graph6 = seed_graph6_;
    cp.mode = mode_;
    cp.size = size_;
    cp.expanded = expanded_;
    cp.max_members = opts_.max_members;
    cp.visited.assign(visited_.begin(), visited_.end());
    std::sort(cp.visited.begin(), cp.visited.end());
    cp.frontier.assign(queue_.begin(), queue_.end());
    return cp;
  }

  void save_checkpoint() const { checkpoint_save(*opts_.checkpoint_path, snapshot()); }

  FamilyReport report() {
    FamilyReport r;
    r.seed_label = seed_label_;
    r.seed_cert = seed_cert_;
    r.members.assign(visited_.begin(), visited_.end());
    std::sort(r.members.begin(), r.members.end());
    for (const auto& c : r.members)
      ++r.histogram[c.order()];
    r.size = size_;
    r.mode = mode_;
    r.truncated = truncated_;
    return r;
  }

  EnumOptions opts_;
  EnumMode mode_;
  std::string seed_label_;
  std::string seed_graph6_;
  std::size_t size_ = 0;
  Certificate seed_cert_;
  std::unordered_set<Certificate, CertificateHash> visited_;
  std::deque<Certificate> queue_;
  std::size_t expanded_ = 0;
  bool truncated_ = false;
};

} // namespace detail

/// All cousins of seed (closure under both moves), up to isomorphism.
inline FamilyReport enumerate_family(const Graph& seed, const EnumOptions& opts = {},
                                     std::string label = {}) {
  if (label.empty())
    label = graph6_encode(seed);
  return detail::FamilyEnumerator(opts, EnumMode::full_family).from_seed(seed, std::move(label));
}

/// Closure of seed under triangle-Y moves only.
inline FamilyReport enumerate_descendants(const Graph& seed, const EnumOptions& opts = {},
                                          std::string label = {}) {
  if (label.empty())
    label = graph6_encode(seed);
  return detail::FamilyEnumerator(opts, EnumMode::descendants_only)
      .from_seed(seed, std::move(label));
}

/// Continues an interrupted enumeration; the mode comes from the checkpoint.
inline FamilyReport resume_enumeration(const Checkpoint& cp, const EnumOptions& opts = {}) {
  return detail::FamilyEnumerator(opts, cp.mode).from_checkpoint(cp);
}

inline FamilyReport enumerate_family(const PartSpec& spec, const EnumOptions& opts = {}) {
  return enumerate_family(complete_multipartite(spec), opts, spec.to_string());
}

inline FamilyReport enumerate_descendants(const PartSpec& spec, const EnumOptions& opts = {}) {
  return enumerate_descendants(complete_multipartite(spec), opts, spec.to_string());
}

namespace detail {

// Walks every set of pairwise edge-disjoint triangles of a graph once, by
// extending in increasing triangle order. visit(chosen, used) sees the
// triangle indices and the bitmask of covered edges; returning false stops
// the walk.
class TrianglePackings {
public:
  explicit TrianglePackings(const Graph& g)
      : tris_(triangles(g)), edges_(g.edges()), words_(words_for(edges_.size())) {
    const std::size_t n = g.order();
    std::vector<int> edge_id(n * n, -1);
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      auto [u, v] = edges_[k];
      edge_id[u * n + v] = edge_id[v * n + u] = static_cast<int>(k);
    }
    masks_.assign(tris_.size(), std::vector<Word>(words_, 0));
    for (std::size_t t = 0; t < tris_.size(); ++t) {
      const auto& tr = tris_[t];
      for (int e : {edge_id[tr.v1 * n + tr.v2], edge_id[tr.v2 * n + tr.v3],
                    edge_id[tr.v1 * n + tr.v3]})
        masks_[t][e / word_bits] |= Word{1} << (e % word_bits);
    }
  }

  const std::vector<Triangle>& triangle_list() const { return tris_; }
  const std::vector<std::pair<Vertex, Vertex>>& edge_list() const { return edges_; }

  template <class Visit>
  void walk(Visit&& visit) const {
    std::vector<std::size_t> chosen;
    std::vector<Word> used(words_, 0);
    bool stop = false;
    auto extend = [&](auto&& self, std::size_t from) -> void {
      if (!visit(chosen, used)) {
        stop = true;
        return;
      }
      for (std::size_t t = from; t < tris_.size() && !stop; ++t) {
        bool disjoint = true;
        for (std::size_t k = 0; k < words_ && disjoint; ++k)
          disjoint = (used[k] & masks_[t][k]) == 0;
        if (!disjoint)
          continue;
        for (std::size_t k = 0; k < words_; ++k)
          used[k] |= masks_[t][k];
        chosen.push_back(t);
        self(self, t + 1);
        chosen.pop_back();
        for (std::size_t k = 0; k < words_; ++k)
          used[k] &= ~masks_[t][k];
      }
    };
    extend(extend, 0);
  }

private:
  std::vector<Triangle> tris_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::size_t words_;
  std::vector<std::vector<Word>> masks_;
};

} // namespace detail

/// Number of sets of pairwise edge-disjoint triangles (the empty set
/// included), or limit + 1 if there are more than limit.
inline std::size_t count_triangle_packings(const Graph& g, std::size_t limit) {
  std::size_t count = 0;
  detail::TrianglePackings(g).walk([&](const auto&, const auto&) { return ++count <= limit; });
  return count;
}

/**
 * Independent count of descendants: every set of pairwise edge-disjoint
 * triangles of the seed is turned into a graph by replacing each triangle
 * with a Y, and the results are counted up to isomorphism. Since no new
 * triangles appear after a triangle-Y move, these graphs are exactly the
 * descendants. Throws BudgetExhausted, before any canonical labeling, if
 * there are more than max_sets sets.
 */
inline std::size_t descendants_oracle(const Graph& seed, std::size_t max_sets = 2'000'000) {
  if (count_triangle_packings(seed, max_sets) > max_sets)
    throw BudgetExhausted("descendants_oracle: more than " + std::to_string(max_sets) +
                          " triangle sets");
  const detail::TrianglePackings packings(seed);
  const auto& tris = packings.triangle_list();
  const auto& edge_list = packings.edge_list();
  const std::size_t n = seed.order();
  std::unordered_set<Certificate, CertificateHash> seen;
  packings.walk([&](const std::vector<std::size_t>& chosen, const std::vector<Word>& used) {
    Graph g(n + chosen.size());
    for (std::size_t k = 0; k < edge_list.size(); ++k)
      if (!((used[k / word_bits] >> (k % word_bits)) & 1u))
        g.add_edge(edge_list[k].first, edge_list[k].second);
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      const auto& tr = tris[chosen[i]];
      const auto y = static_cast<Vertex>(n + i);
      g.add_edge(y, tr.v1);
      g.add_edge(y, tr.v2);
      g.add_edge(y, tr.v3);
    }
    seen.insert(canonical_certificate(g));
    return true;
  });
  return seen.size();
}

} // namespace tyfam

#endif
