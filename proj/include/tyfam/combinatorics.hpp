#ifndef TYFAM_COMBINATORICS_HPP
#define TYFAM_COMBINATORICS_HPP

#include <tyfam/enumeration.hpp>
#include <tyfam/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tyfam {

/**
 * Number of pairs (m, n) with 0 <= m <= x, 0 <= n <= y and m + n = z.
 * A negative bound admits no pairs.
 */
inline std::int64_t partition_count(std::int64_t x, std::int64_t y, std::int64_t z) {
  if (x < 0 || y < 0 || z < 0)
    return 0;
  const std::int64_t lo = std::max<std::int64_t>(0, z - y);
  const std::int64_t hi = std::min(x, z);
  return hi >= lo ? hi - lo + 1 : 0;
}

/**
 * g(b, c) = 5 + sum_{i=2..b} sum_{j=0..i} P(i, b-i, j) * P(i, c-i, j),
 * the partition-sum lower bound for the family size of K_{2,b,c}.
 * Evaluated for any c >= 0, which also covers the c < b cells of the
 * reference table.
 */
inline std::int64_t g_lower_bound(std::int64_t b, std::int64_t c) {
  if (b < 2)
    throw std::invalid_argument("g(b,c) needs b >= 2");
  if (c < 0)
    throw std::invalid_argument("g(b,c) needs c >= 0");
  std::int64_t total = 5;
  for (std::int64_t i = 2; i <= b; ++i)
    for (std::int64_t j = 0; j <= i; ++j)
      total += partition_count(i, b - i, j) * partition_count(i, c - i, j);
  return total;
}

inline std::uint64_t multipartite_edge_count(const PartSpec& spec) {
  std::uint64_t sum = 0, squares = 0;
  for (int a : spec.parts()) {
    sum += static_cast<std::uint64_t>(a);
    squares += static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(a);
  }
  return (sum * sum - squares) / 2;
}

/// The spec with its largest part dropped.
inline PartSpec without_largest(const PartSpec& spec) {
  if (spec.count() < 2)
    throw std::invalid_argument("spec has a single part");
  return PartSpec(std::vector<int>(spec.parts().begin(), spec.parts().end() - 1));
}

inline PartSpec with_part(const PartSpec& spec, int part) {
  auto parts = spec.parts();
  parts.push_back(part);
  return PartSpec(std::move(parts));
}

/**
 * Smallest spec known to have the same family size. Tripartite (a,b,c)
 * with (a,b) != (1,2) caps c at max(4, ab); with n >= 3 parts whose first
 * n-1 sum past 6, the last part is capped at the edge count of the rest.
 */
inline PartSpec stabilize_spec(const PartSpec& spec) {
  const auto& p = spec.parts();
  const std::size_t n = p.size();
  if (n < 3)
    return spec;
  if (n == 3) {
    const int a = p[0], b = p[1], c = p[2];
    if (a == 1 && b == 2)
      return spec;
    const int d = std::max(4, a * b);
    return c >= d ? PartSpec{a, b, d} : spec;
  }
  const PartSpec rest = without_largest(spec);
  const std::uint64_t e = multipartite_edge_count(rest);
  if (rest.total() > 6 && static_cast<std::uint64_t>(p.back()) >= e)
    return with_part(rest, static_cast<int>(e));
  return spec;
}

enum class SizeMethod { closed_form_bipartite, closed_form_k1bc, stabilized_enumerated, enumerated };

inline std::string to_string(SizeMethod m) {
  switch (m) {
  case SizeMethod::closed_form_bipartite: return "closed-form-bipartite";
  case SizeMethod::closed_form_k1bc: return "closed-form-k1bc";
  case SizeMethod::stabilized_enumerated: return "stabilized-enumerated";
  case SizeMethod::enumerated: return "enumerated";
  }
  return "unknown";
}

struct SizeResult {
  std::uint64_t value = 0;
  SizeMethod method = SizeMethod::enumerated;
  PartSpec stabilized_spec;
};

/**
 * |F(K_spec)| by the cheapest sound route: closed forms for K_{x,y}
 * (x, y != 3) and K_{1,b,c} (6 <= b <= c), otherwise enumeration of the
 * stabilized spec. Throws BudgetExhausted rather than return a partial count.
 */
inline SizeResult family_size(const PartSpec& spec, const EnumOptions& opts = {}) {
  const auto& p = spec.parts();
  if (p.size() == 2 && p[0] != 3 && p[1] != 3)
    return {1, SizeMethod::closed_form_bipartite, spec};
  if (p.size() == 3 && p[0] == 1 && 6 <= p[1])
    return {1 + static_cast<std::uint64_t>(p[1]), SizeMethod::closed_form_k1bc, spec};

  const PartSpec stable = stabilize_spec(spec);
  const FamilyReport report = enumerate_family(stable, opts);
  if (report.truncated)
    throw BudgetExhausted("family of K_{" + stable.to_string() + "} exceeds " +
                          std::to_string(*opts.max_members) + " members");
  return {report.count(),
          stable == spec ? SizeMethod::enumerated : SizeMethod::stabilized_enumerated, stable};
}

/// g(b,c) <= |F(K_{2,b,c})|; proven for c > b >= 3.
inline bool check_g_bound(int b, int c, const EnumOptions& opts = {}) {
  if (b < 2 || c < 1)
    throw std::invalid_argument("check_g_bound needs b >= 2 and c >= 1");
  return static_cast<std::uint64_t>(g_lower_bound(b, c)) <=
         family_size(PartSpec{2, b, c}, opts).value;
}

struct ConjectureCheck {
  PartSpec below;  // last part e - 1
  PartSpec at;     // last part e
  std::uint64_t size_below = 0;
  std::uint64_t size_at = 0;
  bool holds = false;
};

/**
 * For the leading parts (a_1..a_{n-1}) with sum > 6 and e their edge
 * count, compares |F(K_{a_1..a_{n-1},e-1})| with |F(K_{a_1..a_{n-1},e})| - 1.
 */
inline ConjectureCheck conjecture_sizes(const PartSpec& leading, const EnumOptions& opts = {}) {
  if (leading.count() < 2)
    throw std::invalid_argument("conjecture needs at least two leading parts");
  if (leading.total() <= 6)
    throw std::invalid_argument("conjecture needs leading parts summing past 6");
  const auto e = static_cast<int>(multipartite_edge_count(leading));
  ConjectureCheck out{with_part(leading, e - 1), with_part(leading, e)};
  out.size_below = family_size(out.below, opts).value;
  out.size_at = family_size(out.at, opts).value;
  out.holds = out.size_below + 1 == out.size_at;
  return out;
}

inline bool check_conjecture(const PartSpec& leading, const EnumOptions& opts = {}) {
  return conjecture_sizes(leading, opts).holds;
}

} // namespace tyfam

#endif
