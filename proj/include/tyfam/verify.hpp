#ifndef TYFAM_VERIFY_HPP
#define TYFAM_VERIFY_HPP

#include <tyfam/combinatorics.hpp>
#include <tyfam/enumeration.hpp>
#include <tyfam/estimation.hpp>

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace tyfam {

struct CheckLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

inline std::uint64_t enumerated_size(const PartSpec& spec, const EnumOptions& opts) {
  auto report = enumerate_family(spec, opts);
  if (report.truncated)
    throw BudgetExhausted("family of K_{" + spec.to_string() + "} exceeds the member budget");
  return report.count();
}

inline std::string show(std::uint64_t got, std::uint64_t want) {
  return std::to_string(got) + " (expected " + std::to_string(want) + ")";
}

} // namespace detail

/// Closed forms and stabilization, each checked by direct enumeration.
inline std::vector<CheckLine> verify_theorems(const EnumOptions& opts = {}) {
  std::vector<CheckLine> out;
  auto expect = [&](const std::string& name, const PartSpec& spec, std::uint64_t want) {
    const auto got = detail::enumerated_size(spec, opts);
    out.push_back({name + " K_{" + spec.to_string() + "}", got == want, detail::show(got, want)});
  };
  for (auto [x, y] : {std::pair{2, 4}, {4, 5}, {5, 7}})
    expect("bipartite closed form", PartSpec{x, y}, 1);
  for (auto [b, c] : {std::pair{6, 6}, {6, 8}, {7, 9}})
    expect("K_{1,b,c} closed form", PartSpec{1, b, c}, 1 + static_cast<std::uint64_t>(b));
  for (int c = 4; c <= 7; ++c)
    expect("stabilization", PartSpec{2, 2, c}, 10);
  for (int c = 4; c <= 7; ++c)
    expect("stabilization", PartSpec{1, 3, c}, 6);
  for (int c = 6; c <= 8; ++c)
    expect("stabilization", PartSpec{2, 3, c}, 97);
  for (int b = 6; b <= 7; ++b)
    for (int c = b; c <= b + 2; ++c) {
      const PartSpec spec{1, b, c};
      const auto stable = detail::enumerated_size(stabilize_spec(spec), opts);
      expect("stabilized spec agrees", spec, stable);
    }
  for (const PartSpec& spec : {PartSpec{2, 5, 5}, PartSpec{1, 4, 4}}) {
    const auto full = detail::enumerated_size(spec, opts);
    auto desc = enumerate_descendants(spec, opts);
    if (desc.truncated)
      throw BudgetExhausted("descendants of K_{" + spec.to_string() + "} exceed the budget");
    out.push_back({"descendants equal family K_{" + spec.to_string() + "}",
                   desc.count() == full, detail::show(desc.count(), full)});
  }
  for (int y = 3; y <= 6; ++y) {
    const auto a = enumerate_family(PartSpec{3, y}, opts);
    const auto b = enumerate_family(PartSpec{1, 1, 1, y - 1}, opts);
    if (a.truncated || b.truncated)
      throw BudgetExhausted("K_{3,y} cross-check exceeds the budget");
    out.push_back({"F(K_{3," + std::to_string(y) + "}) = F(K_{1,1,1," + std::to_string(y - 1) + "})",
                   a.members == b.members, detail::show(a.count(), b.count())});
  }
  return out;
}

/// The g(b,c) lower bound and the two exponential bounds.
inline std::vector<CheckLine> verify_bounds(const EnumOptions& opts = {}) {
  std::vector<CheckLine> out;
  for (int x = 3; x <= 5; ++x)
    for (int y = 4; y <= 8; ++y) {
      const auto g = static_cast<std::uint64_t>(g_lower_bound(x, y));
      const auto f = detail::enumerated_size(PartSpec{2, x, y}, opts);
      out.push_back({"g(" + std::to_string(x) + "," + std::to_string(y) + ") <= |F(K_{2," +
                         std::to_string(x) + "," + std::to_string(y) + "})|",
                     g <= f, std::to_string(g) + " <= " + std::to_string(f)});
    }
  for (int y = 4; y <= 10; ++y) {
    const double bound = k3y_upper(y);
    const auto f = detail::enumerated_size(PartSpec{3, y + 3}, opts);
    std::ostringstream d;
    d << bound << " > " << f;
    out.push_back({"(8/3)e^{3y/5} > |F(K_{3,y+3})| at y=" + std::to_string(y),
                   bound > static_cast<double>(f), d.str()});
  }
  for (int c = 1; c <= 7; ++c) {
    const double bound = k12c_lower(c);
    const auto f = detail::enumerated_size(PartSpec{1, 2, c + 3}, opts);
    std::ostringstream d;
    d << bound << " < " << f;
    out.push_back({"(16/3)e^{2c/3} < |F(K_{1,2,c+3})| at c=" + std::to_string(c),
                   bound < static_cast<double>(f), d.str()});
  }
  return out;
}

inline std::vector<CheckLine> verify_conjecture(const EnumOptions& opts = {}) {
  std::vector<CheckLine> out;
  for (const PartSpec& leading : {PartSpec{2, 5}, PartSpec{2, 6}, PartSpec{1, 7}, PartSpec{3, 4}}) {
    const auto r = conjecture_sizes(leading, opts);
    out.push_back({"|F(K_{" + r.below.to_string() + "})| = |F(K_{" + r.at.to_string() + "})| - 1",
                   r.holds, std::to_string(r.size_below) + " vs " + std::to_string(r.size_at)});
  }
  return out;
}

} // namespace tyfam

#endif
