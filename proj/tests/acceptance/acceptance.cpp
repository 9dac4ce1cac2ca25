// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
//
//   tyfam_acceptance [--deep] [--only N]... [--jobs N]
//
// --deep adds the hours-scale cells (K_11, K_12, K_{3,11..16}, the wide
// K_{2,x,y} grid) and lifts the oracle budgets of criterion 12.

#include <tyfam/tyfam.hpp>

#include "../test_support.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace tyfam;

namespace {

struct Context {
  bool deep = false;
  EnumOptions opts;
  std::size_t oracle_sets = 1'000'000;
};

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << " mismatch: " << what << ';';
    }
  }
};

std::size_t family(const PartSpec& s, const Context& cx) {
  const auto r = enumerate_family(s, cx.opts);
  if (r.truncated)
    throw BudgetExhausted("K_{" + s.to_string() + "}");
  return r.count();
}

std::size_t descendants(const PartSpec& s, const Context& cx) {
  const auto r = enumerate_descendants(s, cx.opts);
  if (r.truncated)
    throw BudgetExhausted("K_{" + s.to_string() + "}");
  return r.count();
}

PartSpec kn(int n) { return PartSpec(std::vector<int>(static_cast<std::size_t>(n), 1)); }

std::string cell(const PartSpec& s) { return "K_{" + s.to_string() + "}"; }

void expect_count(Outcome& o, const std::string& label, std::size_t got, std::size_t want) {
  o.require(got == want, label + "=" + std::to_string(got) + " want " + std::to_string(want));
}

// 1. |F(K_n)|
void complete_graphs(Outcome& o, const Context& cx) {
  const std::size_t want[] = {1, 1, 2, 2, 49, 7, 20, 32, 163, 1681, 56461, 5002315};
  const int hi = cx.deep ? 12 : 10;
  for (int n = 1; n <= hi; ++n)
    expect_count(o, "K_" + std::to_string(n), family(kn(n), cx), want[n - 1]);
  o.detail << " n=1.." << hi;
}

// 2. |F(K_{3,y})|
void k3y(Outcome& o, const Context& cx) {
  const std::size_t want[] = {2, 2, 10, 6, 10, 17, 29, 52, 94, 172, 315, 578, 1061, 1941, 3533, 6408};
  const int hi = cx.deep ? 16 : 10;
  for (int y = 1; y <= hi; ++y)
    expect_count(o, cell({3, y}), family({3, y}, cx), want[y - 1]);
  o.detail << " y=1.." << hi;
}

// 3. |F(K_{1,2,c})|
void k12c(Outcome& o, const Context& cx) {
  const std::size_t want[] = {2, 3, 21, 14, 22, 40, 78, 153, 299, 581};
  for (int c = 1; c <= 10; ++c)
    expect_count(o, cell({1, 2, c}), family({1, 2, c}, cx), want[c - 1]);
  o.detail << " c=1..10";
}

const std::size_t k2xy_table[5][9] = {
    {93, 96, 97, 97, 97, 97, 97, 97, 97},
    {43, 70, 78, 80, 81, 81, 81, 81, 81},
    {70, 96, 166, 184, 192, 194, 195, 195, 195},
    {78, 166, 215, 380, 428, 447, 455, 457, 458},
    {80, 184, 380, 450, 827, 931, 981, 1000, 1008},
};

// 4. |F(K_{2,x,y})|
void k2xy(Outcome& o, const Context& cx) {
  const int x_hi = cx.deep ? 7 : 5, y_hi = cx.deep ? 12 : 8;
  for (int x = 3; x <= x_hi; ++x)
    for (int y = 4; y <= y_hi; ++y)
      expect_count(o, cell({2, x, y}), family({2, x, y}, cx), k2xy_table[x - 3][y - 4]);
  o.detail << " x=3.." << x_hi << ", y=4.." << y_hi;
}

// 5. g(x,y), timed
void g_table(Outcome& o, const Context&) {
  const std::int64_t want[5][9] = {
      {23, 25, 26, 26, 26, 26, 26, 26, 26},
      {37, 45, 50, 52, 53, 53, 53, 53, 53},
      {45, 65, 79, 87, 92, 94, 95, 95, 95},
      {50, 79, 109, 129, 143, 151, 156, 158, 159},
      {52, 87, 129, 169, 199, 219, 233, 241, 246},
  };
  const auto t0 = std::chrono::steady_clock::now();
  std::int64_t got[5][9];
  for (int x = 3; x <= 7; ++x)
    for (int y = 4; y <= 12; ++y)
      got[x - 3][y - 4] = g_lower_bound(x, y);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (int x = 3; x <= 7; ++x)
    for (int y = 4; y <= 12; ++y)
      o.require(got[x - 3][y - 4] == want[x - 3][y - 4],
                "g(" + std::to_string(x) + "," + std::to_string(y) + ")");
  o.require(secs < 1.0, "runtime " + std::to_string(secs) + "s");
  o.detail << " 45 cells in " << secs << "s";
}

// 6. named counts
void named(Outcome& o, const Context& cx) {
  const auto k6 = enumerate_family(kn(6), cx.opts);
  expect_count(o, "K_6", k6.count(), 7);
  o.require(k6.contains(canonical_certificate(support::petersen())), "Petersen graph not in F(K_6)");
  expect_count(o, "F_D(K_{2,3,6})", descendants({2, 3, 6}, cx), 30);
  expect_count(o, "F(K_{2,3,6})", family({2, 3, 6}, cx), 97);
  expect_count(o, "F_D(K_{3,3,9})", descendants({3, 3, 9}, cx), 237);
  expect_count(o, "F(K_{3,3,9})", family({3, 3, 9}, cx), 298);
  expect_count(o, "F_D(K_{2,2,4})", descendants({2, 2, 4}, cx), 10);
  expect_count(o, "F(K_{2,2,4})", family({2, 2, 4}, cx), 10);
  expect_count(o, "F(K_{1,3,4})", family({1, 3, 4}, cx), 6);
  expect_count(o, "F_D(K_{1,3,4})", descendants({1, 3, 4}, cx), 4);
}

// 7. closed forms, checked by enumeration
void closed_forms(Outcome& o, const Context& cx) {
  for (auto [x, y] : {std::pair{2, 4}, {4, 5}, {5, 7}})
    expect_count(o, cell({x, y}), family({x, y}, cx), 1);
  for (auto [b, c] : {std::pair{6, 6}, {6, 8}, {7, 9}})
    expect_count(o, cell({1, b, c}), family({1, b, c}, cx), 1 + static_cast<std::size_t>(b));
}

// 8. stabilization
void stabilization(Outcome& o, const Context& cx) {
  for (int c = 4; c <= 7; ++c)
    expect_count(o, cell({2, 2, c}), family({2, 2, c}, cx), 10);
  for (int c = 4; c <= 7; ++c)
    expect_count(o, cell({1, 3, c}), family({1, 3, c}, cx), 6);
  for (int c = 6; c <= 8; ++c)
    expect_count(o, cell({2, 3, c}), family({2, 3, c}, cx), 97);
}

// 9. g(b,c) <= |F(K_{2,b,c})| over the criterion 4 range
void g_bound(Outcome& o, const Context& cx) {
  for (int x = 3; x <= 5; ++x)
    for (int y = 4; y <= 8; ++y) {
      const auto g = static_cast<std::size_t>(g_lower_bound(x, y));
      const auto f = family({2, x, y}, cx);
      o.require(g <= f, "g(" + std::to_string(x) + "," + std::to_string(y) + ")=" +
                            std::to_string(g) + " > " + std::to_string(f));
    }
  o.detail << " 15 cells";
}

// 10. estimates
void estimates(Outcome& o, const Context& cx) {
  const std::pair<int, double> table[] = {
      {8, 31.2}, {9, 139.7}, {10, 1701.3}, {11, 56338.7}, {12, 5071450}};
  double worst = 0;
  for (auto [n, v] : table) {
    const double rel = std::abs(f_estimate(n) - v) / v;
    worst = std::max(worst, rel);
    o.require(rel < 0.002, "f(" + std::to_string(n) + ")");
  }
  for (int y = 4; y <= 10; ++y)
    o.require(k3y_upper(y) > static_cast<double>(family({3, y + 3}, cx)),
              "upper bound at y=" + std::to_string(y));
  for (int c = 1; c <= 7; ++c)
    o.require(k12c_lower(c) < static_cast<double>(family({1, 2, c + 3}, cx)),
              "lower bound at c=" + std::to_string(c));
  o.detail << " worst f(n) error " << worst * 100 << "%";
}

// 11. fits
void fits(Outcome& o, const Context& cx) {
  const double k3y_counts[] = {6, 10, 17, 29, 52, 94, 172, 315, 578, 1061, 1941, 3533, 6408};
  std::vector<Point> pts;
  for (int y = 4; y <= 16; ++y)
    pts.emplace_back(y - 3, k3y_counts[y - 4]);
  const auto a = exp_fit(pts);
  o.require(a.params[0] >= 2.4 && a.params[0] <= 3.0 && a.params[1] >= 0.57 && a.params[1] <= 0.63,
            "K_{3,y} fit");

  const double k12c_counts[] = {14, 22, 40, 78, 153, 299, 581};
  pts.clear();
  for (int c = 4; c <= 10; ++c)
    pts.emplace_back(c - 3, k12c_counts[c - 4]);
  const auto b = exp_fit(pts);
  o.require(b.params[0] >= 5.0 && b.params[0] <= 6.0 && b.params[1] >= 0.64 && b.params[1] <= 0.70,
            "K_{1,2,c} fit");

  const auto k9 = enumerate_family(kn(9), cx.opts);
  const auto g = gaussian_fit(order_histogram(k9));
  o.require(std::abs(g.params[1] - 16.0) <= 0.5, "F(K_9) mean");
  o.detail << " K_{3,y}: a=" << a.params[0] << " b=" << a.params[1] << "; K_{1,2,c}: a="
           << b.params[0] << " b=" << b.params[1] << "; F(K_9) mean=" << g.params[1];
}

// 12. property suites
void properties(Outcome& o, const Context& cx) {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240611);

  // certificate relabeling invariance
  std::size_t bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng() % 24;
    const double p = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
    const Graph g = support::random_graph(rng, n, p);
    const Graph h = g.relabeled(support::random_permutation(rng, n));
    bad += canonical_certificate(g) != canonical_certificate(h);
  }
  o.require(bad == 0, std::to_string(bad) + " relabelings changed the certificate");

  // moves preserve size and undo each other
  std::vector<Graph> move_seeds;
  for (const auto& s : support::all_specs(9))
    move_seeds.push_back(complete_multipartite(s));
  for (int i = 0; i < 200; ++i)
    move_seeds.push_back(support::random_graph(rng, 4 + rng() % 10, 0.5));
  bad = 0;
  for (const Graph& g : move_seeds) {
    const auto gc = canonical_certificate(g);
    for (const auto& t : triangles(g)) {
      const Graph h = apply_delta_y(g, t);
      bad += h.size() != g.size() || h.order() != g.order() + 1;
      bad += apply_y_delta(h, static_cast<Vertex>(g.order())) != g;
    }
    for (Vertex v : eligible_y_vertices(g)) {
      const auto nb = g.neighbors(v);
      const Graph h = apply_y_delta(g, v);
      bad += h.size() != g.size() || h.order() + 1 != g.order();
      auto shift = [v](Vertex u) { return u > v ? u - 1 : u; };
      bad += canonical_certificate(apply_delta_y(h, Triangle::of(shift(nb[0]), shift(nb[1]),
                                                                 shift(nb[2])))) != gc;
    }
  }
  o.require(bad == 0, std::to_string(bad) + " move checks failed");

  // triangle-set oracle against the descendant closure, every seed of order <= 12.
  // |F_D| never exceeds the number of triangle sets, so seeds within the set
  // budget are enumerated without a member cap.
  std::size_t seeds = 0;
  std::vector<std::string> unverified;
  const std::size_t set_budget = cx.deep ? SIZE_MAX - 1 : cx.oracle_sets;
  for (const auto& s : support::all_specs(12)) {
    ++seeds;
    const Graph g = complete_multipartite(s);
    if (count_triangle_packings(g, set_budget) > set_budget) {
      unverified.push_back(s.to_string());
      continue;
    }
    const auto closure = enumerate_descendants(g, cx.opts, s.to_string());
    const auto oracle = descendants_oracle(g, set_budget);
    o.require(oracle == closure.count(), "oracle " + cell(s) + "=" + std::to_string(oracle) +
                                             " vs " + std::to_string(closure.count()));
  }
  if (!unverified.empty()) {
    std::string list;
    for (const auto& u : unverified)
      list += (list.empty() ? "" : " ") + ("K_{" + u + "}");
    o.require(false, std::to_string(unverified.size()) + " of " + std::to_string(seeds) +
                         " oracle seeds over budget (" + list + ")");
  }

  // seed independence for every family of at most 100 members, plus thread-count independence
  std::size_t families = 0;
  for (const auto& s : support::all_specs(9)) {
    const auto base = enumerate_family(s, cx.opts);
    if (base.count() > 100)
      continue;
    ++families;
    for (const auto& m : base.members) {
      const auto again = enumerate_family(graph_from_certificate(m), cx.opts);
      o.require(again.members == base.members, "seed independence of " + cell(s));
    }
    EnumOptions four = cx.opts;
    four.parallelism = 4;
    o.require(enumerate_family(s, four).members == base.members, "thread count for " + cell(s));
  }

  // graph6 round trip
  bad = 0;
  for (int i = 0; i < 500; ++i) {
    const Graph g = support::random_graph(rng, rng() % 80, 0.4);
    bad += graph6_decode(graph6_encode(g)) != g;
  }
  for (const auto& m : enumerate_family(kn(9), cx.opts).members) {
    const Graph g = graph_from_certificate(m);
    bad += graph6_decode(graph6_encode(g)) != g;
  }
  o.require(bad == 0, std::to_string(bad) + " graph6 round trips failed");

  // checkpoint resume equivalence
  const auto ckpt = std::filesystem::temp_directory_path() / "tyfam-acceptance.ckpt";
  for (const PartSpec& s : {PartSpec{3, 3, 9}, PartSpec{2, 3, 6}, kn(9)})
    for (std::size_t cap : {1u, 30u, 90u}) {
      EnumOptions part = cx.opts;
      part.max_members = cap;
      part.checkpoint_path = ckpt;
      part.checkpoint_interval = 7;
      enumerate_family(s, part);
      const auto resumed = resume_enumeration(checkpoint_load(ckpt), cx.opts);
      o.require(resumed.members == enumerate_family(s, cx.opts).members,
                "resume of " + cell(s) + " at " + std::to_string(cap));
    }
  std::filesystem::remove(ckpt);

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(secs < 300.0, "runtime " + std::to_string(secs) + "s");
  o.detail << " " << seeds - unverified.size() << "/" << seeds << " oracle seeds verified, "
           << families << " small families, " << secs << "s";
}

// 13. conjecture
void conjecture(Outcome& o, const Context& cx) {
  const std::pair<PartSpec, std::pair<std::size_t, std::size_t>> cases[] = {
      {{2, 5}, {194, 195}}, {{2, 6}, {457, 458}}, {{1, 7}, {7, 8}}};
  for (const auto& [leading, want] : cases) {
    const auto r = conjecture_sizes(leading, cx.opts);
    o.require(r.holds, "conjecture at (" + leading.to_string() + ")");
    expect_count(o, cell(r.below), r.size_below, want.first);
    expect_count(o, cell(r.at), r.size_at, want.second);
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  Context cx;
  std::vector<int> only;
  unsigned jobs = 1;
  app.add_flag("--deep", cx.deep, "Include the hours-scale cells");
  app.add_option("--only", only, "Run only these criteria");
  app.add_option("--jobs", jobs, "Worker threads (0 = all cores)");
  app.add_option("--oracle-sets", cx.oracle_sets, "Triangle-set budget per oracle seed");
  CLI11_PARSE(app, argc, argv);
  cx.opts.parallelism = jobs;

  using Check = void (*)(Outcome&, const Context&);
  const std::pair<const char*, Check> criteria[] = {
      {"complete graphs K_n", complete_graphs},
      {"bipartite K_{3,y}", k3y},
      {"tripartite K_{1,2,c}", k12c},
      {"K_{2,x,y} grid", k2xy},
      {"g(x,y) table", g_table},
      {"named family counts", named},
      {"closed forms by enumeration", closed_forms},
      {"stabilization", stabilization},
      {"g(b,c) lower bound", g_bound},
      {"growth estimates and bounds", estimates},
      {"exponential and Gaussian fits", fits},
      {"property suites", properties},
      {"conjecture checks", conjecture},
  };

  int failed = 0;
  for (int i = 0; i < 13; ++i) {
    if (!only.empty() && std::find(only.begin(), only.end(), i + 1) == only.end())
      continue;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o, cx);
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail << " error: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": "
              << criteria[i].first << " (" << std::fixed << std::setprecision(2) << secs << "s)"
              << std::defaultfloat << std::setprecision(6) << o.detail.str() << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed")
            << std::endl;
  return failed ? 1 : 0;
}
