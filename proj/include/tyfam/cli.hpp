#ifndef TYFAM_CLI_HPP
#define TYFAM_CLI_HPP

#include <tyfam/checkpoint.hpp>
#include <tyfam/combinatorics.hpp>
#include <tyfam/enumeration.hpp>
#include <tyfam/estimation.hpp>
#include <tyfam/report.hpp>
#include <tyfam/table.hpp>
#include <tyfam/verify.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace tyfam {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int mismatch = 1;
inline constexpr int usage = 2;
inline constexpr int budget = 3;
} // namespace exit_code

namespace detail {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline unsigned default_jobs() {
  if (const char* env = std::getenv("TYF_JOBS")) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw UsageError(std::string("TYF_JOBS is not a number: ") + env);
    }
  }
  return 0;
}

struct Range2 {
  int x_lo, x_hi, y_lo, y_hi;
};

inline std::pair<int, int> parse_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    throw UsageError("expected X,Y but got '" + s + "'");
  try {
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError("expected X,Y but got '" + s + "'");
  }
}

inline std::string fmt(double v) {
  std::ostringstream o;
  o << std::setprecision(10) << v;
  return o.str();
}

struct TableArgs {
  std::string kind;
  std::optional<std::string> limit;
  bool deep = false;
  std::string format = "csv";
};

// Tables are filled by direct enumeration of every cell; stabilization is
// never used to fill a cell.
inline TableDoc build_table(const TableArgs& args, const EnumOptions& opts) {
  auto count = [&](const PartSpec& spec) -> std::string {
    auto r = enumerate_family(spec, opts);
    if (r.truncated)
      throw BudgetExhausted("K_{" + spec.to_string() + "} exceeds the member budget");
    return std::to_string(r.count());
  };
  auto one_d = [&](const std::string& title, const std::string& corner, const std::string& column,
                   int lo, int cheap_hi, int deep_hi, auto spec_of) {
    int hi = args.deep ? deep_hi : cheap_hi;
    if (args.limit) {
      try {
        hi = std::stoi(*args.limit);
      } catch (const std::exception&) {
        throw UsageError("--limit expects an integer for this table");
      }
      if (hi > cheap_hi && !args.deep)
        throw UsageError("--limit " + std::to_string(hi) + " needs --deep (default cap " +
                         std::to_string(cheap_hi) + ")");
    }
    TableDoc t{title, corner, {column}, {}, {}};
    for (int k = lo; k <= hi; ++k)
      t.add_row(std::to_string(k), {count(spec_of(k))});
    return t;
  };
  auto two_d = [&](const std::string& title, Range2 cheap, Range2 deep, auto cell) {
    Range2 r = args.deep ? deep : cheap;
    if (args.limit) {
      auto [x, y] = parse_pair(*args.limit);
      r.x_hi = x;
      r.y_hi = y;
    }
    TableDoc t{title, "x\\y", {}, {}, {}};
    for (int y = r.y_lo; y <= r.y_hi; ++y)
      t.columns.push_back(std::to_string(y));
    for (int x = r.x_lo; x <= r.x_hi; ++x) {
      std::vector<std::string> row;
      for (int y = r.y_lo; y <= r.y_hi; ++y)
        row.push_back(cell(x, y));
      t.add_row(std::to_string(x), std::move(row));
    }
    return t;
  };

  if (args.kind == "kn")
    return one_d("|F(K_n)|", "n", "family size", 1, 10, 12,
                 [](int n) { return PartSpec(std::vector<int>(static_cast<std::size_t>(n), 1)); });
  if (args.kind == "k3y")
    return one_d("|F(K_{3,y})|", "y", "family size", 1, 10, 16,
                 [](int y) { return PartSpec{3, y}; });
  if (args.kind == "k12c")
    return one_d("|F(K_{1,2,c})|", "c", "family size", 1, 10, 10,
                 [](int c) { return PartSpec{1, 2, c}; });
  if (args.kind == "k2xy") {
    const Range2 cheap{3, 5, 4, 8}, deep{3, 7, 4, 12};
    if (args.limit && !args.deep) {
      auto [x, y] = parse_pair(*args.limit);
      if (x > cheap.x_hi || y > cheap.y_hi)
        throw UsageError("k2xy cells beyond x=5, y=8 need --deep");
    }
    return two_d("|F(K_{2,x,y})|", cheap, deep,
                 [&](int x, int y) { return count(PartSpec{2, x, y}); });
  }
  if (args.kind == "g2xy") {
    const Range2 full{3, 7, 4, 12};
    return two_d("g(x,y)", full, full,
                 [](int x, int y) { return std::to_string(g_lower_bound(x, y)); });
  }
  throw UsageError("unknown table '" + args.kind + "' (kn|k3y|k12c|k2xy|g2xy)");
}

inline int print_checks(const std::vector<CheckLine>& lines, std::ostream& out) {
  bool ok = true;
  for (const auto& l : lines) {
    out << (l.passed ? "PASS  " : "FAIL  ") << l.name << "  [" << l.detail << "]\n";
    ok = ok && l.passed;
  }
  return ok ? exit_code::ok : exit_code::mismatch;
}

} // namespace detail

/**
 * Command-line entry point. Exit codes: 0 success, 1 verification mismatch,
 * 2 usage error, 3 budget exhausted.
 */
inline int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
  CLI::App app{"Triangle-Y / Y-triangle family sizes of complete multipartite graphs", "tyfam"};
  app.require_subcommand(1);

  std::optional<unsigned> jobs;
  std::optional<std::size_t> max_members;

  // family
  auto* family = app.add_subcommand("family", "Enumerate the family of K_{spec}");
  std::string family_spec;
  bool descendants = false;
  std::optional<std::string> checkpoint;
  std::size_t checkpoint_every = 100'000;
  std::optional<std::string> export_format;
  family->add_option("spec", family_spec, "Part sizes, e.g. 2,3,6")->required();
  family->add_flag("--descendants", descendants, "Triangle-Y moves only");
  family->add_option("--max", max_members, "Member budget");
  family->add_option("--checkpoint", checkpoint, "Checkpoint file (resumed when present)");
  family->add_option("--checkpoint-every", checkpoint_every, "Expanded nodes between checkpoints");
  family->add_option("--jobs", jobs, "Worker threads (default $TYF_JOBS or all cores)");
  family->add_option("--export", export_format, "Write the report as g6, json or csv")
      ->check(CLI::IsMember({"g6", "json", "csv"}));

  // size
  auto* size = app.add_subcommand("size", "Family size via closed forms or stabilization");
  std::string size_spec;
  size->add_option("spec", size_spec, "Part sizes, e.g. 1,7,9")->required();
  size->add_option("--max", max_members, "Member budget");
  size->add_option("--jobs", jobs, "Worker threads");

  // table
  auto* table = app.add_subcommand("table", "Reproduce a family-size table");
  detail::TableArgs table_args;
  table->add_option("kind", table_args.kind, "kn|k3y|k12c|k2xy|g2xy")->required();
  table->add_option("--limit", table_args.limit, "Last index (N, or X,Y for grids)");
  table->add_flag("--deep", table_args.deep, "Include the expensive cells");
  table->add_option("--format", table_args.format, "csv|json|markdown");
  table->add_option("--max", max_members, "Member budget per cell");
  table->add_option("--jobs", jobs, "Worker threads");

  // estimate
  auto* estimate = app.add_subcommand("estimate", "Evaluate a growth estimate");
  std::string estimate_kind;
  int estimate_arg = 0;
  estimate->add_option("kind", estimate_kind, "f|k3y|k12c")
      ->required()
      ->check(CLI::IsMember({"f", "k3y", "k12c"}));
  estimate->add_option("arg", estimate_arg, "n, y or c")->required();

  // fit
  auto* fit = app.add_subcommand("fit", "Least-squares fit of counts");
  std::string fit_kind, fit_from;
  fit->add_option("model", fit_kind, "gaussian|exp")
      ->required()
      ->check(CLI::IsMember({"gaussian", "exp"}));
  fit->add_option("--from", fit_from, "JSON/CSV report or x,value CSV")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string verify_kind;
  std::optional<std::size_t> budget;
  verify->add_option("suite", verify_kind, "theorems|bounds|conjecture")
      ->required()
      ->check(CLI::IsMember({"theorems", "bounds", "conjecture"}));
  verify->add_option("--budget", budget, "Member budget per enumeration");
  verify->add_option("--jobs", jobs, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::usage;
  }

  try {
    EnumOptions opts;
    opts.parallelism = jobs ? *jobs : detail::default_jobs();
    opts.max_members = max_members;

    if (family->parsed()) {
      const PartSpec spec = PartSpec::parse(family_spec);
      opts.checkpoint_interval = checkpoint_every;
      FamilyReport report;
      if (checkpoint) {
        opts.checkpoint_path = *checkpoint;
        if (std::filesystem::exists(*checkpoint)) {
          const Checkpoint cp = checkpoint_load(*checkpoint);
          if (cp.seed_label != spec.to_string())
            throw detail::UsageError("checkpoint belongs to K_{" + cp.seed_label + "}");
          if ((cp.mode == EnumMode::descendants_only) != descendants)
            throw detail::UsageError("checkpoint mode is " + to_string(cp.mode));
          err << "resuming from " << *checkpoint << " (" << cp.visited.size() << " members)\n";
          report = resume_enumeration(cp, opts);
        }
      }
      if (report.members.empty())
        report = descendants ? enumerate_descendants(spec, opts) : enumerate_family(spec, opts);
      if (export_format)
        out << write_report(report, report_format_from_string(*export_format));
      else
        out << report.count() << '\n';
      if (report.truncated) {
        err << "budget exhausted after " << report.count() << " members\n";
        return exit_code::budget;
      }
      return exit_code::ok;
    }

    if (size->parsed()) {
      const auto r = family_size(PartSpec::parse(size_spec), opts);
      out << r.value << " (" << to_string(r.method) << ")\n";
      return exit_code::ok;
    }

    if (table->parsed()) {
      const auto format = table_format_from_string(table_args.format);
      out << render(detail::build_table(table_args, opts), format);
      return exit_code::ok;
    }

    if (estimate->parsed()) {
      double v = 0;
      if (estimate_kind == "f")
        v = f_estimate(estimate_arg);
      else if (estimate_kind == "k3y")
        v = k3y_upper(estimate_arg);
      else
        v = k12c_lower(estimate_arg);
      out << detail::fmt(v) << '\n';
      return exit_code::ok;
    }

    if (fit->parsed()) {
      std::ifstream in(fit_from);
      if (!in)
        throw detail::UsageError("cannot open " + fit_from);
      const auto pts = read_points(in);
      if (fit_kind == "gaussian") {
        const auto r = gaussian_fit(pts);
        out << "amplitude=" << detail::fmt(r.params[0]) << " mean=" << detail::fmt(r.params[1])
            << " sigma=" << detail::fmt(r.params[2]) << " residual=" << detail::fmt(r.residual)
            << '\n';
      } else {
        const auto r = exp_fit(pts);
        out << "a=" << detail::fmt(r.params[0]) << " b=" << detail::fmt(r.params[1])
            << " residual=" << detail::fmt(r.residual) << '\n';
      }
      return exit_code::ok;
    }

    if (verify->parsed()) {
      opts.max_members = budget;
      if (verify_kind == "theorems")
        return detail::print_checks(verify_theorems(opts), out);
      if (verify_kind == "bounds")
        return detail::print_checks(verify_bounds(opts), out);
      return detail::print_checks(verify_conjecture(opts), out);
    }
  } catch (const BudgetExhausted& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return exit_code::budget;
  } catch (const detail::UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const CheckpointError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }
  return exit_code::usage;
}

inline int cli_main(const std::vector<std::string>& args, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
  std::vector<const char*> argv{"tyfam"};
  for (const auto& a : args)
    argv.push_back(a.c_str());
  return cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace tyfam

#endif
