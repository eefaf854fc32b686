#include "polyspace/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "polyspace/combinatorics.hpp"
#include "polyspace/error.hpp"
#include "polyspace/int_matrix.hpp"
#include "polyspace/invariants.hpp"
#include "polyspace/matrix_io.hpp"
#include "polyspace/verify.hpp"

namespace polyspace {

namespace {

std::string join(const std::vector<BigInt>& xs, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += xs[i].str();
  }
  return s;
}

struct TableRow {
  InvariantTable t;
  DivisorCounts counts;
  InvolutionClass triple;
};

const std::vector<std::string> kTableColumns{"n", "m", "D", "alpha", "beta", "gamma",
                                             "zeros", "ones", "twos", "x", "y", "z"};

std::vector<std::string> cells(const TableRow& r) {
  return {std::to_string(r.t.n), std::to_string(r.t.m), r.t.D.str(),       r.t.alpha.str(),
          r.t.beta.str(),        r.t.gamma.str(),       r.counts.zeros.str(), r.counts.ones.str(),
          r.counts.twos.str(),   r.triple.x.str(),      r.triple.y.str(),     r.triple.z.str()};
}

void print_table(std::ostream& out, const std::vector<TableRow>& rows, const std::string& format) {
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json row;
      const auto c = cells(r);
      // Big values stay strings so no consumer silently rounds them.
      row["n"] = r.t.n;
      row["m"] = r.t.m;
      for (std::size_t i = 2; i < kTableColumns.size(); ++i) row[kTableColumns[i]] = c[i];
      j.push_back(row);
    }
    out << j.dump(2) << '\n';
    return;
  }
  const bool md = format == "md";
  auto line = [&](const std::vector<std::string>& xs) {
    if (md) out << "| ";
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? (md ? " | " : ",") : "") << xs[i];
    out << (md ? " |\n" : "\n");
  };
  line(kTableColumns);
  if (md) line(std::vector<std::string>(kTableColumns.size(), "---"));
  for (const auto& r : rows) line(cells(r));
}

int exit_code_for(const Error& e) {
  return e.kind() == ErrorKind::MalformedInput ? kExitMalformed : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of the conjugation involution on planar equilateral polygon spaces", "polyspace"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolkitVersion));

  VerifyOptions vopt;
  std::string verify_format = "text";
  std::string cache_dir;
  if (const char* env = std::getenv("POLYSPACE_CACHE_DIR")) cache_dir = env;
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification checks for one n");
  verify_cmd->add_option("--n", vopt.n, "Odd polygon size >= 5")->required();
  verify_cmd->add_option("--checks", vopt.checks, "Subset of check ids (default: all)")->delimiter(',');
  verify_cmd->add_option("--max-ring-n", vopt.max_ring_n, "Skip matrix-based checks above this n")
      ->capture_default_str();
  verify_cmd->add_option("--cache-dir", cache_dir, "Result cache directory (default: $POLYSPACE_CACHE_DIR)");
  verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  verify_cmd->add_option("--jobs", vopt.jobs, "Worker threads (0: one per core)")->capture_default_str();

  int n_min = 5, n_max = 0;
  std::string table_format = "md";
  auto* table_cmd = app.add_subcommand("table", "Per-n invariant table");
  table_cmd->add_option("--n-min", n_min)->capture_default_str();
  table_cmd->add_option("--n-max", n_max)->required();
  table_cmd->add_option("--format", table_format)->check(CLI::IsMember({"md", "csv", "json"}))->capture_default_str();

  std::string snf_input;
  auto* snf_cmd = app.add_subcommand("snf", "Elementary divisors of an integer matrix file");
  snf_cmd->add_option("--input", snf_input)->required();

  std::string inv_input;
  auto* inv_cmd = app.add_subcommand("involution", "Integral involutions");
  inv_cmd->require_subcommand(1);
  auto* classify_cmd = inv_cmd->add_subcommand("classify", "Print (x, y, z) with P ~ F(x, y, z)");
  classify_cmd->add_option("--input", inv_input)->required();

  int series_n = 0;
  std::string which;
  auto* series_cmd = app.add_subcommand("series", "Coefficients of a Poincare series");
  series_cmd->add_option("--n", series_n)->required();
  series_cmd->add_option("--which", which)->required()->check(CLI::IsMember(series_names()));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify_cmd) {
      if (!cache_dir.empty()) vopt.cache_dir = cache_dir;
      const auto report = verify(vopt);
      if (verify_format == "json")
        out << to_json(report).dump(2) << '\n';
      else
        out << to_text(report);
      return report.all_passed() ? kExitOk : kExitFailure;
    }
    if (*table_cmd) {
      half_of_odd(n_min);
      half_of_odd(n_max);
      std::vector<TableRow> rows;
      for (int n = n_min; n <= n_max; n += 2)
        rows.push_back({invariant_table(n), wang_divisor_counts(n), tau_normal_form(n)});
      print_table(out, rows, table_format);
      return kExitOk;
    }
    if (*snf_cmd) {
      out << join(smith_normal_form(read_matrix_file(snf_input))) << '\n';
      return kExitOk;
    }
    if (*classify_cmd) {
      try {
        const auto c = classify_involution(read_matrix_file(inv_input));
        out << c.x << ' ' << c.y << ' ' << c.z << '\n';
        return kExitOk;
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::MalformedInput) throw;
        out << to_string(e.kind()) << '\n';
        err << "polyspace: " << e.what() << '\n';
        return kExitFailure;
      }
    }
    if (*series_cmd) {
      out << select_series(series_bundle(series_n), which).to_string() << '\n';
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "polyspace: " << to_string(e.kind()) << ": " << e.what() << '\n';
    if (e.kind() == ErrorKind::InvalidArgument) return kExitUsage;
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "polyspace: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace polyspace
