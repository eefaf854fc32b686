#include "polyspace/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "polyspace/cohomology_ring.hpp"
#include "polyspace/combinatorics.hpp"
#include "polyspace/error.hpp"
#include "polyspace/int_matrix.hpp"
#include "polyspace/invariants.hpp"
#include "polyspace/subset_complex.hpp"

namespace polyspace {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "fail";
}

CheckStatus check_status_from_string(std::string_view s) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "fail") return CheckStatus::Fail;
  if (s == "skipped") return CheckStatus::Skipped;
  throw Error(ErrorKind::MalformedInput, "unknown check status '" + std::string(s) + "'");
}

bool VerificationReport::all_passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

const std::vector<std::string>& check_registry() {
  static const std::vector<std::string> ids{
      "eq1-symmetry", "eq11-ring-dims", "prop6-lambda", "lemma7",         "bjs-vanishing",  "wilson-rank",
      "gysin",        "uct-division",   "wang-table1",  "theoremA-triple", "series-alpha", "d-equals-alpha"};
  return ids;
}

namespace {

struct Outcome {
  bool ok;
  std::string details;
};

template <class T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream s;
  for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? " " : "") << xs[i];
  return s.str();
}

Outcome check_eq1_symmetry(int n) {
  const auto t = invariant_table(n);
  const auto ps = series_bundle(n).ps_M;
  bool ok = ps.degree() == n - 3;
  for (int q = 0; q <= n - 3; ++q) ok = ok && ps[q] == ps[n - 3 - q];
  BigInt total = 2 * t.D;
  for (int q = 0; q <= t.m - 2; ++q) total += binom(n - 1, q);
  for (int q = t.m; q <= n - 3; ++q) total += binom(n - 1, q + 2);
  ok = ok && ps.value_at_one() == total && ps[t.m - 1] == 2 * t.D;
  return {ok, "ps_M = " + ps.to_string()};
}

Outcome check_ring_dims(int n) {
  const ring::Presentation pres(n);
  const auto dims = pres.quotient_dims(n - 2);
  const auto expected = series_bundle(n).ps_Z2_Mbar;
  bool ok = dims[static_cast<std::size_t>(n - 2)] == 0;
  for (int q = 0; q <= n - 3; ++q) ok = ok && BigInt(dims[static_cast<std::size_t>(q)]) == expected[q];
  return {ok, "ring dims " + join(dims) + " vs closed form " + expected.to_string()};
}

Outcome check_cup_ranks(int n) {
  const auto t = invariant_table(n);
  const auto ranks = ring::Presentation(n).r2_cup_ranks();
  std::vector<BigInt> closed;
  bool ok = true;
  for (int q = 0; q <= n - 3; ++q) {
    closed.push_back(r2_cup_rank_closed_form(n, q));
    ok = ok && BigInt(ranks[static_cast<std::size_t>(q)]) == closed.back();
  }
  ok = ok && BigInt(ranks[static_cast<std::size_t>(t.m - 2)]) == t.gamma - t.beta;
  return {ok, "lambda " + join(ranks) + " vs closed form " + join(closed)};
}

Outcome check_relation_kernel(int n) {
  const auto t = invariant_table(n);
  const auto r = ring::relation_kernel_check(n);
  const bool ok = BigInt(r.dim_X) == t.beta && BigInt(r.dim_X) == t.D - t.d && r.f_independent &&
                  r.kernel_matches_complex && BigInt(r.dim_Y) == t.gamma && r.dim_Z == r.dim_X;
  std::ostringstream s;
  s << "dim X = " << r.dim_X << " (beta = " << t.beta << "), F independent = " << std::boolalpha
    << r.f_independent << ", matches complex kernel = " << r.kernel_matches_complex << ", dim Y = " << r.dim_Y
    << ", dim Z = " << r.dim_Z;
  return {ok, s.str()};
}

Outcome check_complex_vanishing(int n) {
  const int m = half_of_odd(n);
  const auto v = static_cast<unsigned>(2 * m);
  const unsigned top_main = (m + 1) % 2 == 0 ? v : v - 1;
  const unsigned top_other = m % 2 == 0 ? v : v - 1;
  const auto main = complex_homology(v, top_main);
  const auto other = complex_homology(v, top_other);
  bool ok = std::all_of(main.homology_dims.begin(), main.homology_dims.end(), [](auto h) { return h == 0; });
  bool middle_nonzero = false;
  for (std::size_t i = 0; i < other.degrees.size(); ++i) {
    if (other.degrees[i] == static_cast<unsigned>(m))
      middle_nonzero = other.homology_dims[i] != 0;
    else
      ok = ok && other.homology_dims[i] == 0;
  }
  ok = ok && middle_nonzero;
  return {ok, "complex through C_" + std::to_string(m + 1) + ": " + join(main.homology_dims) +
                  "; complex through C_" + std::to_string(m) + ": " + join(other.homology_dims)};
}

Outcome check_inclusion_rank(int n) {
  const auto t = invariant_table(n);
  const auto r = inclusion_rank(static_cast<unsigned>(n - 1), static_cast<unsigned>(t.m + 1),
                                static_cast<unsigned>(t.m - 1));
  return {BigInt(r) == t.D, "rank " + std::to_string(r) + " vs D = " + t.D.str()};
}

Outcome check_gysin(int n) {
  std::vector<BigInt> lambdas;
  for (int q = 0; q <= n - 3; ++q) lambdas.push_back(r2_cup_rank_closed_form(n, q));
  const auto dims = gysin_dims(n, lambdas);
  return {gysin_check(n, lambdas), "Gysin dims " + dims.to_string() + " vs " + series_bundle(n).ps_Z2_E.to_string()};
}

Outcome check_uct(int n) {
  const auto t = invariant_table(n);
  const auto b = series_bundle(n);
  const auto quotient = divide_difference_by_one_plus_t(b.ps_Z2_E, b.ps_Q_E);
  const bool ok = quotient == b.gamma_E && b.ps_Q_E == b.phi.times_one_plus_t() &&
                  b.gamma_E[t.m - 1] == t.beta && b.ps_Q_E[t.m - 1] == t.D + (t.m % 2 == 0 ? binom(n - 1, t.m - 2) : 0);
  return {ok, "quotient " + quotient.to_string() + " vs gamma_E " + b.gamma_E.to_string()};
}

Outcome check_wang(int n) {
  const auto t = invariant_table(n);
  const auto c = wang_divisor_counts(n);
  const bool ok = c.zeros == t.D && c.ones == t.alpha && c.twos == t.beta;
  return {ok, "divisor counts (0,1,2) = (" + c.zeros.str() + "," + c.ones.str() + "," + c.twos.str() + ")"};
}

Outcome check_tau_triple(int n, int max_ring_n) {
  const auto t = invariant_table(n);
  const auto triple = tau_normal_form(n);
  bool ok = triple == InvolutionClass{t.alpha, t.beta, t.beta};
  // The all-swap form (D, 0, 0) must differ exactly when beta != 0.
  ok = ok && ((triple == InvolutionClass{t.D, 0, 0}) == (t.beta == 0));
  std::string details = "triple (" + triple.x.str() + "," + triple.y.str() + "," + triple.z.str() + ")";
  if (n <= max_ring_n) {
    const auto f = involution_normal_form(to_u64(triple.x), to_u64(triple.y), to_u64(triple.z));
    ok = ok && classify_involution(f) == triple;
    details += ", classifier round-trip on " + std::to_string(f.rows()) + "x" + std::to_string(f.cols());
  } else {
    details += ", classifier round-trip not run above n = " + std::to_string(max_ring_n);
  }
  return {ok, details};
}

Outcome check_series_alpha(int n) {
  const auto t = invariant_table(n);
  const auto series = alpha_series(static_cast<std::size_t>(t.m));
  return {series.back() == t.alpha, "series coefficient " + series.back().str() + " vs alpha " + t.alpha.str()};
}

Outcome check_d_alpha(int n) {
  const auto t = invariant_table(n);
  const BigInt s = sine_sum(t.m);
  return {t.d == t.alpha && s == t.alpha, "d = " + t.d.str() + ", sine sum = " + s.str() + ", alpha = " + t.alpha.str()};
}

// Checks that build GF(2) matrices whose size grows with C(n-1, m).
bool is_matrix_check(const std::string& id) {
  return id == "eq11-ring-dims" || id == "prop6-lambda" || id == "lemma7" || id == "bjs-vanishing" ||
         id == "wilson-rank";
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::filesystem::path cache_path(const std::filesystem::path& dir, const std::string& id, int n, int max_ring_n) {
  std::ostringstream key;
  key << kToolkitVersion << '|' << id << '|' << n << '|' << max_ring_n;
  std::ostringstream name;
  name << id << "-n" << n << '-' << std::hex << fnv1a(key.str()) << ".json";
  return dir / name.str();
}

std::optional<CheckResult> cache_load(const std::filesystem::path& file, const std::string& id) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.at("id").get<std::string>() != id) return std::nullopt;
    return CheckResult{id, check_status_from_string(j.at("status").get<std::string>()),
                       j.at("details").get<std::string>(), 0};
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entries are recomputed and overwritten
  }
}

void cache_store(const std::filesystem::path& file, const CheckResult& r) {
  static std::atomic<std::uint64_t> counter{0};
  std::ostringstream tmp_name;
  tmp_name << file.filename().string() << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id())
           << '.' << counter++ << '.' << std::chrono::steady_clock::now().time_since_epoch().count();
  const auto tmp = file.parent_path() / tmp_name.str();
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << nlohmann::json{{"id", r.id}, {"status", to_string(r.status)}, {"details", r.details}}.dump();
    if (!out) return;
  }
  std::error_code ec;
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace

CheckResult run_check(const std::string& id, int n, int max_ring_n) {
  const auto& reg = check_registry();
  if (std::find(reg.begin(), reg.end(), id) == reg.end())
    throw Error(ErrorKind::InvalidArgument, "unknown check id '" + id + "'");
  half_of_odd(n);

  const auto start = std::chrono::steady_clock::now();
  CheckResult r{id, CheckStatus::Fail, "", 0};
  if (is_matrix_check(id) && n > max_ring_n) {
    r.status = CheckStatus::Skipped;
    r.details = "n = " + std::to_string(n) + " exceeds --max-ring-n " + std::to_string(max_ring_n);
  } else {
    static const std::map<std::string, std::function<Outcome(int, int)>> table{
        {"eq1-symmetry", [](int n, int) { return check_eq1_symmetry(n); }},
        {"eq11-ring-dims", [](int n, int) { return check_ring_dims(n); }},
        {"prop6-lambda", [](int n, int) { return check_cup_ranks(n); }},
        {"lemma7", [](int n, int) { return check_relation_kernel(n); }},
        {"bjs-vanishing", [](int n, int) { return check_complex_vanishing(n); }},
        {"wilson-rank", [](int n, int) { return check_inclusion_rank(n); }},
        {"gysin", [](int n, int) { return check_gysin(n); }},
        {"uct-division", [](int n, int) { return check_uct(n); }},
        {"wang-table1", [](int n, int) { return check_wang(n); }},
        {"theoremA-triple", [](int n, int max) { return check_tau_triple(n, max); }},
        {"series-alpha", [](int n, int) { return check_series_alpha(n); }},
        {"d-equals-alpha", [](int n, int) { return check_d_alpha(n); }},
    };
    try {
      const Outcome o = table.at(id)(n, max_ring_n);
      r.status = o.ok ? CheckStatus::Pass : CheckStatus::Fail;
      r.details = o.details;
    } catch (const std::exception& e) {
      r.status = CheckStatus::Fail;
      r.details = std::string("error: ") + e.what();
    }
  }
  r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

VerificationReport verify(const VerifyOptions& options) {
  half_of_odd(options.n);
  std::vector<std::string> ids;
  if (options.checks.empty()) {
    ids = check_registry();
  } else {
    for (const auto& id : check_registry())
      if (std::find(options.checks.begin(), options.checks.end(), id) != options.checks.end()) ids.push_back(id);
    for (const auto& id : options.checks)
      if (std::find(ids.begin(), ids.end(), id) == ids.end())
        throw Error(ErrorKind::InvalidArgument, "unknown check id '" + id + "'");
  }
  if (options.cache_dir) std::filesystem::create_directories(*options.cache_dir);

  std::vector<CheckResult> results(ids.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ids.size(); i = next++) {
      const auto start = std::chrono::steady_clock::now();
      std::optional<std::filesystem::path> file;
      if (options.cache_dir) {
        file = cache_path(*options.cache_dir, ids[i], options.n, options.max_ring_n);
        if (auto hit = cache_load(*file, ids[i])) {
          hit->ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                        .count();
          results[i] = std::move(*hit);
          continue;
        }
      }
      results[i] = run_check(ids[i], options.n, options.max_ring_n);
      if (file) cache_store(*file, results[i]);
    }
  };

  unsigned jobs = options.jobs ? options.jobs : std::max(1U, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(ids.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
    worker();
  }
  return {options.n, std::move(results)};
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"id", c.id}, {"status", to_string(c.status)}, {"details", c.details}, {"ms", c.ms}});
  return {{"n", report.n}, {"checks", checks}};
}

VerificationReport report_from_json(const nlohmann::json& j) {
  try {
    VerificationReport r;
    r.n = j.at("n").get<int>();
    for (const auto& c : j.at("checks"))
      r.checks.push_back({c.at("id").get<std::string>(), check_status_from_string(c.at("status").get<std::string>()),
                          c.at("details").get<std::string>(), c.at("ms").get<std::int64_t>()});
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedInput, std::string("bad report JSON: ") + e.what());
  }
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream s;
  s << "n = " << report.n << '\n';
  for (const auto& c : report.checks)
    s << to_string(c.status) << "  " << c.id << "  (" << c.ms << " ms)  " << c.details << '\n';
  s << (report.all_passed() ? "all checks passed" : "FAILED") << '\n';
  return s.str();
}

}  // namespace polyspace
