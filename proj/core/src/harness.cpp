#include "bruhat/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "bruhat/bijection.hpp"
#include "bruhat/errors.hpp"
#include "bruhat/hcd.hpp"
#include "bruhat/order.hpp"
#include "bruhat/rpoly.hpp"
#include "bruhat/shortcut.hpp"

namespace bruhat {

using nlohmann::json;

namespace {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

json details_or_empty(const std::string& details_json) {
  if (details_json.empty()) return json::object();
  return json::parse(details_json);
}

// ---- deterministic sampling ----------------------------------------------

struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // Uniform in [0, bound) by rejection; bound >= 1.
  std::uint64_t bounded(std::uint64_t bound) {
    const std::uint64_t threshold = (~bound + 1) % bound;
    while (true) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }
};

Permutation random_permutation(int n, SplitMix64& rng) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  for (int i = n - 1; i > 0; --i)
    std::swap(w[static_cast<std::size_t>(i)], w[rng.bounded(static_cast<std::uint64_t>(i) + 1)]);
  return Permutation(std::move(w));
}

// ---- per-interval checks --------------------------------------------------

constexpr StandardKind kAllKinds[] = {StandardKind::Zn, StandardKind::Z1, StandardKind::ZupN, StandardKind::Zup1};

json shortcut_set_json(const std::vector<Shortcut>& sc) {
  json arr = json::array();
  for (const auto& s : sc) arr.push_back({{"perm", s.p.str()}, {"dist", s.dist}});
  return arr;
}

std::pair<CheckStatus, json> check_standard_hcd(const Interval& iv) {
  json kinds = json::array();
  bool ok = true;
  for (StandardKind kind : kAllKinds) {
    const Permutation z = standard_hcd(iv, kind);
    const HcdReport rep = is_hcd(iv, z);
    const bool amazing = rep.ok() && is_amazing(iv, z);
    json entry{{"kind", standard_kind_name(kind)}, {"z", z.str()}, {"hcd", rep.ok()}, {"amazing", amazing}};
    if (!rep.ok()) {
      if (rep.diamond_witness)
        entry["diamond_witness"] = {{"x", rep.diamond_witness->x.str()},
                                    {"a1", rep.diamond_witness->a1.str()},
                                    {"a2", rep.diamond_witness->a2.str()},
                                    {"y", rep.diamond_witness->y.str()}};
      if (rep.cluster_witness) {
        json srcs = json::array();
        for (const auto& s : rep.cluster_witness->sources) srcs.push_back(s.str());
        entry["cluster_witness"] = {{"p", rep.cluster_witness->p.str()}, {"sources", srcs}};
      }
    }
    ok = ok && rep.ok() && amazing;
    kinds.push_back(std::move(entry));
  }
  return {ok ? CheckStatus::Pass : CheckStatus::Fail, json{{"kinds", kinds}}};
}

std::pair<CheckStatus, json> check_shortcut_char(const Interval& iv) {
  json kinds = json::array();
  bool ok = true;
  for (StandardKind kind : kAllKinds) {
    const Permutation z = standard_hcd(iv, kind);
    const auto closed = shortcuts_standard(iv, kind);
    const auto paths = shortcuts_by_paths(iv, z);
    const bool equal = closed == paths;
    json entry{{"kind", standard_kind_name(kind)}, {"z", z.str()}, {"equal", equal}};
    if (!equal) {
      entry["closed_form"] = shortcut_set_json(closed);
      entry["path_definition"] = shortcut_set_json(paths);
    }
    ok = ok && equal;
    kinds.push_back(std::move(entry));
  }
  return {ok ? CheckStatus::Pass : CheckStatus::Fail, json{{"kinds", kinds}}};
}

std::pair<CheckStatus, json> check_r_element(const Interval& iv) {
  json kinds = json::array();
  bool ok = true;
  RTilde rt;
  const RPoly lhs = rt(iv.u(), iv.v());
  for (StandardKind kind : kAllKinds) {
    const Permutation z = standard_hcd(iv, kind);
    const auto sc = shortcuts_by_paths(iv, z);
    RPoly rhs;
    for (const auto& s : sc) rhs += rt(s.p, iv.v()).shifted(s.dist);
    const bool equal = lhs == rhs;
    json entry{{"kind", standard_kind_name(kind)}, {"z", z.str()}, {"equal", equal}};
    if (!equal) {
      entry["rtilde"] = lhs.str();
      entry["shortcut_sum"] = rhs.str();
    }
    ok = ok && equal;
    kinds.push_back(std::move(entry));
  }
  return {ok ? CheckStatus::Pass : CheckStatus::Fail, json{{"kinds", kinds}}};
}

std::pair<CheckStatus, json> check_thm_double_shortcuts(const Interval& iv) {
  constexpr std::pair<StandardKind, StandardKind> pairs[] = {
      {StandardKind::Zn, StandardKind::Z1},
      {StandardKind::ZupN, StandardKind::Zup1},
      {StandardKind::Zn, StandardKind::ZupN},
      {StandardKind::Zup1, StandardKind::Z1},
  };
  json results = json::array();
  bool ok = true;
  for (const auto& [ka, kb] : pairs) {
    const Permutation za = standard_hcd(iv, ka);
    const Permutation zb = standard_hcd(iv, kb);
    const DSMultiset ab = ds_multiset(iv, za, zb);
    const DSMultiset ba = ds_multiset(iv, zb, za);
    const bool equal = ab == ba;
    json entry{{"pair", std::string(standard_kind_name(ka)) + "," + standard_kind_name(kb)}, {"equal", equal}};
    if (!equal) {
      entry["ds"] = json::parse(ab.json());
      entry["ds_swapped"] = json::parse(ba.json());
    }
    ok = ok && equal;
    results.push_back(std::move(entry));
  }
  return {ok ? CheckStatus::Pass : CheckStatus::Fail, json{{"pairs", results}}};
}

std::pair<CheckStatus, json> check_bijection(const Interval& iv) {
  const LemmaReport standard = verify_lemma(iv.u(), iv.v());
  const LemmaReport alpha = verify_lemma_alpha(iv.u(), iv.v());
  json details{{"pairs", standard.d_size},
               {"mirror_pairs", standard.dbar_size},
               {"alpha_pairs", alpha.d_size},
               {"alpha_mirror_pairs", alpha.dbar_size}};
  if (!standard.ok) details["failures"] = standard.failures;
  if (!alpha.ok) details["alpha_failures"] = alpha.failures;
  return {(standard.ok && alpha.ok) ? CheckStatus::Pass : CheckStatus::Fail, details};
}

std::pair<CheckStatus, json> check_ds_symmetry_all(const Interval& iv) {
  const DsAnalysis analysis = analyze_ds_symmetry(iv);
  const bool ok = analysis.asymmetric_pairs.empty() && analysis.classes.size() <= 1;
  json details{{"amazing", analysis.amazing.size()}, {"classes", analysis.classes.size()}};
  if (!analysis.asymmetric_pairs.empty()) {
    json bad = json::array();
    for (const auto& [a, b] : analysis.asymmetric_pairs) bad.push_back({{"z", a.str()}, {"zprime", b.str()}});
    details["asymmetric_pairs"] = bad;
  }
  return {ok ? CheckStatus::Pass : CheckStatus::Fail, details};
}

std::pair<CheckStatus, json> check_equiv_classes(const Interval& iv) {
  const auto classes = equivalence_classes(iv);
  std::set<Permutation> standards;
  for (StandardKind kind : kAllKinds) standards.insert(standard_hcd(iv, kind));

  auto class_of = [&](const Permutation& z) -> int {
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (std::find(classes[c].begin(), classes[c].end(), z) != classes[c].end()) return static_cast<int>(c);
    return -1;
  };
  bool one_class = true;
  int first = -2;
  json standards_json = json::array();
  for (const Permutation& z : standards) {
    const int c = class_of(z);
    standards_json.push_back({{"z", z.str()}, {"class", c}});
    if (first == -2) first = c;
    if (c < 0 || c != first) one_class = false;
  }
  json details{{"classes", classes.size()}, {"standards", standards_json}};
  return {one_class ? CheckStatus::Pass : CheckStatus::Fail, details};
}

using CheckFn = std::pair<CheckStatus, json> (*)(const Interval&);

struct SuiteEntry {
  const char* name;
  CheckFn fn;
};

constexpr SuiteEntry kSuites[] = {
    {"standard-hcd", &check_standard_hcd},
    {"shortcut-char", &check_shortcut_char},
    {"r-element", &check_r_element},
    {"thm-double-shortcuts", &check_thm_double_shortcuts},
    {"bijection", &check_bijection},
    {"ds-symmetry-all", &check_ds_symmetry_all},
    {"equiv-classes", &check_equiv_classes},
};

CheckFn find_suite(const std::string& name) {
  for (const auto& entry : kSuites)
    if (name == entry.name) return entry.fn;
  throw Error("unknown verification suite: " + name);
}

}  // namespace

std::string VerificationReport::json_line() const {
  json j{{"check", check},
         {"n", n},
         {"interval", {{"u", u_text}, {"v", v_text}}},
         {"status", status_name(status)},
         {"details", details_or_empty(details_json)},
         {"elapsed_ms", elapsed_ms}};
  return j.dump();
}

std::string SweepSummary::json_line() const {
  json j{{"summary", true},
         {"check", check},
         {"n", options.n},
         {"total", total},
         {"pass", passed},
         {"fail", failed},
         {"skip", skipped},
         {"seed", options.seed},
         {"sample", options.sample},
         {"jobs", options.jobs},
         {"elapsed_ms", elapsed_ms}};
  return j.dump();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : kSuites) out.emplace_back(entry.name);
    return out;
  }();
  return names;
}

bool is_suite_name(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

VerificationReport run_check_on_interval(const std::string& check, const Permutation& u, const Permutation& v) {
  CheckFn fn = find_suite(check);
  VerificationReport report;
  report.check = check;
  report.n = u.rank();
  report.u_text = u.str();
  report.v_text = v.str();
  const auto start = std::chrono::steady_clock::now();
  auto [status, details] = fn(Interval(u, v));
  report.status = status;
  report.details_json = details.dump();
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<std::pair<Permutation, Permutation>> all_intervals(int n) {
  auto G = SymmetricGroup::get(n);
  std::vector<std::pair<Permutation, Permutation>> out;
  for (int vi = 0; vi < G->order(); ++vi)
    G->downset(vi).for_each([&](int ui) { out.emplace_back(G->element(ui), G->element(vi)); });
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const int da = length(a.second) - length(a.first);
    const int db = length(b.second) - length(b.first);
    if (da != db) return da < db;
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });
  return out;
}

std::vector<std::pair<Permutation, Permutation>> sample_intervals(int n, int count, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::set<std::pair<Permutation, Permutation>> seen;
  std::vector<std::pair<Permutation, Permutation>> out;
  int attempts = 0;
  const int max_attempts = 1000000;
  while (static_cast<int>(out.size()) < count && attempts < max_attempts) {
    ++attempts;
    Permutation u = random_permutation(n, rng);
    Permutation v = random_permutation(n, rng);
    if (!bruhat_leq(u, v)) continue;
    auto pair = std::make_pair(std::move(u), std::move(v));
    if (seen.insert(pair).second) out.push_back(pair);
  }
  return out;
}

namespace {

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  jobs = std::min<int>(jobs, static_cast<int>(count));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex error_mu;
  std::exception_ptr first_error;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int j = 0; j < jobs; ++j) {
    pool.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) break;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

SweepSummary run_suite(const std::string& check, const SweepOptions& options, const ReportSink& sink) {
  find_suite(check);  // validate early
  if (options.n < 1 || options.n > kMaxSweepRank) throw Error("sweep rank out of range 1..7");

  const auto intervals = options.sample > 0 ? sample_intervals(options.n, options.sample, options.seed)
                                            : all_intervals(options.n);
  SweepSummary summary;
  summary.check = check;
  summary.options = options;
  summary.total = static_cast<int>(intervals.size());

  std::mutex mu;
  const auto start = std::chrono::steady_clock::now();
  parallel_for(intervals.size(), options.jobs, [&](std::size_t i) {
    VerificationReport report = run_check_on_interval(check, intervals[i].first, intervals[i].second);
    std::lock_guard<std::mutex> lock(mu);
    switch (report.status) {
      case CheckStatus::Pass: ++summary.passed; break;
      case CheckStatus::Fail: ++summary.failed; break;
      case CheckStatus::Skip: ++summary.skipped; break;
    }
    if (sink) sink(report);
  });
  summary.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

SweepSummary replay_failures(const std::string& path, const ReportSink& sink) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open replay file: " + path);
  SweepSummary summary;
  summary.check = "replay";
  const auto start = std::chrono::steady_clock::now();
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || j.value("summary", false)) continue;
    if (j.value("status", "") != "fail") continue;
    const Permutation u = Permutation::parse(j["interval"]["u"].get<std::string>());
    const Permutation v = Permutation::parse(j["interval"]["v"].get<std::string>());
    VerificationReport report = run_check_on_interval(j["check"].get<std::string>(), u, v);
    ++summary.total;
    switch (report.status) {
      case CheckStatus::Pass: ++summary.passed; break;
      case CheckStatus::Fail: ++summary.failed; break;
      case CheckStatus::Skip: ++summary.skipped; break;
    }
    if (sink) sink(report);
  }
  summary.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

namespace {

int run_verify(const std::string& suite, const SweepOptions& options, const std::string& replay_path,
               const std::string& u_text, const std::string& v_text, const std::string& json_path,
               std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* report_stream = &out;
  if (!json_path.empty()) {
    file.open(json_path);
    if (!file) {
      err << "cannot open report file: " << json_path << "\n";
      return 2;
    }
    report_stream = &file;
  }
  std::mutex emit_mu;
  ReportSink sink = [&](const VerificationReport& r) {
    std::lock_guard<std::mutex> lock(emit_mu);
    (*report_stream) << r.json_line() << "\n";
  };

  SweepSummary summary;
  if (!replay_path.empty()) {
    summary = replay_failures(replay_path, sink);
  } else if (!u_text.empty() || !v_text.empty()) {
    if (u_text.empty() || v_text.empty()) {
      err << "--u and --v must be given together\n";
      return 2;
    }
    const Permutation u = Permutation::parse(u_text);
    const Permutation v = Permutation::parse(v_text);
    detail::require_same_rank(u, v, "verify");
    if (!bruhat_leq(u, v)) throw NotComparable("verify: u is not below v");
    VerificationReport report = run_check_on_interval(suite, u, v);
    sink(report);
    summary.check = suite;
    summary.options.n = u.rank();
    summary.total = 1;
    summary.passed = report.status == CheckStatus::Pass;
    summary.failed = report.status == CheckStatus::Fail;
    summary.skipped = report.status == CheckStatus::Skip;
    summary.elapsed_ms = report.elapsed_ms;
  } else {
    summary = run_suite(suite, options, sink);
  }

  (*report_stream) << summary.json_line() << "\n";
  if (report_stream != &out)
    out << (summary.all_passed() ? "PASS" : "FAIL") << " " << summary.check << ": " << summary.passed << "/"
        << summary.total << " intervals passed (" << summary.failed << " failed), report in " << json_path << "\n";
  return summary.all_passed() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bruhat-interval hypercube decompositions, shortcuts and double-shortcut verification"};
  app.require_subcommand(1);

  std::string suite, u_text, v_text, z_text, zprime_text, json_path, replay_path;
  SweepOptions options;
  options.sample = -1;  // resolved per rank below

  auto* verify = app.add_subcommand("verify", "sweep a verification suite over Bruhat intervals");
  verify->add_option("suite", suite, "one of: standard-hcd, shortcut-char, r-element, thm-double-shortcuts, bijection, ds-symmetry-all, equiv-classes");
  verify->add_option("--n", options.n, "symmetric group rank (1..7)")->check(CLI::Range(1, kMaxSweepRank));
  verify->add_option("--sample", options.sample, "number of seeded random intervals (0 = exhaustive)");
  verify->add_option("--seed", options.seed, "sample seed");
  verify->add_option("--jobs", options.jobs, "worker threads (0 = hardware)");
  verify->add_option("--json", json_path, "write JSON-lines reports to this file");
  verify->add_option("--u", u_text, "restrict to the single interval [u,v]");
  verify->add_option("--v", v_text, "restrict to the single interval [u,v]");
  verify->add_option("--replay", replay_path, "re-run the failed records of a report file");

  auto* ds = app.add_subcommand("ds", "compute DS(z,z') and DS(z',z) for one interval");
  ds->add_option("--u", u_text)->required();
  ds->add_option("--v", v_text)->required();
  ds->add_option("--z", z_text)->required();
  ds->add_option("--zprime", zprime_text)->required();
  ds->add_option("--json", json_path, "write the result object to this file");

  auto* rp = app.add_subcommand("rpoly", "print the R-tilde polynomial of [u,v]");
  rp->add_option("--u", u_text)->required();
  rp->add_option("--v", v_text)->required();
  rp->add_option("--json", json_path, "write the result object to this file");

  auto* cls = app.add_subcommand("classes", "print the double-shortcut equivalence classes of [u,v]");
  cls->add_option("--u", u_text)->required();
  cls->add_option("--v", v_text)->required();
  cls->add_option("--json", json_path, "write the result object to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (verify->parsed()) {
      if (replay_path.empty() && !is_suite_name(suite)) {
        err << "unknown or missing suite name; expected one of:";
        for (const auto& name : suite_names()) err << " " << name;
        err << "\n";
        return 2;
      }
      if (options.sample < 0) options.sample = options.n >= 6 ? 300 : 0;
      return run_verify(suite, options, replay_path, u_text, v_text, json_path, out, err);
    }

    const Permutation u = Permutation::parse(u_text);
    const Permutation v = Permutation::parse(v_text);
    detail::require_same_rank(u, v, "cli");
    if (!bruhat_leq(u, v)) throw NotComparable("u is not below v");

    json result;
    if (ds->parsed()) {
      const Permutation z = Permutation::parse(z_text);
      const Permutation zp = Permutation::parse(zprime_text);
      Interval iv(u, v);
      const DSMultiset ab = ds_multiset(iv, z, zp);
      const DSMultiset ba = ds_multiset(iv, zp, z);
      result = {{"u", u.str()},        {"v", v.str()},
                {"z", z.str()},        {"zprime", zp.str()},
                {"ds", json::parse(ab.json())}, {"ds_swapped", json::parse(ba.json())},
                {"symmetric", ab == ba}};
      out << result.dump() << "\n";
    } else if (rp->parsed()) {
      const RPoly poly = rtilde(u, v);
      result = {{"u", u.str()}, {"v", v.str()}, {"rtilde", poly.str()}, {"coeffs", json::parse(poly.coeff_list())}};
      out << poly.str() << "\n";
    } else if (cls->parsed()) {
      Interval iv(u, v);
      const auto classes = equivalence_classes(iv);
      json classes_json = json::array();
      for (const auto& c : classes) {
        json members = json::array();
        for (const auto& z : c) members.push_back(z.str());
        classes_json.push_back(members);
      }
      result = {{"u", u.str()}, {"v", v.str()}, {"classes", classes_json}, {"count", classes.size()}};
      out << result.dump() << "\n";
    }
    if (!json_path.empty()) {
      std::ofstream file(json_path);
      if (!file) {
        err << "cannot open report file: " << json_path << "\n";
        return 2;
      }
      file << result.dump() << "\n";
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace bruhat
