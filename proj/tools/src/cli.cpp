#include "powg_cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "play.hpp"
#include "powg/axioms.hpp"
#include "powg/bounds.hpp"
#include "powg/certify.hpp"
#include "powg/error.hpp"
#include "powg/exactsolve.hpp"
#include "powg/expr.hpp"
#include "powg/reproduce.hpp"
#include "powg/serialize.hpp"

namespace powg::cli {
namespace {

using json::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned default_jobs() {
  if (const char* e = std::getenv("POWG_JOBS")) {
    try {
      const long j = std::stol(e);
      if (j >= 1) return static_cast<unsigned>(j);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

struct Common {
  unsigned jobs = default_jobs();
  std::uint64_t seed = 20240601;
  std::string format = "json";
};

std::string bound_str(const std::optional<std::int64_t>& b) { return b ? std::to_string(*b) : "inf"; }

// ---------------------------------------------------------------------------

struct SolveArgs {
  std::string u;
  int rounds = 2;
  std::string challenge_bound;
  std::uint64_t node_budget = exact::SolverConfig{}.node_budget;
};

int cmd_solve(const SolveArgs& a, const Common& c, std::ostream& out) {
  const Natural u = parse_expr(a.u, 1u << 20).value;
  if (u < 1) throw UsageError("--u must be at least 1");
  exact::SolverConfig cfg;
  cfg.node_budget = a.node_budget;
  if (!a.challenge_bound.empty()) cfg.challenge_bound = parse_expr(a.challenge_bound).value;
  const auto ci = exact::complexity_interval(u, cfg, a.rounds);
  if (c.format == "text") {
    out << "u=" << ci.u << " lower=" << bound_str(ci.lower) << " (" << ci.lower_method << ") upper="
        << bound_str(ci.upper) << " (" << ci.upper_method << ")" << (ci.exact ? " exact" : "") << "\n";
  } else {
    out << json::verdict(ci).dump(2) << "\n";
  }
  return 0;
}

struct TableArgs {
  std::uint64_t from = 2;
  std::uint64_t to = 100;
  std::string out_path;
  int rounds = 2;
};

std::string csv_row(const exact::ComplexityInterval& ci) {
  std::ostringstream os;
  os << ci.u << "," << bound_str(ci.lower) << "," << ci.lower_method << "," << bound_str(ci.upper) << ","
     << ci.upper_method << "," << (ci.exact ? "true" : "false") << "\n";
  return os.str();
}

int cmd_table(const TableArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  if (a.from < 1 || a.to < a.from) throw UsageError("need 1 <= --from <= --to");
  std::ofstream file;
  if (!a.out_path.empty()) {
    file.open(a.out_path);
    if (!file) {
      err << "error: cannot write " << a.out_path << "\n";
      return 2;
    }
  }
  std::ostream& sink = a.out_path.empty() ? out : file;
  const std::uint64_t n = a.to - a.from + 1;
  std::vector<std::string> rows(n);
  const unsigned jobs = std::max(1u, c.jobs);
  std::vector<std::future<void>> fs;
  for (unsigned j = 0; j < jobs; ++j) {
    fs.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, [&, j] {
      for (std::uint64_t i = j; i < n; i += jobs) {
        rows[i] = csv_row(exact::complexity_interval(Natural(static_cast<unsigned long>(a.from + i)), {}, a.rounds));
      }
    }));
  }
  for (auto& f : fs) f.get();
  sink << "u,lower,lower_method,upper,upper_method,exact\n";
  for (const auto& r : rows) sink << r;
  sink.flush();
  if (!sink) {
    err << "error: write failed\n";
    return 2;
  }
  return 0;
}

struct CertifyArgs {
  std::string v;
  std::vector<std::string> l;
  std::vector<std::string> r;
  int k = 1;
  std::uint64_t budget = 1'000'000'000;
};

int cmd_certify(const CertifyArgs& a, std::ostream& out) {
  if (a.l.size() != a.r.size()) throw UsageError("--l and --r must be given the same number of times");
  certify::CertificateQuery q;
  q.v = parse_expr(a.v).value;
  q.k = a.k;
  std::vector<ParsedExpr> ls, rs;
  for (const auto& s : a.l) ls.push_back(parse_expr(s));
  for (const auto& s : a.r) rs.push_back(parse_expr(s));
  for (const auto& e : ls) q.l.push_back(e.value);
  for (const auto& e : rs) q.r.push_back(e.value);
  const auto res = certify::check_certificate(q, a.budget);
  Json j = json::certificate(q, res);
  if (q.l.size() == 1 && q.r[0] > 0) {
    SymbolicPow s = SymbolicPow::make(q.v, q.l[0], q.r[0]);
    s.l_factorial_of = ls[0].factorial_of;
    s.r_factorial_of = rs[0].factorial_of;
    j["formula"] = json::lower_formula(certify::lower_bound_formula(s));
  }
  out << j.dump(2) << "\n";
  return 0;
}

struct DnbArgs {
  std::string v = "3";
  int kmax = 5;
};

int cmd_dnb(const DnbArgs& a, const Common& c, std::ostream& out) {
  const auto t = certify::dnb_table(parse_expr(a.v).value, a.kmax);
  if (c.format == "csv") {
    out << "k,D,N,B,Bprime\n";
    for (const auto& r : t.rows) out << r.k << "," << r.D << "," << r.N << "," << r.B << "," << r.Bprime << "\n";
  } else {
    out << json::dnb(t).dump(2) << "\n";
  }
  return 0;
}

struct BoundsArgs {
  std::string u, v, l, r;
};

int cmd_bounds(const BoundsArgs& a, std::ostream& out) {
  SymbolicPow s;
  Json j;
  if (!a.u.empty()) {
    if (!a.v.empty() || !a.l.empty() || !a.r.empty()) throw UsageError("give either --u or --v/--l/--r");
    const Natural u = parse_expr(a.u).value;
    if (u < 1) throw UsageError("--u must be at least 1");
    j["u"] = u.get_str();
    if (nt::is_oddless(u)) {
      j["upper"] = json::bound_report(bounds::combine_upper(u));
      out << j.dump(2) << "\n";
      return 0;
    }
    s = SymbolicPow::from_natural(u);
    j["nu_nu"] = json::nu_nu(bounds::upper_nu_nu(u));
  } else {
    if (a.v.empty() || a.r.empty()) throw UsageError("need --u, or --v and --r (and optionally --l)");
    const auto l = parse_expr(a.l.empty() ? "0" : a.l);
    const auto r = parse_expr(a.r);
    s = SymbolicPow::make(parse_expr(a.v).value, l.value, r.value);
    s.l_factorial_of = l.factorial_of;
    s.r_factorial_of = r.factorial_of;
  }
  j["v"] = s.v.get_str();
  j["l"] = s.l.get_str();
  j["r"] = s.r.get_str();
  j["upper"] = json::bound_report(bounds::combine_upper(s));
  j["certified_lower"] = certify::best_single_certificate(s, certify::dnb_table(s.v, 4));
  j["lower_formula"] = json::lower_formula(certify::lower_bound_formula(s));
  out << j.dump(2) << "\n";
  return 0;
}

struct AxiomsArgs {
  std::string limit = "1000000";
  std::string windows_limit = "10000";
  std::string check = "all";
};

int cmd_axioms(const AxiomsArgs& a, std::ostream& out) {
  const Natural n = parse_expr(a.limit).value;
  axioms::AxiomsReport merged;
  auto take = [&](const axioms::AxiomsReport& r) {
    merged.checks.insert(merged.checks.end(), r.checks.begin(), r.checks.end());
  };
  merged.limit = n.get_ui();
  if (a.check == "all" || a.check == "p2") take(axioms::check_p2_axioms(n));
  if (a.check == "all" || a.check == "pow2") take(axioms::check_pow2_equiv(n));
  if (a.check == "all" || a.check == "windows") take(axioms::check_divisor_windows(parse_expr(a.windows_limit).value));
  out << json::axioms(merged).dump(2) << "\n";
  return merged.ok() ? 0 : 1;
}

struct VerifyArgs {
  std::string suite = "all";
  bool extended = false;
};

int cmd_verify_paper(const VerifyArgs& a, const Common& c, std::ostream& out) {
  reproduce::Options o;
  o.jobs = c.jobs;
  o.seed = c.seed;
  o.extended = a.extended;
  const auto results = reproduce::run(a.suite, o);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.ok();
  if (c.format == "json") {
    Json j = {{"seed", c.seed}, {"jobs", c.jobs}, {"ok", ok}};
    Json suites = Json::array();
    for (const auto& r : results) {
      Json checks = Json::array();
      for (const auto& ch : r.checks) checks.push_back({{"name", ch.name}, {"passed", ch.passed}, {"detail", ch.detail}});
      suites.push_back({{"suite", r.suite}, {"title", r.title}, {"ok", r.ok()}, {"seconds", r.seconds},
                        {"checks", std::move(checks)}});
    }
    j["suites"] = std::move(suites);
    out << j.dump(2) << "\n";
  } else {
    out << "seed=" << c.seed << " jobs=" << c.jobs << "\n";
    for (const auto& r : results) {
      out << (r.ok() ? "PASS " : "FAIL ") << r.suite << "  " << r.title << "  (" << r.seconds << " s)\n";
      for (const auto& ch : r.checks) {
        out << "  " << (ch.passed ? "ok  " : "FAIL") << " " << ch.name;
        if (!ch.detail.empty()) out << ": " << ch.detail;
        out << "\n";
      }
    }
    out << (ok ? "all passed" : "FAILED") << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power-of-two game: solver, strategies, certificates and reproduction suites", "powg"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--jobs", common.jobs, "Worker threads (default: POWG_JOBS or 1)")->check(CLI::PositiveNumber);
  app.add_option("--seed", common.seed, "Seed for randomized suites");

  SolveArgs solve;
  auto* s_solve = app.add_subcommand("solve", "Bounds on c(u) for a single response u");
  s_solve->add_option("--u", solve.u, "u, as an integer expression")->required();
  s_solve->add_option("--rounds", solve.rounds, "Search depth for the solver")->capture_default_str();
  s_solve->add_option("--challenge-bound", solve.challenge_bound, "Largest challenge searched below the root");
  s_solve->add_option("--node-budget", solve.node_budget, "One-round evaluations allowed")->capture_default_str();
  s_solve->add_option("--format", common.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  TableArgs table;
  auto* s_table = app.add_subcommand("table", "CSV of c(u) bounds for a range of u");
  s_table->add_option("--from", table.from)->capture_default_str();
  s_table->add_option("--to", table.to)->capture_default_str();
  s_table->add_option("--out", table.out_path, "Output file (default: stdout)");
  s_table->add_option("--rounds", table.rounds)->capture_default_str();

  CertifyArgs cert;
  auto* s_cert = app.add_subcommand("certify", "Check a lower-bound certificate c >= k for 2^l v^r");
  s_cert->add_option("--v", cert.v)->required();
  s_cert->add_option("--l", cert.l, "Repeat for several responses")->required();
  s_cert->add_option("--r", cert.r, "Repeat for several responses")->required();
  s_cert->add_option("--k", cert.k)->required()->check(CLI::PositiveNumber);
  s_cert->add_option("--budget", cert.budget, "Tuples enumerated at most")->capture_default_str();

  DnbArgs dnb;
  auto* s_dnb = app.add_subcommand("dnb", "Table of D_k, N_k, B_k, B'_k");
  s_dnb->add_option("--v", dnb.v)->capture_default_str();
  s_dnb->add_option("--kmax", dnb.kmax)->capture_default_str()->check(CLI::Range(1, certify::kMaxDnbRows));
  s_dnb->add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  BoundsArgs bnd;
  auto* s_bounds = app.add_subcommand("bounds", "Closed-form bounds for u or for 2^l v^r");
  s_bounds->add_option("--u", bnd.u);
  s_bounds->add_option("--v", bnd.v);
  s_bounds->add_option("--l", bnd.l);
  s_bounds->add_option("--r", bnd.r);

  AxiomsArgs ax;
  auto* s_ax = app.add_subcommand("axioms", "Check the powers-of-two axioms on [0, N)");
  s_ax->add_option("--limit", ax.limit)->capture_default_str();
  s_ax->add_option("--windows-limit", ax.windows_limit, "Largest x for the divisor-window check")
      ->capture_default_str();
  s_ax->add_option("--check", ax.check)->capture_default_str()->check(
      CLI::IsMember({"all", "p2", "pow2", "windows"}));

  VerifyArgs ver;
  auto* s_ver = app.add_subcommand("verify-paper", "Run reproduction suites");
  std::vector<std::string> suites = reproduce::suite_names();
  suites.push_back("all");
  s_ver->add_option("--suite", ver.suite)->capture_default_str()->check(CLI::IsMember(suites));
  s_ver->add_flag("--extended", ver.extended, "Include the slow optional parts");
  s_ver->add_option("--format", common.format, "text or json")->check(CLI::IsMember({"json", "text"}));

  PlayOptions pl;
  auto* s_play = app.add_subcommand("play", "Play interactively against the engine");
  s_play->add_option("--role", pl.role, "Side you play")->required()->check(
      CLI::IsMember({"challenger", "powerator"}));
  s_play->add_option("--u", pl.u, "Starting response")->required();
  s_play->add_option("--max-rounds", pl.max_rounds)->capture_default_str();
  s_play->add_flag("--transcript", pl.transcript, "Print the transcript as JSON at the end");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (s_ver->parsed() && s_ver->count("--format") == 0) common.format = "text";

  try {
    if (s_solve->parsed()) return cmd_solve(solve, common, out);
    if (s_table->parsed()) return cmd_table(table, common, out, err);
    if (s_cert->parsed()) return cmd_certify(cert, out);
    if (s_dnb->parsed()) return cmd_dnb(dnb, common, out);
    if (s_bounds->parsed()) return cmd_bounds(bnd, out);
    if (s_ax->parsed()) return cmd_axioms(ax, out);
    if (s_ver->parsed()) return cmd_verify_paper(ver, common, out);
    if (s_play->parsed()) return play(pl, in, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace powg::cli
