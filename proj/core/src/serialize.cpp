#include "powg/serialize.hpp"

#include "powg/error.hpp"

namespace powg::json {
namespace {

Json nat(const Natural& n) { return n.get_str(); }

Json opt_nat(const std::optional<Natural>& n) { return n ? nat(*n) : Json(nullptr); }

Json bound(const std::optional<std::int64_t>& b) { return b ? Json(*b) : Json("inf"); }

Json nats(const std::vector<Natural>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(nat(x));
  return a;
}

}  // namespace

Json position(const Position& p) { return nats(p.responses()); }

Json rounds(std::span<const Round> rs) {
  Json a = Json::array();
  for (std::size_t i = 0; i < rs.size(); ++i) {
    a.push_back({{"round", i + 1}, {"challenge", nat(rs[i].challenge)}, {"response", nat(rs[i].response)}});
  }
  return a;
}

Json transcript(const Transcript& t) {
  return {{"start", position(t.start)},
          {"rounds", rounds(t.rounds)},
          {"outcome", to_string(t.outcome)},
          {"rounds_used", t.rounds_used}};
}

Json verdict(const exact::ComplexityInterval& ci) {
  return {{"u", nat(ci.u)},
          {"lower", bound(ci.lower)},
          {"lower_method", ci.lower_method},
          {"upper", bound(ci.upper)},
          {"upper_method", ci.upper_method},
          {"exact", ci.exact},
          {"witness_opening", opt_nat(ci.witness_opening)},
          {"bounds", bound_report(ci.upper_bounds)}};
}

Json solve_verdict(const exact::SolveVerdict& v) {
  return {{"kind", exact::to_string(v.kind)},
          {"rounds", v.rounds},
          {"opening", opt_nat(v.opening)},
          {"challenge_bound", nat(v.bound_used)},
          {"nodes", v.nodes}};
}

Json bound_report(const bounds::BoundReport& b) {
  Json entries = Json::array();
  for (const auto& e : b.entries) {
    Json x = {{"name", e.name}, {"applicable", e.applicable}};
    if (e.applicable) x["value"] = e.value;
    if (!e.witness.empty()) x["at"] = e.witness;
    if (!e.reason.empty()) x["reason"] = e.reason;
    entries.push_back(std::move(x));
  }
  return {{"power_of_two", b.power_of_two},
          {"best", bound(b.best)},
          {"best_source", b.best_source},
          {"entries", std::move(entries)}};
}

Json nu_nu(const bounds::NuNuReport& r) {
  auto term = [](const bounds::NuNuTerm& t) {
    return Json{{"p", nat(t.p)}, {"q", nat(t.q)}, {"nu", t.nu}, {"key", nat(t.key)}, {"value", t.value}};
  };
  Json terms = Json::array();
  for (const auto& t : r.terms) terms.push_back(term(t));
  return {{"best", term(r.best)}, {"terms", std::move(terms)}};
}

Json verify_report(const strategies::VerifyReport& r) {
  Json vs = Json::array();
  for (const auto& v : r.violations) vs.push_back({{"reason", v.reason}, {"rounds", rounds(v.rounds)}});
  return {{"strategy", r.strategy},
          {"start", position(r.start)},
          {"bound", r.bound},
          {"mode", strategies::to_string(r.mode)},
          {"branches_checked", r.branches_checked},
          {"nodes", r.nodes},
          {"max_rounds_seen", r.max_rounds_seen},
          {"violations", std::move(vs)}};
}

Json dnb(const certify::DnbTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"k", r.k}, {"D", nat(r.D)}, {"N", nat(r.N)}, {"B", nat(r.B)}, {"Bprime", nat(r.Bprime)}});
  }
  return {{"v", nat(t.v)}, {"rows", std::move(rows)}};
}

Json certificate(const certify::CertificateQuery& q, const certify::CertificateResult& r) {
  Json j;
  j["v"] = nat(q.v);
  j["l"] = q.l.size() == 1 ? nat(q.l[0]) : nats(q.l);
  j["r"] = q.r.size() == 1 ? nat(q.r[0]) : nats(q.r);
  j["k"] = q.k;
  j["conditions"] = {{"divisibility", r.divisibility}, {"exponent_gap", r.exponent_gap}};
  j["certified_lower"] = r.certified ? Json(q.k) : Json(nullptr);
  j["counterexample"] = r.counterexample ? Json(*r.counterexample) : Json(nullptr);
  j["tuples_checked"] = r.tuples_checked;
  return j;
}

Json lower_formula(const certify::LowerBoundFormula& f) {
  Json j = {{"applicable", f.applicable}};
  if (!f.applicable) {
    j["reason"] = f.reason;
    return j;
  }
  j["value"] = f.value;
  j["d"] = nat(f.d);
  j["d_term"] = f.d_term;
  j["l_term"] = f.l_term;
  j["simple_loglog3"] = f.simple_loglog3;
  j["simple_floorlog"] = f.simple_floorlog;
  return j;
}

Json factorial_sandwich(const certify::FactorialSandwichReport& r) {
  Json ps = Json::array();
  for (const auto& p : r.primes) ps.push_back({{"p", p.p}, {"nu_D", p.nu_d}, {"nu_r", nat(p.nu_r)}});
  return {{"k", r.k},
          {"m", r.m},
          {"divisibility", r.divisibility},
          {"exponent", r.exponent},
          {"certified_lower", r.certified_lower},
          {"d", nat(r.d)},
          {"upper", r.upper},
          {"D_digits", r.d_digits},
          {"primes", std::move(ps)}};
}

Json axioms(const axioms::AxiomsReport& r) {
  Json as = Json::object();
  for (const auto& c : r.checks) {
    Json x = {{"result", c.passed ? "pass" : "fail"}, {"statement", c.statement}, {"instances", c.instances}};
    if (!c.passed) x["counterexample"] = c.counterexample;
    as[c.name] = std::move(x);
  }
  return {{"limit", r.limit}, {"ok", r.ok()}, {"axioms", std::move(as)}};
}

Natural natural(const Json& j) {
  if (j.is_string()) return parse_natural(j.get<std::string>());
  if (j.is_number_unsigned()) return Natural(static_cast<unsigned long>(j.get<std::uint64_t>()));
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
    return Natural(static_cast<unsigned long>(j.get<std::int64_t>()));
  }
  throw PreconditionError("expected a natural number, got " + j.dump());
}

}  // namespace powg::json
