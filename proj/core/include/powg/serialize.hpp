#pragma once

// JSON forms of the library's results. Big integers are decimal strings;
// an infinite bound is the string "inf".

#include <json.hpp>

#include "powg/axioms.hpp"
#include "powg/bounds.hpp"
#include "powg/certify.hpp"
#include "powg/exactsolve.hpp"
#include "powg/game.hpp"
#include "powg/strategies.hpp"

namespace powg::json {

using Json = nlohmann::ordered_json;

Json position(const Position& p);
Json rounds(std::span<const Round> rs);
Json transcript(const Transcript& t);

/// Includes the upper-bound breakdown under "bounds".
Json verdict(const exact::ComplexityInterval& ci);
Json solve_verdict(const exact::SolveVerdict& v);
Json bound_report(const bounds::BoundReport& b);
Json nu_nu(const bounds::NuNuReport& r);

Json verify_report(const strategies::VerifyReport& r);

Json dnb(const certify::DnbTable& t);
Json certificate(const certify::CertificateQuery& q, const certify::CertificateResult& r);
Json lower_formula(const certify::LowerBoundFormula& f);
Json factorial_sandwich(const certify::FactorialSandwichReport& r);

Json axioms(const axioms::AxiomsReport& r);

/// Parses a decimal string or a JSON number.
Natural natural(const Json& j);

}  // namespace powg::json
