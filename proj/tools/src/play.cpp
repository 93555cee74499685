#include "play.hpp"

#include <iostream>
#include <memory>
#include <string>

#include "powg/error.hpp"
#include "powg/exactsolve.hpp"
#include "powg/expr.hpp"
#include "powg/serialize.hpp"
#include "powg/strategies.hpp"

namespace powg::cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

std::optional<Natural> read_natural(const std::string& line) {
  if (line.empty() || line.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
  return Natural(line);
}

bool announce_if_lost(const Position& pos, std::ostream& out) {
  const auto t = find_loss_triple(pos);
  if (!t) return false;
  out << "Challenger wins: " << t->i << " * " << t->j << " < " << t->h << " < 2 * " << t->i << " * " << t->j
      << "  (h=" << t->h << ", i=" << t->i << ", j=" << t->j << ")\n";
  return true;
}

strategies::ChallengerStrategy engine_challenger(const Natural& u) {
  const Position start{u};
  if (start.fits_word()) {
    auto solver = std::make_shared<exact::Solver>();
    const auto v = solver->solve(start, 3);
    if (v.challenger_wins()) return strategies::solver_challenger(solver, v.rounds);
  }
  return strategies::challenger_root_probe(u);
}

}  // namespace

int play(const PlayOptions& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Natural u = parse_expr(o.u, 1u << 20).value;
  if (u < 1) throw PreconditionError("--u must be at least 1");
  const bool human_challenges = o.role == "challenger";
  if (!human_challenges && nt::is_oddless(u)) {
    err << "error: " << u << " is a power of two; Challenger has no winning strategy to play\n";
    return 2;
  }

  Transcript t;
  t.start = Position{u};
  Position pos = t.start;
  const auto engine_p = strategies::pow2_powerator();
  std::optional<strategies::ChallengerStrategy> engine_c;
  if (!human_challenges) {
    engine_c = engine_challenger(u);
    out << "engine Challenger: " << engine_c->name << "\n";
  }
  out << "start " << pos.to_string() << "\n";

  bool lost = false;
  std::string line;
  while (static_cast<int>(t.rounds.size()) < o.max_rounds) {
    Natural x, w;
    if (human_challenges) {
      out << "challenge> " << std::flush;
      if (!std::getline(in, line)) break;
      line = trim(line);
      if (line == "quit") break;
      const auto parsed = read_natural(line);
      if (!parsed || *parsed < 1) {
        out << "rejected: a challenge is a positive integer\n";
        continue;
      }
      x = *parsed;
      w = engine_p.respond(x, pos);
      out << "Powerator answers " << w << "\n";
    } else {
      const auto next = engine_c->next(t.start, t.rounds);
      if (!next) {
        out << "Challenger has no further move\n";
        break;
      }
      x = *next;
      const auto iv = response_interval(x);
      out << "Challenger plays " << x << "\n";
      bool quit = false;
      while (true) {
        out << "answer in [" << iv.lo << ", " << iv.hi << "]> " << std::flush;
        if (!std::getline(in, line) || trim(line) == "quit") {
          quit = true;
          break;
        }
        const auto parsed = read_natural(trim(line));
        if (parsed && iv.contains(*parsed)) {
          w = *parsed;
          break;
        }
        out << "rejected: " << trim(line) << " is not in [" << iv.lo << ", " << iv.hi << "]\n";
      }
      if (quit) break;
    }
    t.rounds.push_back({x, w});
    pos = apply(pos, w);
    if ((lost = announce_if_lost(pos, out))) break;
  }
  t.outcome = lost ? Outcome::ChallengerWins : Outcome::PoweratorSurvives;
  t.rounds_used = t.rounds.size();
  if (!lost) out << "Powerator still standing after " << t.rounds_used << " rounds\n";
  if (o.transcript) out << json::transcript(t).dump(2) << "\n";
  return 0;
}

}  // namespace powg::cli
