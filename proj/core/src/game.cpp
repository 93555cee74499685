#include "powg/game.hpp"

#include <algorithm>
#include <sstream>

#include "powg/detail/kernel.hpp"
#include "powg/error.hpp"

namespace powg {
namespace {

void canonicalize(std::vector<Natural>& v) {
  for (const auto& u : v) {
    if (u < 1) throw PreconditionError("position elements must be >= 1, got " + u.get_str());
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

Natural from_wide(unsigned __int128 w) {
  Natural out = static_cast<unsigned long>(w >> 64);
  out <<= 64;
  out += static_cast<unsigned long>(w & ~std::uint64_t{0});
  return out;
}

}  // namespace

Position::Position(std::initializer_list<Natural> responses) : elems_(responses) {
  canonicalize(elems_);
}

Position::Position(std::vector<Natural> responses) : elems_(std::move(responses)) {
  canonicalize(elems_);
}

const Natural& Position::max() const {
  if (elems_.empty()) throw PreconditionError("max of empty position");
  return elems_.back();
}

bool Position::contains(const Natural& u) const {
  return std::binary_search(elems_.begin(), elems_.end(), u);
}

bool Position::fits_word() const {
  return elems_.empty() ||
         (mpz_fits_ulong_p(elems_.back().get_mpz_t()) && elems_.back().get_ui() < detail::kWordLimit);
}

std::vector<std::uint64_t> Position::to_words() const {
  if (!fits_word()) throw PreconditionError("position does not fit machine words");
  std::vector<std::uint64_t> out;
  out.reserve(elems_.size());
  for (const auto& u : elems_) out.push_back(u.get_ui());
  return out;
}

std::string Position::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < elems_.size(); ++k) {
    if (k) os << ", ";
    os << elems_[k].get_str();
  }
  os << '}';
  return os.str();
}

ResponseInterval response_interval(const Natural& x) {
  if (x < 1) throw PreconditionError("challenge must be >= 1, got " + x.get_str());
  Natural lo = x / 2 + 1;
  return {lo, x};
}

bool is_legal_response(const Natural& x, const Natural& u) {
  return x >= 1 && u >= 1 && u <= x && x < 2 * u;
}

std::optional<LossTriple> find_loss_triple(const Position& pos) {
  if (pos.fits_word()) {
    const auto words = pos.to_words();
    const auto t = detail::find_triple<detail::WordTraits>(words);
    if (!t) return std::nullopt;
    return LossTriple{Natural((*t)[0]), Natural((*t)[1]), Natural((*t)[2])};
  }
  const auto t = detail::find_triple<detail::BigTraits>(pos.responses());
  if (!t) return std::nullopt;
  return LossTriple{(*t)[0], (*t)[1], (*t)[2]};
}

bool is_lost(const Position& pos) {
  if (pos.fits_word()) {
    const auto words = pos.to_words();
    return detail::lost<detail::WordTraits>(words);
  }
  return detail::lost<detail::BigTraits>(pos.responses());
}

Position apply(const Position& pos, const Natural& u) {
  if (u < 1) throw PreconditionError("response must be >= 1");
  auto v = pos.responses();
  v.push_back(u);
  return Position(std::move(v));
}

Natural forcing_challenge(const Natural& target) {
  if (target < 1) throw PreconditionError("forcing_challenge: target must be >= 1");
  return 2 * target - 1;
}

Natural nondivisor_punish(const Natural& u_i, const Natural& u_j) {
  if (u_i < 2) throw PreconditionError("nondivisor_punish: u_i must be >= 2");
  if (u_i > u_j) throw PreconditionError("nondivisor_punish: need u_i <= u_j");
  if (mpz_divisible_p(u_j.get_mpz_t(), u_i.get_mpz_t())) {
    throw PreconditionError("nondivisor_punish: " + u_i.get_str() + " divides " + u_j.get_str());
  }
  return u_j / u_i;
}

std::string to_string(Outcome o) {
  return o == Outcome::ChallengerWins ? "ChallengerWins" : "PoweratorSurvives";
}

Position final_position(const Transcript& t) {
  auto v = t.start.responses();
  for (const auto& r : t.rounds) v.push_back(r.response);
  return Position(std::move(v));
}

namespace detail {
Natural wide_to_natural(unsigned __int128 w) { return from_wide(w); }
}  // namespace detail

}  // namespace powg
