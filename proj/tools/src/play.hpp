#pragma once

#include <iosfwd>
#include <string>

namespace powg::cli {

struct PlayOptions {
  /// The side the human plays: "challenger" or "powerator".
  std::string role;
  std::string u;
  int max_rounds = 20;
  bool transcript = false;
};

int play(const PlayOptions& o, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace powg::cli
