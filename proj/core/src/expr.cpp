#include "powg/expr.hpp"

#include <cctype>

#include "powg/error.hpp"

namespace powg {
namespace {

class Parser {
 public:
  Parser(const std::string& s, std::uint64_t max_bits) : s_(s), max_bits_(max_bits) {}

  ParsedExpr parse() {
    ParsedExpr e = product();
    skip_ws();
    if (i_ != s_.size()) error("unexpected '" + std::string(1, s_[i_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw PreconditionError("expression \"" + s_ + "\" at " + std::to_string(i_) + ": " + what);
  }

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool eat(char c) {
    skip_ws();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) error(std::string("expected '") + c + "'");
  }

  void check_size(double bits) const {
    if (bits > static_cast<double>(max_bits_)) error("value exceeds " + std::to_string(max_bits_) + " bits");
  }

  std::uint64_t small(const Natural& n, const char* what) const {
    if (!n.fits_ulong_p()) error(std::string(what) + " argument too large");
    return n.get_ui();
  }

  ParsedExpr product() {
    ParsedExpr e = atom();
    while (eat('*')) {
      ParsedExpr rhs = atom();
      check_size(static_cast<double>(nt::bit_length(e.value)) + static_cast<double>(nt::bit_length(rhs.value)));
      e.value *= rhs.value;
      e.factorial_of.reset();
    }
    return e;
  }

  ParsedExpr atom() {
    skip_ws();
    if (eat('(')) {
      ParsedExpr e = product();
      expect(')');
      return e;
    }
    if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return {Natural(s_.substr(start, i_ - start)), std::nullopt};
    }
    std::string name;
    while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) name += s_[i_++];
    if (name == "fact") {
      expect('(');
      const std::uint64_t m = small(product().value, "fact");
      expect(')');
      // log2 m! <= m log2 m
      check_size(static_cast<double>(m) * static_cast<double>(nt::bit_length(Natural(static_cast<unsigned long>(m)))));
      Natural f;
      mpz_fac_ui(f.get_mpz_t(), m);
      return {f, m};
    }
    if (name == "pow") {
      expect('(');
      const Natural a = product().value;
      expect(',');
      const Natural b = product().value;
      expect(')');
      if (a <= 1) return {a == 1 || b == 0 ? Natural(1) : Natural(0), std::nullopt};
      const std::uint64_t eb = small(b, "pow");
      check_size(static_cast<double>(nt::bit_length(a)) * static_cast<double>(eb));
      Natural p;
      mpz_pow_ui(p.get_mpz_t(), a.get_mpz_t(), eb);
      return {p, std::nullopt};
    }
    if (name.empty()) error(i_ < s_.size() ? "unexpected '" + std::string(1, s_[i_]) + "'" : "unexpected end");
    error("unknown function '" + name + "'");
  }

  const std::string& s_;
  std::uint64_t max_bits_;
  std::size_t i_ = 0;
};

}  // namespace

ParsedExpr parse_expr(const std::string& text, std::uint64_t max_bits) { return Parser(text, max_bits).parse(); }

}  // namespace powg
