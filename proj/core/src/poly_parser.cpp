#include <cctype>

#include "qgrass/errors.hpp"
#include "qgrass/polynomial.hpp"

namespace qgrass {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t n, const FieldSpec& field)
      : text_(text), n_(n), field_(field) {}

  Polynomial parse() {
    Polynomial result(n_, field_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    parse_term(result, negative);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        parse_term(result, c == '-');
      } else {
        reject_unsupported();
        fail(std::string("unexpected character '") + c + "'");
      }
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void reject_unsupported() const {
    if (at_end()) return;
    if (peek() == '/') fail("division is not supported; coefficients must be integers");
    if (peek() == '.') fail("non-integer coefficient");
  }

  std::string digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(text_[pos_++]);
    return out;
  }

  void parse_term(Polynomial& acc, bool negative) {
    skip_ws();
    if (at_end()) fail("expected a term");
    mpz_class coeff = 1;
    Monomial mono{std::vector<unsigned>(n_ + 1, 0)};
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = mpz_class(digits());
      skip_ws();
      reject_unsupported();
      if (!at_end() && peek() == '*') {
        ++pos_;
      } else {
        need_factor = false;  // bare integer term
      }
    }
    if (need_factor) {
      parse_factor(mono);
      for (;;) {
        skip_ws();
        reject_unsupported();
        if (at_end() || peek() != '*') break;
        ++pos_;
        parse_factor(mono);
      }
    }
    if (negative) coeff = -coeff;
    acc.add_term(mono, Scalar(field_, coeff));
  }

  void parse_factor(Monomial& mono) {
    skip_ws();
    if (at_end()) fail("expected a variable T<index>");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("integer coefficient must come first in a term");
    }
    reject_unsupported();
    if (peek() != 'T') fail(std::string("expected 'T', found '") + peek() + "'");
    const std::size_t var_pos = pos_;
    ++pos_;
    const std::string idx = digits();
    if (idx.empty()) fail("expected a variable index after 'T'");
    const unsigned long index = std::stoul(idx);
    if (index > n_) {
      throw ParseError("variable T" + idx + " exceeds T" + std::to_string(n_), var_pos);
    }
    unsigned long exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t exp_pos = pos_;
      const std::string e = digits();
      if (e.empty()) fail("expected a positive exponent after '^'");
      exponent = std::stoul(e);
      if (exponent == 0) throw ParseError("exponent must be positive", exp_pos);
    }
    mono.exponents[index] += static_cast<unsigned>(exponent);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t n_;
  FieldSpec field_;
};

}  // namespace

Polynomial parse_poly(std::string_view text, std::size_t n, const FieldSpec& field) {
  return PolyParser(text, n, field).parse();
}

}  // namespace qgrass
