#include "eqcoh/degree.hpp"

#include <cctype>
#include <limits>
#include <vector>

#include "eqcoh/error.hpp"

namespace eqcoh {

namespace {

class Parser {
 public:
  Parser(const std::string& text, int n) : n_(n) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
      s_.push_back(text[i]);
      where_.push_back(i);
    }
    where_.push_back(text.size());
  }

  VirtualRep run() {
    if (s_.empty()) fail("empty degree");
    VirtualRep total(n_);
    int sign = 1;
    if (peek() == '+' || peek() == '-') sign = take() == '-' ? -1 : 1;
    total += sign * term();
    while (!done()) {
      char c = take();
      if (c != '+' && c != '-') fail(std::string("expected '+' or '-', found '") + c + "'", pos_ - 1);
      total += (c == '-' ? -1 : 1) * term();
    }
    return total;
  }

 private:
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  char take() { return s_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) {
    throw ParseError(what, where_[std::min(at, where_.size() - 1)]);
  }

  bool accept(const std::string& word) {
    if (s_.compare(pos_, word.size(), word) != 0) return false;
    pos_ += word.size();
    return true;
  }

  int uint() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an unsigned integer");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (take() - '0');
      if (v > std::numeric_limits<int>::max() / 4) fail("integer too large");
    }
    return static_cast<int>(v);
  }

  int paren_uint() {
    if (!accept("(")) fail("expected '('");
    int v = uint();
    if (!accept(")")) fail("expected ')'");
    return v;
  }

  VirtualRep term() {
    if (done()) fail("expected a term");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      int c = uint();
      if (done() || peek() == '+' || peek() == '-') return VirtualRep::trivial(n_, c);
      return c * atom();
    }
    return atom();
  }

  VirtualRep atom() {
    std::size_t start = pos_;
    if (accept("rho")) return VirtualRep::real_regular(n_);
    if (accept("phi")) return phi(paren_uint(), n_);
    if (accept("w")) return quat_w(paren_uint(), n_);
    if (accept("L")) return VirtualRep::lambda(n_, uint());
    if (accept("s")) {
      if (n_ % 2 != 0) fail("sign representation needs even n", start);
      return VirtualRep::sign(n_);
    }
    if (done()) fail("expected an atom");
    fail(std::string("unexpected character '") + peek() + "'");
  }

  int n_;
  std::string s_;
  std::vector<std::size_t> where_;
  std::size_t pos_ = 0;
};

}  // namespace

VirtualRep parse_degree(const std::string& text, int n) {
  if (n < 1) throw DomainError("group order must be positive");
  return Parser(text, n).run();
}

}  // namespace eqcoh
