#include "crooked/expr.hpp"

#include <cctype>
#include <cmath>
#include <charconv>
#include <numbers>
#include <stdexcept>
#include <string>

namespace crooked::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  double parse() {
    const double v = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bad expression '" + std::string(s_) + "': " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  double sum() {
    double v = product();
    for (;;) {
      if (eat('+')) v += product();
      else if (eat('-')) v -= product();
      else return v;
    }
  }

  double product() {
    double v = unary();
    for (;;) {
      if (eat('*')) v *= unary();
      else if (eat('/')) v /= unary();
      else return v;
    }
  }

  double unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  // Right associative; binds tighter than unary minus on its left.
  double power() {
    const double base = atom();
    if (eat('^')) return std::pow(base, unary());
    return base;
  }

  double atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (eat('(')) {
      const double v = sum();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return name();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  double number() {
    double v = 0.0;
    const auto [end, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc()) fail("bad number");
    pos_ = static_cast<std::size_t>(end - s_.data());
    return v;
  }

  double name() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    const std::string id(s_.substr(start, pos_ - start));
    if (id == "pi") return std::numbers::pi;
    if (id == "e") return std::numbers::e;
    if (!eat('(')) fail("unknown name '" + id + "'");
    const double x = sum();
    if (!eat(')')) fail("missing ')'");
    if (id == "sin") return std::sin(x);
    if (id == "cos") return std::cos(x);
    if (id == "tan") return std::tan(x);
    if (id == "sinh") return std::sinh(x);
    if (id == "cosh") return std::cosh(x);
    if (id == "tanh") return std::tanh(x);
    if (id == "asinh") return std::asinh(x);
    if (id == "acosh") return std::acosh(x);
    if (id == "atanh") return std::atanh(x);
    if (id == "exp") return std::exp(x);
    if (id == "log") return std::log(x);
    if (id == "sqrt") return std::sqrt(x);
    if (id == "abs") return std::abs(x);
    fail("unknown function '" + id + "'");
  }
};

}  // namespace

double eval_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace crooked::cli
