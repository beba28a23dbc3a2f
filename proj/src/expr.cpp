#include "dilog7/expr.hpp"

#include <cctype>
#include <cmath>

#include "dilog7/clausen.hpp"
#include "dilog7/constants.hpp"
#include "dilog7/zeta.hpp"

namespace dilog7 {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const PrecisionContext& ctx) : src_(text), ctx_(ctx) {}

  Real run() {
    Real v = expression();
    skip_space();
    if (pos_ != src_.size()) {
      throw ConfigError("unexpected trailing input at '" + src_.substr(pos_) + "'");
    }
    return v;
  }

 private:
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) {
      throw ConfigError(std::string("expected '") + c + "' in expression '" + src_ + "'");
    }
  }

  Real expression() {
    Real v = term();
    for (;;) {
      if (eat('+')) {
        v = v + term();
      } else if (eat('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  Real term() {
    Real v = factor();
    for (;;) {
      if (eat('*')) {
        v = v * factor();
      } else if (eat('/')) {
        Real d = factor();
        if (d.is_zero()) throw ConfigError("division by zero in expression");
        v = v / d;
      } else {
        return v;
      }
    }
  }

  Real factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    return primary();
  }

  Real primary() {
    skip_space();
    if (pos_ >= src_.size()) throw ConfigError("unexpected end of expression");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Real v = expression();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    throw ConfigError(std::string("unexpected character '") + c + "' in expression");
  }

  Real number() {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.')) {
      ++pos_;
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t mark = pos_++;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      } else {
        pos_ = mark;  // 'e' belonged to something else
      }
    }
    try {
      return ctx_.parse(src_.substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }

  Real identifier() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                  src_[pos_] == '_')) {
      ++pos_;
    }
    std::string name = src_.substr(start, pos_ - start);

    if (eat('(')) {
      Real arg0 = expression();
      if (name == "sqrt") {
        expect(')');
        if (arg0 < 0) throw ConfigError("sqrt of a negative value");
        return sqrt(arg0);
      }
      if (name == "cl2") {
        expect(')');
        return cl2(arg0, ctx_).value;
      }
      if (name == "L") {
        expect(',');
        Real s = expression();
        expect(')');
        Real rounded = round_nearest(arg0);
        if (rounded != arg0) throw ConfigError("L(d, s) needs an integer modulus d");
        return dirichlet_l(arg0.to_long(), s, ctx_).value;
      }
      if (name == "zeta") {
        expect(',');
        Real a = expression();
        expect(')');
        return hurwitz_zeta(arg0, a, ctx_);
      }
      throw ConfigError("unknown function '" + name + "'");
    }

    if (name == "pi") return ctx_.pi();
    if (name == "sqrt7") return constants(ctx_).sqrt7;
    if (name == "phi7") return constants(ctx_).phi7;
    if (name == "theta_plus") return constants(ctx_).theta_plus;
    if (name == "omega_plus") return constants(ctx_).omega_plus;
    throw ConfigError("unknown identifier '" + name + "'");
  }

  const std::string& src_;
  const PrecisionContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

Real eval_expression(const std::string& text, const PrecisionContext& ctx) {
  return Parser(text, ctx).run();
}

}  // namespace dilog7
