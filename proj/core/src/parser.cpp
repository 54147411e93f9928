#include "dioph/parser.hpp"

#include "dioph/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dioph {

namespace {

constexpr unsigned long kMaxExponent = 100000;

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars, MonomialOrder order)
      : text_(text), vars_(vars), order_(order) {}

  MultivariatePolynomial parse() {
    MultivariatePolynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  MultivariatePolynomial expr() {
    MultivariatePolynomial acc = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultivariatePolynomial term() {
    MultivariatePolynomial acc = factor();
    while (peek('*')) {
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  MultivariatePolynomial factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      MultivariatePolynomial inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(digits(), 10);
      Rational value(num);
      if (peek('/')) {
        ++pos_;
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          fail("expected an unsigned integer denominator");
        }
        Integer den(digits(), 10);
        if (den == 0) fail("zero denominator");
        value = make_rational(num, den);
      }
      return MultivariatePolynomial::constant(vars_.size(), value, order_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      Exponents e(vars_.size(), 0);
      const auto index = static_cast<std::size_t>(it - vars_.begin());
      e[index] = 1;
      if (peek('^')) {
        ++pos_;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          fail("expected an unsigned integer exponent");
        }
        const std::size_t exp_pos = pos_;
        Integer exp(digits(), 10);
        if (exp > kMaxExponent) {
          pos_ = exp_pos;
          fail("exponent too large");
        }
        e[index] = static_cast<unsigned>(exp.get_ui());
      }
      return MultivariatePolynomial::term(e, Rational(1), order_);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  MonomialOrder order_;
  std::size_t pos_ = 0;
};

}  // namespace

MultivariatePolynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables,
                                        MonomialOrder order) {
  return Parser(text, variables, order).parse();
}

std::string format_polynomial(const MultivariatePolynomial& p, const std::vector<std::string>& variables) {
  if (variables.size() != p.num_vars()) throw PreconditionError("variable names do not match the polynomial");
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exponents, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    unsigned da = total_degree(a.first), db = total_degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = total_degree(e) == 0;
    bool wrote = false;
    if (constant || mag != 1) {
      out << to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << "*";
      out << variables[i];
      if (e[i] > 1) out << "^" << e[i];
      wrote = true;
    }
  }
  return out.str();
}

}  // namespace dioph
