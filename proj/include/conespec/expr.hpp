#ifndef CONESPEC_EXPR_HPP
#define CONESPEC_EXPR_HPP

#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "conespec/error.hpp"
#include "conespec/fraction.hpp"

namespace conespec {

using Binding = std::map<std::string, std::int64_t, std::less<>>;

/// Integer arithmetic template: literals, named parameters, unary minus,
/// + - * and floor division "div". Immutable; subtrees are shared.
class TemplateExpr {
public:
  enum class Kind { Literal, Param, Neg, Add, Sub, Mul, Div };

  static TemplateExpr literal(BigInt v) {
    TemplateExpr e(Kind::Literal);
    e.value_ = std::move(v);
    return e;
  }
  static TemplateExpr param(std::string name) {
    TemplateExpr e(Kind::Param);
    e.name_ = std::move(name);
    return e;
  }
  static TemplateExpr negate(TemplateExpr operand) {
    TemplateExpr e(Kind::Neg);
    e.lhs_ = std::make_shared<const TemplateExpr>(std::move(operand));
    return e;
  }
  static TemplateExpr binary(Kind k, TemplateExpr lhs, TemplateExpr rhs) {
    TemplateExpr e(k);
    e.lhs_ = std::make_shared<const TemplateExpr>(std::move(lhs));
    e.rhs_ = std::make_shared<const TemplateExpr>(std::move(rhs));
    return e;
  }

  Kind kind() const noexcept { return kind_; }
  const BigInt& value() const noexcept { return value_; }
  const std::string& name() const noexcept { return name_; }
  const TemplateExpr& lhs() const { return *lhs_; }
  const TemplateExpr& rhs() const { return *rhs_; }

  // Fully parenthesized except at leaves; parse(str()) evaluates identically.
  std::string str() const {
    switch (kind_) {
      case Kind::Literal: return value_.str();
      case Kind::Param: return name_;
      case Kind::Neg: return "-(" + lhs_->str() + ")";
      case Kind::Add: return "(" + lhs_->str() + "+" + rhs_->str() + ")";
      case Kind::Sub: return "(" + lhs_->str() + "-" + rhs_->str() + ")";
      case Kind::Mul: return "(" + lhs_->str() + "*" + rhs_->str() + ")";
      case Kind::Div: return "(" + lhs_->str() + " div " + rhs_->str() + ")";
    }
    return {};
  }

private:
  explicit TemplateExpr(Kind k) : kind_(k) {}

  Kind kind_;
  BigInt value_;
  std::string name_;
  std::shared_ptr<const TemplateExpr> lhs_;
  std::shared_ptr<const TemplateExpr> rhs_;
};

namespace detail {

class ExprParser {
public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  TemplateExpr parse() {
    skip_ws();
    if (pos_ >= text_.size()) fail("empty expression");
    TemplateExpr e = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("E_EXPR_SYNTAX", what + " in expression '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_div() const {
    if (text_.substr(pos_, 3) != "div") return false;
    const std::size_t after = pos_ + 3;
    return after >= text_.size() ||
           !(std::isalnum(static_cast<unsigned char>(text_[after])) || text_[after] == '_');
  }

  TemplateExpr parse_sum() {
    TemplateExpr lhs = parse_product();
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        const auto k = text_[pos_] == '+' ? TemplateExpr::Kind::Add : TemplateExpr::Kind::Sub;
        ++pos_;
        lhs = TemplateExpr::binary(k, std::move(lhs), parse_product());
      } else {
        return lhs;
      }
    }
  }

  TemplateExpr parse_product() {
    TemplateExpr lhs = parse_unary();
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        lhs = TemplateExpr::binary(TemplateExpr::Kind::Mul, std::move(lhs), parse_unary());
      } else if (peek_div()) {
        pos_ += 3;
        lhs = TemplateExpr::binary(TemplateExpr::Kind::Div, std::move(lhs), parse_unary());
      } else {
        return lhs;
      }
    }
  }

  TemplateExpr parse_unary() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '-') {
      ++pos_;
      return TemplateExpr::negate(parse_unary());
    }
    return parse_primary();
  }

  TemplateExpr parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      TemplateExpr inner = parse_sum();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return TemplateExpr::literal(parse_decimal(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      if (peek_div()) fail("'div' without a left operand");
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return TemplateExpr::param(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Precedence: unary minus, then * and div, then + and -; left-associative.
inline TemplateExpr parse_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

inline BigInt eval_expr(const TemplateExpr& e, const Binding& binding) {
  using K = TemplateExpr::Kind;
  switch (e.kind()) {
    case K::Literal: return e.value();
    case K::Param: {
      auto it = binding.find(e.name());
      if (it == binding.end()) throw InputError("E_UNBOUND", "parameter '" + e.name() + "' is not bound");
      return BigInt(it->second);
    }
    case K::Neg: return -eval_expr(e.lhs(), binding);
    case K::Add: return eval_expr(e.lhs(), binding) + eval_expr(e.rhs(), binding);
    case K::Sub: return eval_expr(e.lhs(), binding) - eval_expr(e.rhs(), binding);
    case K::Mul: return eval_expr(e.lhs(), binding) * eval_expr(e.rhs(), binding);
    case K::Div: {
      const BigInt a = eval_expr(e.lhs(), binding);
      const BigInt b = eval_expr(e.rhs(), binding);
      if (b == 0) throw InputError("E_DIV_ZERO", "division by zero");
      if (a < 0) throw InputError("E_NEGATIVE_DIVIDEND", "div needs a nonnegative dividend, got " + a.str());
      return b > 0 ? floor_div(a, b) : floor_div(BigInt(-a), BigInt(-b));
    }
  }
  throw InternalError("unknown expression kind");
}

inline std::int64_t eval_int(const TemplateExpr& e, const Binding& binding) {
  return to_int64(eval_expr(e, binding));
}

}  // namespace conespec

#endif  // CONESPEC_EXPR_HPP
