#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "conforma/real_fn.hpp"

namespace conforma::cli {

/// Malformed expression text. offset is a byte offset into the source.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A well-formed expression produced a value outside its domain
/// (ln of a non-positive number, 0 to a negative power, ...).
class EvalError : public std::runtime_error {
 public:
  EvalError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

struct Node {
  enum class Kind { number, var, neg, add, sub, mul, div, pow, call };
  Kind kind;
  std::size_t offset;  // start of the token that introduced the node
  double value = 0.0;  // number
  std::string name;    // call
  std::vector<std::unique_ptr<Node>> args;
};

/// Parsed expression in the single variable t.
class Expr {
 public:
  explicit Expr(std::unique_ptr<Node> root, std::string src)
      : root_(std::move(root)), src_(std::move(src)) {}
  const Node& root() const { return *root_; }
  const std::string& source() const { return src_; }
  /// Fully parenthesized prefix form, e.g. Add(Pow(t,2),Mul(3,t)).
  std::string to_string() const;

 private:
  std::unique_ptr<Node> root_;
  std::string src_;
};

/// Grammar, loosest first:
///   sum     := product (('+' | '-') product)*
///   product := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' unary)?          right associative
///   primary := number | 't' | 'pi' | 'e' | name '(' sum (',' sum)* ')'
///            | '(' sum ')'
/// Functions: sin cos exp ln sqrt abs pow, and fexp/fsin/fcos(p, alpha, base)
/// for e^{p (t-base)^alpha/alpha} and sin/cos(p (t-base)^alpha/alpha).
Expr parse_expr(std::string_view src);

double eval_expr(const Expr& e, double t);

/// The expression as a RealFn with the given declared smoothness.
RealFn expr_function(std::shared_ptr<const Expr> e, int smoothness = 2);

}  // namespace conforma::cli
