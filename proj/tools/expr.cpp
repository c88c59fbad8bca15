#include "expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>

namespace conforma::cli {

namespace {

constexpr int kMaxDepth = 200;

struct FunctionInfo {
  const char* name;
  int arity;
};

constexpr FunctionInfo kFunctions[] = {
    {"sin", 1},  {"cos", 1},  {"exp", 1},  {"ln", 1},   {"sqrt", 1},
    {"abs", 1},  {"pow", 2},  {"fexp", 3}, {"fsin", 3}, {"fcos", 3},
};

const FunctionInfo* find_function(std::string_view name) {
  for (const auto& f : kFunctions) {
    if (name == f.name) return &f;
  }
  return nullptr;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  std::unique_ptr<Node> parse() {
    auto node = sum();
    skip_space();
    if (pos_ < src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return node;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
  int depth_ = 0;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

  void skip_space() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static std::unique_ptr<Node> make(Node::Kind k, std::size_t off) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    n->offset = off;
    return n;
  }

  static std::unique_ptr<Node> binary(Node::Kind k, std::size_t off,
                                      std::unique_ptr<Node> l,
                                      std::unique_ptr<Node> r) {
    auto n = make(k, off);
    n->args.push_back(std::move(l));
    n->args.push_back(std::move(r));
    return n;
  }

  struct DepthGuard {
    Parser& p;
    explicit DepthGuard(Parser& parser) : p(parser) {
      if (++p.depth_ > kMaxDepth) p.fail("expression nested too deeply");
    }
    ~DepthGuard() { --p.depth_; }
  };

  std::unique_ptr<Node> sum() {
    DepthGuard guard(*this);
    auto lhs = product();
    while (true) {
      skip_space();
      std::size_t off = pos_;
      if (accept('+')) {
        lhs = binary(Node::Kind::add, off, std::move(lhs), product());
      } else if (accept('-')) {
        lhs = binary(Node::Kind::sub, off, std::move(lhs), product());
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Node> product() {
    auto lhs = unary();
    while (true) {
      skip_space();
      std::size_t off = pos_;
      if (accept('*')) {
        lhs = binary(Node::Kind::mul, off, std::move(lhs), unary());
      } else if (accept('/')) {
        lhs = binary(Node::Kind::div, off, std::move(lhs), unary());
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Node> unary() {
    DepthGuard guard(*this);
    skip_space();
    std::size_t off = pos_;
    if (accept('-')) {
      auto n = make(Node::Kind::neg, off);
      n->args.push_back(unary());
      return n;
    }
    return power();
  }

  std::unique_ptr<Node> power() {
    auto base = primary();
    skip_space();
    std::size_t off = pos_;
    if (accept('^')) {
      return binary(Node::Kind::pow, off, std::move(base), unary());
    }
    return base;
  }

  std::unique_ptr<Node> number() {
    std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t mantissa = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) {
      pos_ = start;
      fail("malformed number");
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t mark = pos_;
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (digits() == 0) pos_ = mark;  // a bare "e" is not part of the number
    }
    std::string text(src_.substr(start, pos_ - start));
    auto n = make(Node::Kind::number, start);
    n->value = std::strtod(text.c_str(), nullptr);
    return n;
  }

  std::unique_ptr<Node> primary() {
    skip_space();
    std::size_t off = pos_;
    if (pos_ >= src_.size()) fail("unexpected end of expression");
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (c == '(') {
      ++pos_;
      auto inner = sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(src_.substr(off, pos_ - off));
      skip_space();
      bool call = pos_ < src_.size() && src_[pos_] == '(';
      if (!call) {
        if (name == "t") return make(Node::Kind::var, off);
        if (name == "pi" || name == "e") {
          auto n = make(Node::Kind::number, off);
          n->value = name == "pi" ? std::numbers::pi : std::numbers::e;
          return n;
        }
        if (find_function(name)) {
          fail("function '" + name + "' needs an argument list");
        }
        pos_ = off;
        fail("unknown identifier '" + name + "'");
      }
      const FunctionInfo* info = find_function(name);
      if (!info) {
        pos_ = off;
        fail("unknown function '" + name + "'");
      }
      ++pos_;  // '('
      auto n = make(Node::Kind::call, off);
      n->name = name;
      n->args.push_back(sum());
      while (accept(',')) n->args.push_back(sum());
      if (!accept(')')) fail("expected ')'");
      if (static_cast<int>(n->args.size()) != info->arity) {
        pos_ = off;
        fail("function '" + name + "' takes " + std::to_string(info->arity) +
             " argument(s)");
      }
      return n;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

double checked(double v, const Node& n, const char* what) {
  if (!std::isfinite(v)) throw EvalError(what, n.offset);
  return v;
}

double power_of(double b, double x, const Node& n) {
  if (b == 0.0 && x < 0.0) throw EvalError("zero raised to a negative power", n.offset);
  if (b < 0.0 && x != std::floor(x)) {
    throw EvalError("negative base with a non-integer exponent", n.offset);
  }
  return checked(std::pow(b, x), n, "power overflow");
}

double frac_arg(double p, double alpha, double base, double t, const Node& n) {
  if (!(alpha > 0.0)) throw EvalError("fractional builtin needs alpha > 0", n.offset);
  if (t < base) throw EvalError("fractional builtin evaluated before its base", n.offset);
  return p * std::pow(t - base, alpha) / alpha;
}

double eval(const Node& n, double t) {
  using K = Node::Kind;
  switch (n.kind) {
    case K::number:
      return n.value;
    case K::var:
      return t;
    case K::neg:
      return -eval(*n.args[0], t);
    case K::add:
      return checked(eval(*n.args[0], t) + eval(*n.args[1], t), n, "overflow");
    case K::sub:
      return checked(eval(*n.args[0], t) - eval(*n.args[1], t), n, "overflow");
    case K::mul:
      return checked(eval(*n.args[0], t) * eval(*n.args[1], t), n, "overflow");
    case K::div: {
      double d = eval(*n.args[1], t);
      if (d == 0.0) throw EvalError("division by zero", n.offset);
      return checked(eval(*n.args[0], t) / d, n, "overflow");
    }
    case K::pow:
      return power_of(eval(*n.args[0], t), eval(*n.args[1], t), n);
    case K::call:
      break;
  }
  std::vector<double> v;
  for (const auto& a : n.args) v.push_back(eval(*a, t));
  const std::string& f = n.name;
  if (f == "sin") return std::sin(v[0]);
  if (f == "cos") return std::cos(v[0]);
  if (f == "exp") return checked(std::exp(v[0]), n, "exp overflow");
  if (f == "ln") {
    if (!(v[0] > 0.0)) throw EvalError("ln of a non-positive number", n.offset);
    return std::log(v[0]);
  }
  if (f == "sqrt") {
    if (v[0] < 0.0) throw EvalError("sqrt of a negative number", n.offset);
    return std::sqrt(v[0]);
  }
  if (f == "abs") return std::abs(v[0]);
  if (f == "pow") return power_of(v[0], v[1], n);
  double x = frac_arg(v[0], v[1], v[2], t, n);
  if (f == "fexp") return checked(std::exp(x), n, "fexp overflow");
  if (f == "fsin") return std::sin(x);
  return std::cos(x);  // fcos
}

void render(const Node& n, std::string& out) {
  using K = Node::Kind;
  auto two = [&](const char* name) {
    out += name;
    out += '(';
    render(*n.args[0], out);
    out += ',';
    render(*n.args[1], out);
    out += ')';
  };
  switch (n.kind) {
    case K::number: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", n.value);
      out += buf;
      return;
    }
    case K::var:
      out += 't';
      return;
    case K::neg:
      out += "Neg(";
      render(*n.args[0], out);
      out += ')';
      return;
    case K::add:
      return two("Add");
    case K::sub:
      return two("Sub");
    case K::mul:
      return two("Mul");
    case K::div:
      return two("Div");
    case K::pow:
      return two("Pow");
    case K::call:
      out += n.name;
      out += '(';
      for (std::size_t i = 0; i < n.args.size(); ++i) {
        if (i) out += ',';
        render(*n.args[i], out);
      }
      out += ')';
      return;
  }
}

}  // namespace

std::string Expr::to_string() const {
  std::string out;
  render(*root_, out);
  return out;
}

Expr parse_expr(std::string_view src) {
  Parser p(src);
  return Expr(p.parse(), std::string(src));
}

double eval_expr(const Expr& e, double t) { return eval(e.root(), t); }

RealFn expr_function(std::shared_ptr<const Expr> e, int smoothness) {
  return RealFn([e](double t) { return eval_expr(*e, t); }, smoothness);
}

}  // namespace conforma::cli
