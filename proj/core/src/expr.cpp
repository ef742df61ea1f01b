#include "ltv/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <utility>
#include <vector>

namespace ltv {

enum class NodeKind { Number, TimeVar, Pi, Negate, Binary, Call };
enum class FuncKind { Sin, Cos, Exp };

struct Expr::Node {
  NodeKind kind;
  double value = 0.0;            // Number
  char op = 0;                   // Binary: + - * / ^
  FuncKind func = FuncKind::Sin; // Call
  NodePtr lhs, rhs;              // Binary: both; Negate/Call: lhs only
};

namespace {

using Node = Expr::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_number(double v) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Number;
  n->value = v;
  return n;
}

NodePtr make_leaf(NodeKind kind) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  return n;
}

NodePtr make_negate(NodePtr child) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Negate;
  n->lhs = std::move(child);
  return n;
}

NodePtr make_binary(char op, NodePtr lhs, NodePtr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Binary;
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

NodePtr make_call(FuncKind f, NodePtr arg) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Call;
  n->func = f;
  n->lhs = std::move(arg);
  return n;
}

// --- lexer ---------------------------------------------------------------

enum class TokKind { Number, Ident, Op, LParen, RParen, End };

struct Token {
  TokKind kind = TokKind::End;
  std::size_t pos = 0;
  double number = 0.0;
  std::string ident;
  char op = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    Token t;
    t.pos = pos_;
    if (pos_ >= text_.size()) {
      t.kind = TokKind::End;
      return t;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return lex_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return lex_ident();
    switch (c) {
      case '+': case '-': case '*': case '/': case '^':
        t.kind = TokKind::Op;
        t.op = c;
        ++pos_;
        return t;
      case '(':
        t.kind = TokKind::LParen;
        ++pos_;
        return t;
      case ')':
        t.kind = TokKind::RParen;
        ++pos_;
        return t;
      default:
        throw SyntaxError("unexpected character '" + std::string(1, c) + "' at position " +
                              std::to_string(pos_),
                          pos_, "number, identifier, operator, or parenthesis");
    }
  }

 private:
  Token lex_number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t mark = pos_++;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      } else {
        pos_ = mark;  // not an exponent, e.g. "2exp(k)" -> number ends before 'e'
      }
    }
    Token t;
    t.kind = TokKind::Number;
    t.pos = start;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, last, t.number);
    if (ec != std::errc() || ptr != last) {
      throw SyntaxError("malformed number at position " + std::to_string(start), start,
                        "decimal literal");
    }
    return t;
  }

  Token lex_ident() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    Token t;
    t.kind = TokKind::Ident;
    t.pos = start;
    t.ident = std::string(text_.substr(start, pos_ - start));
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// --- parser ---------------------------------------------------------------

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  NodePtr parse_all() {
    NodePtr e = parse_expr();
    if (tok_.kind != TokKind::End) {
      throw SyntaxError("unexpected trailing input at position " + std::to_string(tok_.pos),
                        tok_.pos, "end of input or operator");
    }
    return e;
  }

 private:
  void advance() { tok_ = lexer_.next(); }

  bool at_op(char c) const { return tok_.kind == TokKind::Op && tok_.op == c; }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    while (at_op('+') || at_op('-')) {
      const char op = tok_.op;
      advance();
      lhs = make_binary(op, std::move(lhs), parse_term());
    }
    return lhs;
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    while (at_op('*') || at_op('/')) {
      const char op = tok_.op;
      advance();
      lhs = make_binary(op, std::move(lhs), parse_factor());
    }
    return lhs;
  }

  NodePtr parse_factor() {
    if (at_op('-')) {
      advance();
      return make_negate(parse_factor());
    }
    NodePtr base = parse_atom();
    if (at_op('^')) {
      advance();
      return make_binary('^', std::move(base), parse_factor());  // right-associative
    }
    return base;
  }

  NodePtr parse_atom() {
    switch (tok_.kind) {
      case TokKind::Number: {
        NodePtr n = make_number(tok_.number);
        advance();
        return n;
      }
      case TokKind::Ident: {
        const std::string name = tok_.ident;
        const std::size_t pos = tok_.pos;
        advance();
        if (name == "k") return make_leaf(NodeKind::TimeVar);
        if (name == "pi") return make_leaf(NodeKind::Pi);
        FuncKind f;
        if (name == "sin") f = FuncKind::Sin;
        else if (name == "cos") f = FuncKind::Cos;
        else if (name == "exp") f = FuncKind::Exp;
        else
          throw UnknownIdentifier("unknown identifier '" + name + "' at position " +
                                      std::to_string(pos),
                                  name, pos);
        expect(TokKind::LParen, "'(' after function name");
        NodePtr arg = parse_expr();
        expect(TokKind::RParen, "')'");
        return make_call(f, std::move(arg));
      }
      case TokKind::LParen: {
        advance();
        NodePtr e = parse_expr();
        expect(TokKind::RParen, "')'");
        return e;
      }
      default:
        throw SyntaxError("unexpected token at position " + std::to_string(tok_.pos), tok_.pos,
                          "number, 'k', 'pi', function, or '('");
    }
  }

  void expect(TokKind kind, const std::string& what) {
    if (tok_.kind != kind) {
      throw SyntaxError("expected " + what + " at position " + std::to_string(tok_.pos), tok_.pos,
                        what);
    }
    advance();
  }

  Lexer lexer_;
  Token tok_;
};

// --- evaluation -----------------------------------------------------------

constexpr double kPi = 3.14159265358979323846;

double integer_power(double base, long long exponent) {
  double result = 1.0;
  double factor = base;
  for (long long e = exponent; e > 0; e >>= 1) {
    if (e & 1) result *= factor;
    if (e > 1) factor *= factor;
  }
  return result;
}

double eval_power(double a, double b) {
  if (b == std::trunc(b) && b >= 0.0 && b <= 9.007199254740992e15) {
    return integer_power(a, static_cast<long long>(b));
  }
  if (a > 0.0) return std::pow(a, b);
  if (a == 0.0 && b > 0.0) return 0.0;
  throw DomainError("power with non-positive base and non-integer exponent");
}

double eval_node(const Node& n, long k) {
  switch (n.kind) {
    case NodeKind::Number:
      return n.value;
    case NodeKind::TimeVar:
      return static_cast<double>(k);
    case NodeKind::Pi:
      return kPi;
    case NodeKind::Negate:
      return -eval_node(*n.lhs, k);
    case NodeKind::Binary: {
      const double a = eval_node(*n.lhs, k);
      const double b = eval_node(*n.rhs, k);
      switch (n.op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        case '/':
          if (b == 0.0) throw DomainError("division by zero");
          return a / b;
        case '^': return eval_power(a, b);
      }
      throw Error("corrupt expression node");
    }
    case NodeKind::Call: {
      const double a = eval_node(*n.lhs, k);
      switch (n.func) {
        case FuncKind::Sin: return std::sin(a);
        case FuncKind::Cos: return std::cos(a);
        case FuncKind::Exp: return std::exp(a);
      }
      throw Error("corrupt expression node");
    }
  }
  throw Error("corrupt expression node");
}

// --- printing -------------------------------------------------------------

int precedence(const Node& n) {
  switch (n.kind) {
    case NodeKind::Binary:
      if (n.op == '+' || n.op == '-') return 1;
      if (n.op == '*' || n.op == '/') return 2;
      return 4;  // '^'
    case NodeKind::Negate:
      return 3;
    default:
      return 5;  // atoms
  }
}

std::string format_number(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

void print_node(const Node& n, std::string& out);

void print_child(const Node& child, int min_prec, std::string& out) {
  if (precedence(child) < min_prec) {
    out += '(';
    print_node(child, out);
    out += ')';
  } else {
    print_node(child, out);
  }
}

void print_node(const Node& n, std::string& out) {
  switch (n.kind) {
    case NodeKind::Number:
      out += format_number(n.value);
      return;
    case NodeKind::TimeVar:
      out += 'k';
      return;
    case NodeKind::Pi:
      out += "pi";
      return;
    case NodeKind::Negate:
      out += '-';
      print_child(*n.lhs, precedence(n), out);
      return;
    case NodeKind::Binary: {
      const int prec = precedence(n);
      if (n.op == '^') {
        // right-associative: parenthesize a compound base, keep chains on the right
        print_child(*n.lhs, prec + 1, out);
        out += " ^ ";
        print_child(*n.rhs, prec, out);
      } else {
        // left-associative: equal precedence on the right needs parentheses
        print_child(*n.lhs, prec, out);
        out += ' ';
        out += n.op;
        out += ' ';
        print_child(*n.rhs, prec + 1, out);
      }
      return;
    }
    case NodeKind::Call:
      switch (n.func) {
        case FuncKind::Sin: out += "sin("; break;
        case FuncKind::Cos: out += "cos("; break;
        case FuncKind::Exp: out += "exp("; break;
      }
      print_node(*n.lhs, out);
      out += ')';
      return;
  }
}

bool same_node(const Node& a, const Node& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case NodeKind::Number:
      return a.value == b.value;
    case NodeKind::TimeVar:
    case NodeKind::Pi:
      return true;
    case NodeKind::Negate:
      return same_node(*a.lhs, *b.lhs);
    case NodeKind::Binary:
      return a.op == b.op && same_node(*a.lhs, *b.lhs) && same_node(*a.rhs, *b.rhs);
    case NodeKind::Call:
      return a.func == b.func && same_node(*a.lhs, *b.lhs);
  }
  return false;
}

}  // namespace

Expr Expr::parse(std::string_view text) {
  if (text.empty()) throw SyntaxError("empty expression", 0, "expression");
  return Expr(Parser(text).parse_all());
}

Expr Expr::number(double value) {
  if (std::signbit(value)) return Expr(make_negate(make_number(-value)));
  return Expr(make_number(value));
}

Expr Expr::time_variable() { return Expr(make_leaf(NodeKind::TimeVar)); }

Expr Expr::pi() { return Expr(make_leaf(NodeKind::Pi)); }

double Expr::eval(long k) const {
  const double v = eval_node(*node_, k);
  if (!std::isfinite(v)) throw NonFiniteResult("expression evaluated to a non-finite value");
  return v;
}

std::string Expr::str() const {
  std::string out;
  print_node(*node_, out);
  return out;
}

bool Expr::same_tree(const Expr& other) const { return same_node(*node_, *other.node_); }

Expr operator+(const Expr& a, const Expr& b) { return Expr(make_binary('+', a.node_, b.node_)); }
Expr operator-(const Expr& a, const Expr& b) { return Expr(make_binary('-', a.node_, b.node_)); }
Expr operator*(const Expr& a, const Expr& b) { return Expr(make_binary('*', a.node_, b.node_)); }
Expr operator/(const Expr& a, const Expr& b) { return Expr(make_binary('/', a.node_, b.node_)); }
Expr pow(const Expr& base, const Expr& exponent) {
  return Expr(make_binary('^', base.node_, exponent.node_));
}
Expr operator-(const Expr& a) { return Expr(make_negate(a.node_)); }

}  // namespace ltv
