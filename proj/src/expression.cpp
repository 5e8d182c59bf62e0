#include "boolnet/expression.hpp"

#include <cassert>
#include <stdexcept>
#include <vector>

#include "boolnet/errors.hpp"

namespace boolnet {

struct Expression::Node {
  Kind kind;
  int var = 0;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
};

Expression Expression::variable(int index)
{
  if (index < 1)
    throw std::invalid_argument("variable index must be >= 1");
  return Expression(std::make_shared<Node>(Node{Kind::variable, index, nullptr, nullptr}));
}

Expression Expression::negation(Expression operand)
{
  return Expression(
      std::make_shared<Node>(Node{Kind::negation, 0, std::move(operand.node_), nullptr}));
}

Expression Expression::conjunction(Expression lhs, Expression rhs)
{
  return Expression(std::make_shared<Node>(
      Node{Kind::conjunction, 0, std::move(lhs.node_), std::move(rhs.node_)}));
}

Expression Expression::disjunction(Expression lhs, Expression rhs)
{
  return Expression(std::make_shared<Node>(
      Node{Kind::disjunction, 0, std::move(lhs.node_), std::move(rhs.node_)}));
}

Expression::Kind Expression::kind() const
{
  return node_->kind;
}

int Expression::variable_index() const
{
  assert(node_->kind == Kind::variable);
  return node_->var;
}

Expression Expression::operand() const
{
  return lhs();
}

Expression Expression::lhs() const
{
  return Expression(node_->a);
}

Expression Expression::rhs() const
{
  return Expression(node_->b);
}

int Expression::max_variable() const
{
  struct Walk {
    static int go(const Node* n)
    {
      switch (n->kind) {
      case Kind::variable: return n->var;
      case Kind::negation: return go(n->a.get());
      default: return std::max(go(n->a.get()), go(n->b.get()));
      }
    }
  };
  return Walk::go(node_.get());
}

bool Expression::evaluate(std::span<const std::uint8_t> assignment) const
{
  struct Walk {
    static bool go(const Node* n, std::span<const std::uint8_t> a)
    {
      switch (n->kind) {
      case Kind::variable: return a[n->var - 1] != 0;
      case Kind::negation: return !go(n->a.get(), a);
      case Kind::conjunction: return go(n->a.get(), a) && go(n->b.get(), a);
      default: return go(n->a.get(), a) || go(n->b.get(), a);
      }
    }
  };
  if (max_variable() > int(assignment.size()))
    throw std::invalid_argument("assignment shorter than referenced variables");
  return Walk::go(node_.get(), assignment);
}

namespace {

int precedence(Expression::Kind kind)
{
  switch (kind) {
  case Expression::Kind::disjunction: return 1;
  case Expression::Kind::conjunction: return 2;
  case Expression::Kind::negation: return 3;
  default: return 4;
  }
}

} // namespace

std::string Expression::to_string() const
{
  struct Print {
    static void go(const Node* n, std::string& out)
    {
      switch (n->kind) {
      case Kind::variable:
        out += "x" + std::to_string(n->var);
        break;
      case Kind::negation:
        out += "!";
        wrap(n->a.get(), precedence(Kind::negation), out);
        break;
      case Kind::conjunction:
        wrap(n->a.get(), precedence(Kind::conjunction), out);
        out += " & ";
        wrap(n->b.get(), precedence(Kind::conjunction), out);
        break;
      case Kind::disjunction:
        wrap(n->a.get(), precedence(Kind::disjunction), out);
        out += " | ";
        wrap(n->b.get(), precedence(Kind::disjunction), out);
        break;
      }
    }
    static void wrap(const Node* n, int outer, std::string& out)
    {
      if (precedence(n->kind) < outer) {
        out += "(";
        go(n, out);
        out += ")";
      } else {
        go(n, out);
      }
    }
  };
  std::string out;
  Print::go(node_.get(), out);
  return out;
}

namespace {

enum class Tok { variable, bang, amp, pipe, lparen, rparen, end };

struct Token {
  Tok kind;
  int var = 0;
  std::size_t column = 0; // 1-based byte offset
};

class Lexer {
public:
  Lexer(std::string_view text, int arity) : text_(text), arity_(arity) {}

  std::vector<Token> run()
  {
    std::vector<Token> tokens;
    while (pos_ < text_.size()) {
      const std::size_t col = pos_ + 1;
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        ++pos_;
      } else if (c == '!') {
        tokens.push_back({Tok::bang, 0, col});
        ++pos_;
      } else if (c == '&') {
        tokens.push_back({Tok::amp, 0, col});
        ++pos_;
      } else if (c == '|') {
        tokens.push_back({Tok::pipe, 0, col});
        ++pos_;
      } else if (c == '(') {
        tokens.push_back({Tok::lparen, 0, col});
        ++pos_;
      } else if (c == ')') {
        tokens.push_back({Tok::rparen, 0, col});
        ++pos_;
      } else if (match("¬")) {
        tokens.push_back({Tok::bang, 0, col});
      } else if (match("∧")) {
        tokens.push_back({Tok::amp, 0, col});
      } else if (match("∨")) {
        tokens.push_back({Tok::pipe, 0, col});
      } else if (c == 'x') {
        tokens.push_back(variable(col));
      } else {
        fail(col, std::string("unexpected character '") + c + "'");
      }
    }
    tokens.push_back({Tok::end, 0, text_.size() + 1});
    return tokens;
  }

private:
  bool match(std::string_view utf8)
  {
    if (text_.substr(pos_, utf8.size()) != utf8)
      return false;
    pos_ += utf8.size();
    return true;
  }

  Token variable(std::size_t col)
  {
    ++pos_; // past 'x'
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9')
      ++pos_;
    if (pos_ == start)
      fail(col, "expected variable index after 'x'");
    int index = 0;
    for (std::size_t i = start; i < pos_; ++i) {
      index = index * 10 + (text_[i] - '0');
      if (index > max_arity)
        break;
    }
    if (index < 1 || index > arity_)
      fail(col, "variable x" + std::string(text_.substr(start, pos_ - start)) +
                    " exceeds arity " + std::to_string(arity_));
    return {Tok::variable, index, col};
  }

  [[noreturn]] void fail(std::size_t col, const std::string& what)
  {
    throw std::invalid_argument("column " + std::to_string(col) + ": " + what);
  }

  std::string_view text_;
  int arity_;
  std::size_t pos_ = 0;
};

// Recursive descent with one token of lookahead; precedence encoded in the
// grammar: or := and ("|" and)*, and := unary ("&" unary)*.
class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Expression run()
  {
    Expression e = parse_or();
    expect(Tok::end, "end of input");
    return e;
  }

private:
  Expression parse_or()
  {
    Expression e = parse_and();
    while (peek().kind == Tok::pipe) {
      ++pos_;
      e = Expression::disjunction(std::move(e), parse_and());
    }
    return e;
  }

  Expression parse_and()
  {
    Expression e = parse_unary();
    while (peek().kind == Tok::amp) {
      ++pos_;
      e = Expression::conjunction(std::move(e), parse_unary());
    }
    return e;
  }

  Expression parse_unary()
  {
    const Token& t = peek();
    switch (t.kind) {
    case Tok::bang:
      ++pos_;
      return Expression::negation(parse_unary());
    case Tok::variable:
      ++pos_;
      return Expression::variable(t.var);
    case Tok::lparen: {
      ++pos_;
      Expression e = parse_or();
      expect(Tok::rparen, "')'");
      return e;
    }
    default:
      fail(t, "expected a variable, '!', or '('");
    }
  }

  const Token& peek() const { return tokens_[pos_]; }

  void expect(Tok kind, const std::string& what)
  {
    if (peek().kind != kind)
      fail(peek(), "expected " + what);
    ++pos_;
  }

  [[noreturn]] void fail(const Token& t, const std::string& what)
  {
    throw std::invalid_argument("column " + std::to_string(t.column) + ": " + what);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

} // namespace

Expression parse(std::string_view text, int arity)
{
  if (arity < 1)
    throw std::invalid_argument("arity must be >= 1");
  if (arity > max_arity)
    throw cap_error("arity " + std::to_string(arity) + " exceeds the cap of " +
                    std::to_string(max_arity));
  return Parser(Lexer(text, arity).run()).run();
}

BooleanFunction compile(const Expression& expr, int arity)
{
  if (expr.max_variable() > arity)
    throw std::invalid_argument("expression references variables beyond the arity");
  switch (expr.kind()) {
  case Expression::Kind::variable:
    return BooleanFunction::projection(arity, expr.variable_index());
  case Expression::Kind::negation:
    return ~compile(expr.operand(), arity);
  case Expression::Kind::conjunction:
    return compile(expr.lhs(), arity) & compile(expr.rhs(), arity);
  default:
    return compile(expr.lhs(), arity) | compile(expr.rhs(), arity);
  }
}

} // namespace boolnet
