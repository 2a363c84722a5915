#include "milnorinf/parser.hpp"

#include <algorithm>
#include <cctype>

#include "milnorinf/error.hpp"

namespace milnorinf {

struct RationalExpression::Node {
  enum class Kind { Number, Var, Add, Sub, Mul, Div, Neg };
  Kind kind = Kind::Number;
  Rational number;
  std::string name;
  int exponent = 1;
  std::size_t line = 1, column = 1;
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using Node = RationalExpression::Node;
using NodePtr = std::shared_ptr<const Node>;

struct Token {
  enum class Kind { Int, Ident, Op, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t line = 1, column = 1;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Kind::Int;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) t.text += s[i++];
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Token::Kind::Ident;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) t.text += s[i++];
    } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      t.kind = Token::Kind::Op;
      t.text = c;
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    col += t.text.size();
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, bool witness) : tokens_(tokenize(text)), witness_(witness) {}

  NodePtr parse() {
    NodePtr e = expr();
    if (peek().kind != Token::Kind::End) error("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool is_op(const char* op) const { return peek().kind == Token::Kind::Op && peek().text == op; }
  [[noreturn]] void error(const std::string& what) const {
    const Token& t = peek();
    std::string msg = t.kind == Token::Kind::End ? what + " (end of input)" : what;
    throw ParseError("syntax error: " + msg, t.line, t.column);
  }

  NodePtr make(Node::Kind kind, NodePtr lhs, NodePtr rhs, const Token& at) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    n->line = at.line;
    n->column = at.column;
    return n;
  }

  NodePtr expr() {
    NodePtr acc;
    if (is_op("+") || is_op("-")) {
      Token sign = tokens_[pos_++];
      NodePtr t = term();
      acc = sign.text == "-" ? make(Node::Kind::Neg, t, nullptr, sign) : t;
    } else {
      acc = term();
    }
    while (is_op("+") || is_op("-")) {
      Token op = tokens_[pos_++];
      acc = make(op.text == "+" ? Node::Kind::Add : Node::Kind::Sub, acc, term(), op);
    }
    return acc;
  }

  NodePtr term() {
    NodePtr acc = factor();
    while (true) {
      if (is_op("*")) {
        Token op = tokens_[pos_++];
        acc = make(Node::Kind::Mul, acc, factor(), op);
      } else if (witness_ && is_op("/")) {
        Token op = tokens_[pos_++];
        acc = make(Node::Kind::Div, acc, factor(), op);
      } else if (peek().kind == Token::Kind::Ident || peek().kind == Token::Kind::Int || is_op("(")) {
        error("missing '*' (implicit multiplication is not allowed)");
      } else {
        return acc;
      }
    }
  }

  NodePtr factor() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Int) {
      ++pos_;
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Number;
      n->line = t.line;
      n->column = t.column;
      Integer num{t.text};
      Integer den = 1;
      if (!witness_ && is_op("/")) {
        ++pos_;
        if (peek().kind != Token::Kind::Int) error("expected a positive integer denominator");
        den = Integer{peek().text};
        if (den == 0) error("zero denominator");
        ++pos_;
      }
      n->number = Rational(num, den);
      n->number.canonicalize();
      return n;
    }
    if (t.kind == Token::Kind::Ident) {
      ++pos_;
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Var;
      n->name = t.text;
      n->line = t.line;
      n->column = t.column;
      if (is_op("^")) {
        ++pos_;
        if (peek().kind != Token::Kind::Int) error("expected a nonnegative integer exponent");
        Integer e{peek().text};
        if (!e.fits_sint_p() || e > 100000) error("exponent too large");
        n->exponent = static_cast<int>(e.get_si());
        ++pos_;
      }
      return n;
    }
    if (is_op("(")) {
      ++pos_;
      NodePtr e = expr();
      if (!is_op(")")) error("expected ')'");
      ++pos_;
      return e;
    }
    error(t.kind == Token::Kind::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  bool witness_;
};

void collect_names(const NodePtr& n, std::vector<std::string>& names) {
  if (!n) return;
  if (n->kind == Node::Kind::Var && std::find(names.begin(), names.end(), n->name) == names.end())
    names.push_back(n->name);
  collect_names(n->lhs, names);
  collect_names(n->rhs, names);
}

Polynomial to_polynomial(const NodePtr& n, const std::vector<std::string>& names) {
  const std::size_t nv = names.size();
  switch (n->kind) {
    case Node::Kind::Number: return Polynomial::constant(nv, n->number);
    case Node::Kind::Var: {
      auto it = std::find(names.begin(), names.end(), n->name);
      if (it == names.end()) throw ParseError("unknown variable '" + n->name + "'", n->line, n->column);
      auto idx = static_cast<std::size_t>(it - names.begin());
      return Polynomial::monomial(Monomial::variable(nv, idx, n->exponent));
    }
    case Node::Kind::Add: return to_polynomial(n->lhs, names) + to_polynomial(n->rhs, names);
    case Node::Kind::Sub: return to_polynomial(n->lhs, names) - to_polynomial(n->rhs, names);
    case Node::Kind::Mul: return to_polynomial(n->lhs, names) * to_polynomial(n->rhs, names);
    case Node::Kind::Neg: return -to_polynomial(n->lhs, names);
    case Node::Kind::Div: break;
  }
  throw ParseError("division is not allowed in a polynomial", n->line, n->column);
}

Rational evaluate_node(const NodePtr& n, const std::map<std::string, Rational>& b) {
  switch (n->kind) {
    case Node::Kind::Number: return n->number;
    case Node::Kind::Var: {
      auto it = b.find(n->name);
      if (it == b.end()) throw ParseError("unbound name '" + n->name + "'", n->line, n->column);
      Rational r = 1;
      for (int i = 0; i < n->exponent; ++i) r *= it->second;
      return r;
    }
    case Node::Kind::Add: return evaluate_node(n->lhs, b) + evaluate_node(n->rhs, b);
    case Node::Kind::Sub: return evaluate_node(n->lhs, b) - evaluate_node(n->rhs, b);
    case Node::Kind::Mul: return evaluate_node(n->lhs, b) * evaluate_node(n->rhs, b);
    case Node::Kind::Neg: return -evaluate_node(n->lhs, b);
    case Node::Kind::Div: {
      Rational d = evaluate_node(n->rhs, b);
      if (d == 0) throw Error(ErrorKind::DegenerateInput, "division by zero in expression");
      return evaluate_node(n->lhs, b) / d;
    }
  }
  throw Error(ErrorKind::Internal, "bad expression node");
}

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

ParsedPolynomial parse_polynomial(std::string_view text, const std::optional<std::vector<std::string>>& vars) {
  NodePtr root = Parser(text, false).parse();
  std::vector<std::string> names;
  if (vars) {
    names = *vars;
  } else {
    collect_names(root, names);
  }
  if (names.empty()) throw ParseError("polynomial has no variables", 1, 1);
  if (names.size() > kMaxVars) throw ParseError("too many variables", 1, 1);
  return {to_polynomial(root, names), names};
}

RationalExpression RationalExpression::parse(std::string_view text) {
  RationalExpression e;
  e.root_ = Parser(text, true).parse();
  collect_names(e.root_, e.variables_);
  return e;
}

Rational RationalExpression::evaluate(const std::map<std::string, Rational>& bindings) const {
  return evaluate_node(root_, bindings);
}

std::vector<std::string> parse_name_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    std::string piece(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    piece.erase(0, piece.find_first_not_of(" \t"));
    piece.erase(piece.find_last_not_of(" \t") + 1);
    if (!valid_name(piece)) throw ParseError("invalid variable name '" + piece + "'", 1, start + 1);
    if (std::find(out.begin(), out.end(), piece) != out.end())
      throw ParseError("duplicate variable name '" + piece + "'", 1, start + 1);
    out.push_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace milnorinf
