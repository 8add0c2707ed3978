#include "growcap/literal.hpp"

#include <cctype>
#include <memory>
#include <string>
#include <vector>

namespace growcap {

namespace {

enum class TokenKind { kNumber, kIdent, kPlus, kMinus, kStar, kSlash, kLParen, kRParen, kEnd };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      bool dot = false;
      while (i < s.size() &&
             (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) {
        if (s[i] == '.') {
          if (dot) throw ParseError(i, "malformed number");
          dot = true;
        }
        ++i;
      }
      const std::string text(s.substr(start, i - start));
      if (text == ".") throw ParseError(start, "malformed number");
      out.push_back({TokenKind::kNumber, text, start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({TokenKind::kIdent, std::string(s.substr(start, i - start)), start});
      continue;
    }
    TokenKind kind;
    switch (ch) {
      case '+': kind = TokenKind::kPlus; break;
      case '-': kind = TokenKind::kMinus; break;
      case '*': kind = TokenKind::kStar; break;
      case '/': kind = TokenKind::kSlash; break;
      case '(': kind = TokenKind::kLParen; break;
      case ')': kind = TokenKind::kRParen; break;
      default:
        throw ParseError(start, std::string("unexpected character '") + ch + "'");
    }
    out.push_back({kind, std::string(1, ch), start});
    ++i;
  }
  out.push_back({TokenKind::kEnd, "", s.size()});
  return out;
}

struct Node {
  enum class Kind { kNumber, kImag, kPhi, kPsi, kSqrt, kNeg, kAdd, kSub, kMul, kDiv } kind;
  BigRational number;
  std::size_t pos = 0;
  std::unique_ptr<Node> lhs;
  std::unique_ptr<Node> rhs;
};
using NodePtr = std::unique_ptr<Node>;

NodePtr make_node(Node::Kind kind, std::size_t pos, NodePtr lhs = nullptr,
                  NodePtr rhs = nullptr) {
  auto n = std::make_unique<Node>();
  n->kind = kind;
  n->pos = pos;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

// BigInt reads a leading 0 as an octal prefix.
BigInt decimal_digits(std::string digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string::npos) return BigInt(0);
  return BigInt(digits.substr(first));
}

BigRational decimal_to_rational(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) return BigRational(decimal_digits(text));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  BigInt scale = 1;
  for (std::size_t k = dot + 1; k < text.size(); ++k) scale *= 10;
  return BigRational(decimal_digits(digits), scale);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  NodePtr parse() {
    if (peek().kind == TokenKind::kEnd) throw ParseError(0, "empty literal");
    NodePtr n = expr();
    if (peek().kind != TokenKind::kEnd)
      throw ParseError(peek().pos, "unexpected '" + peek().text + "'");
    return n;
  }

 private:
  const Token& peek() const { return tokens_[at_]; }
  const Token& next() { return tokens_[at_++]; }

  NodePtr expr() {
    NodePtr lhs = term();
    while (peek().kind == TokenKind::kPlus || peek().kind == TokenKind::kMinus) {
      const Token& op = next();
      NodePtr rhs = term();
      lhs = make_node(op.kind == TokenKind::kPlus ? Node::Kind::kAdd : Node::Kind::kSub,
                      op.pos, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  static bool starts_primary(TokenKind k) {
    return k == TokenKind::kNumber || k == TokenKind::kIdent || k == TokenKind::kLParen;
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      const TokenKind k = peek().kind;
      if (k == TokenKind::kStar || k == TokenKind::kSlash) {
        const Token& op = next();
        NodePtr rhs = unary();
        lhs = make_node(k == TokenKind::kStar ? Node::Kind::kMul : Node::Kind::kDiv,
                        op.pos, std::move(lhs), std::move(rhs));
      } else if (starts_primary(k)) {
        const std::size_t pos = peek().pos;
        NodePtr rhs = primary();
        lhs = make_node(Node::Kind::kMul, pos, std::move(lhs), std::move(rhs));
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (peek().kind == TokenKind::kMinus) {
      const std::size_t pos = next().pos;
      return make_node(Node::Kind::kNeg, pos, unary());
    }
    if (peek().kind == TokenKind::kPlus) {
      next();
      return unary();
    }
    return primary();
  }

  NodePtr primary() {
    const Token& tok = next();
    switch (tok.kind) {
      case TokenKind::kNumber: {
        auto n = make_node(Node::Kind::kNumber, tok.pos);
        n->number = decimal_to_rational(tok.text);
        return n;
      }
      case TokenKind::kIdent:
        if (tok.text == "i") return make_node(Node::Kind::kImag, tok.pos);
        if (tok.text == "phi") return make_node(Node::Kind::kPhi, tok.pos);
        if (tok.text == "psi") return make_node(Node::Kind::kPsi, tok.pos);
        if (tok.text == "sqrt") {
          expect(TokenKind::kLParen, "'(' after sqrt");
          NodePtr arg = expr();
          expect(TokenKind::kRParen, "')'");
          return make_node(Node::Kind::kSqrt, tok.pos, std::move(arg));
        }
        throw ParseError(tok.pos, "unknown name '" + tok.text + "'");
      case TokenKind::kLParen: {
        NodePtr inner = expr();
        expect(TokenKind::kRParen, "')'");
        return inner;
      }
      case TokenKind::kEnd:
        throw ParseError(tok.pos, "unexpected end of input");
      default:
        throw ParseError(tok.pos, "unexpected '" + tok.text + "'");
    }
  }

  void expect(TokenKind kind, const char* what) {
    if (peek().kind != kind) throw ParseError(peek().pos, std::string("expected ") + what);
    next();
  }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
};

template <class S>
struct Ops;

template <>
struct Ops<Surd> {
  static Surd number(const BigRational& r) { return Surd(r); }
  static Surd phi() { return Surd::make(1, 1, 2, 5); }
  static Surd psi() { return Surd::make(1, 1, 1, 2); }
  static Surd sqrt(const Surd& v, std::size_t pos) {
    if (!v.is_rational()) throw ParseError(pos, "sqrt argument must be rational");
    if (v.sign() < 0) throw ParseError(pos, "sqrt of a negative number");
    return Surd::sqrt_of(v.to_rational());
  }
  static bool is_zero(const Surd& v) { return v.is_zero(); }
};

template <>
struct Ops<Real> {
  static Real number(const BigRational& r) { return to_real(r); }
  static Real phi() { return (1 + boost::multiprecision::sqrt(Real(5))) / 2; }
  static Real psi() { return 1 + boost::multiprecision::sqrt(Real(2)); }
  static Real sqrt(const Real& v, std::size_t pos) {
    if (v < 0) throw ParseError(pos, "sqrt of a negative number");
    return boost::multiprecision::sqrt(v);
  }
  static bool is_zero(const Real& v) { return v == 0; }
};

template <class S>
Gaussian<S> evaluate(const Node& n) {
  using O = Ops<S>;
  switch (n.kind) {
    case Node::Kind::kNumber: return {O::number(n.number), S(0)};
    case Node::Kind::kImag: return {S(0), S(1)};
    case Node::Kind::kPhi: return {O::phi(), S(0)};
    case Node::Kind::kPsi: return {O::psi(), S(0)};
    case Node::Kind::kSqrt: {
      auto v = evaluate<S>(*n.lhs);
      if (!O::is_zero(v.im)) throw ParseError(n.pos, "sqrt of a non-real value");
      return {O::sqrt(v.re, n.pos), S(0)};
    }
    case Node::Kind::kNeg: {
      auto v = evaluate<S>(*n.lhs);
      return {-v.re, -v.im};
    }
    case Node::Kind::kAdd:
    case Node::Kind::kSub: {
      auto l = evaluate<S>(*n.lhs);
      auto r = evaluate<S>(*n.rhs);
      if (n.kind == Node::Kind::kAdd) return {l.re + r.re, l.im + r.im};
      return {l.re - r.re, l.im - r.im};
    }
    case Node::Kind::kMul: {
      auto l = evaluate<S>(*n.lhs);
      auto r = evaluate<S>(*n.rhs);
      return {l.re * r.re - l.im * r.im, l.re * r.im + l.im * r.re};
    }
    case Node::Kind::kDiv: {
      auto l = evaluate<S>(*n.lhs);
      auto r = evaluate<S>(*n.rhs);
      S den = r.re * r.re + r.im * r.im;
      if (O::is_zero(den)) throw ParseError(n.pos, "division by zero");
      return {(l.re * r.re + l.im * r.im) / den, (l.im * r.re - l.re * r.im) / den};
    }
  }
  throw ParseError(n.pos, "internal parser error");
}

}  // namespace

Surd parse_surd(std::string_view text) {
  NodePtr root = Parser(text).parse();
  Gaussian<Surd> v = evaluate<Surd>(*root);
  if (!v.im.is_zero()) throw ParseError(0, "expected a real value");
  return v.re;
}

ComplexLiteral parse_complex(std::string_view text) {
  NodePtr root = Parser(text).parse();
  try {
    return {evaluate<Surd>(*root)};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kIncomparable) throw;
  }
  return {evaluate<Real>(*root)};
}

}  // namespace growcap
