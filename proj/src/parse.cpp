#include "ptrace/parse.hpp"

#include <cctype>

#include "ptrace/errors.hpp"

namespace ptrace {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "' at position " + std::to_string(i),
                         std::string(1, c));
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, RingPtr ring, int order)
      : toks_(tokenize(text)), ring_(std::move(ring)), order_(order) {}

  Poly parse() {
    if (peek().kind == Tok::End) throw ParseError("empty expression", "");
    Poly p = expr();
    if (peek().kind != Tok::End) fail("unexpected token", peek());
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] static void fail(const std::string& what, const Token& t) {
    const std::string shown = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(what + " " + shown + " at position " + std::to_string(t.pos), t.text);
  }

  Poly expr() {
    Poly acc = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = next().kind == Tok::Minus;
      Poly t = term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  static bool starts_factor(Tok k) { return k == Tok::Number || k == Tok::Ident || k == Tok::LParen; }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      const Tok k = peek().kind;
      if (k == Tok::Star) {
        next();
        acc = acc * unary();
      } else if (k == Tok::Slash) {
        const Token& at = next();
        Poly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero expression after", at);
        acc = d.leading_coefficient().inverse() * acc;
      } else if (starts_factor(k)) {
        acc = acc * power();  // implicit multiplication
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (peek().kind == Tok::Minus) {
      next();
      return -unary();
    }
    if (peek().kind == Tok::Plus) {
      next();
      return unary();
    }
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (peek().kind != Tok::Caret) return base;
    next();
    bool negative = false;
    if (peek().kind == Tok::Minus) {
      next();
      negative = true;
    }
    const Token& e = next();
    if (e.kind != Tok::Number) fail("expected integer exponent, got", e);
    if (e.text.size() > 6) fail("exponent too large:", e);
    const unsigned n = static_cast<unsigned>(std::stoul(e.text));
    if (negative) {
      if (!base.is_constant() || base.is_zero()) fail("negative exponent on a non-constant base before", e);
      return Poly(ring_, base.leading_coefficient().inverse()).pow(n);
    }
    return base.pow(n);
  }

  Poly atom() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Number:
        return Poly(ring_, Scalar(mpq_class(mpz_class(t.text))));
      case Tok::Ident: {
        if (auto idx = ring_->index_of(t.text)) return Poly::variable(ring_, *idx);
        if (t.text == "zeta" && order_ > 1) return Poly(ring_, Scalar::zeta(order_));
        fail("unknown variable", t);
      }
      case Tok::LParen: {
        Poly p = expr();
        if (next().kind != Tok::RParen) fail("expected ')' before", toks_[pos_ - 1]);
        return p;
      }
      default:
        fail("unexpected token", t);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  RingPtr ring_;
  int order_;
};

}  // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring, int cyclotomic_order) {
  return Parser(text, ring, cyclotomic_order).parse();
}

Scalar parse_scalar(std::string_view text, int cyclotomic_order) {
  static const RingPtr constants = make_ring({}, {});
  Poly p = parse_poly(text, constants, cyclotomic_order);
  return p.is_zero() ? Scalar(0) : p.leading_coefficient();
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace ptrace
