#include "qda/expr.hpp"
#include <cctype>

namespace qda {
namespace {

// Recursive-descent parser over the closed expression family:
//   expr    := term (('+'|'-') term)*
//   term    := unary (('*'|'/') unary)*
//   unary   := ('+'|'-')* power
//   power   := atom ('^' integer)?
//   atom    := number | 'i' | 'x' | param | func '(' expr ')' | '(' expr ')'
//   func    := 'exp' | 'sin' | 'cos'
// Arguments of exp/sin/cos must reduce to (parameter polynomial) * x.
class Parser {
 public:
  explicit Parser(const std::string& s) : src(s) {}

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos != src.size()) throw ParseError("unexpected trailing input", pos);
    return e;
  }

 private:
  const std::string& src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace((unsigned char)src[pos])) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) { ++pos; return true; }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
  }

  Expr expr() {
    Expr e = term();
    for (;;) {
      if (accept('+')) e = e + term();
      else if (accept('-')) e = e - term();
      else return e;
    }
  }

  Expr term() {
    Expr e = unary();
    for (;;) {
      if (accept('*')) e = e * unary();
      else if (accept('/')) {
        std::size_t at = pos;
        try {
          e = e / unary();
        } catch (const std::domain_error& ex) {
          throw ParseError(ex.what(), at);
        }
      } else return e;
    }
  }

  Expr unary() {
    bool neg = false;
    for (;;) {
      if (accept('-')) neg = !neg;
      else if (accept('+')) continue;
      else break;
    }
    Expr a = power();
    return neg ? -a : a;
  }

  Expr power() {
    Expr base = atom();
    if (!accept('^')) return base;
    skip_ws();
    bool neg = accept('-');
    std::size_t at = pos;
    if (pos >= src.size() || !std::isdigit((unsigned char)src[pos]))
      throw ParseError("expected integer exponent", pos);
    long n = 0;
    while (pos < src.size() && std::isdigit((unsigned char)src[pos]))
      n = n * 10 + (src[pos++] - '0');
    Expr r = Expr::number(GRat(1));
    for (long j = 0; j < n; ++j) r = r * base;
    if (!neg) return r;
    try {
      return Expr::number(GRat(1)) / r;
    } catch (const std::domain_error& ex) {
      throw ParseError(ex.what(), at);
    }
  }

  Expr atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit((unsigned char)c) || c == '.') return number();
    if (std::isalpha((unsigned char)c) || c == '_') return ident();
    throw ParseError("unexpected character", pos);
  }

  Expr number() {
    std::size_t at = pos;
    std::int64_t ip = 0;
    while (pos < src.size() && std::isdigit((unsigned char)src[pos])) {
      ip = ip * 10 + (src[pos] - '0');
      if (ip < 0) throw ParseError("integer literal overflow", at);
      ++pos;
    }
    Rat r(ip);
    if (pos < src.size() && src[pos] == '.') {
      ++pos;
      std::int64_t frac = 0, den = 1;
      while (pos < src.size() && std::isdigit((unsigned char)src[pos])) {
        frac = frac * 10 + (src[pos] - '0');
        den *= 10;
        if (frac < 0 || den < 0) throw ParseError("decimal literal overflow", at);
        ++pos;
      }
      r = r + Rat(frac, den);
    }
    return Expr::number(GRat(r));
  }

  Expr ident() {
    std::size_t at = pos;
    std::string name;
    while (pos < src.size() &&
           (std::isalnum((unsigned char)src[pos]) || src[pos] == '_'))
      name += src[pos++];
    if (name == "i") return Expr::number(GRat::i());
    if (name == "x") return Expr::x();
    if (name == "exp" || name == "sin" || name == "cos") {
      expect('(');
      Expr arg = expr();
      expect(')');
      ParamPoly rate = linear_x_coeff(arg, at);
      if (name == "exp") return Expr::exp_of(rate);
      return Expr::trig_of(name == "sin" ? Trig::sin : Trig::cos, rate);
    }
    if (auto p = param_from_name(name)) return Expr::param(*p);
    throw ParseError("unknown identifier '" + name + "'", at);
  }

  // Require `arg` to be exactly (parameter polynomial) * x; return that polynomial.
  static ParamPoly linear_x_coeff(const Expr& arg, std::size_t at) {
    if (arg.is_zero()) return ParamPoly();
    if (arg.terms.size() != 1) throw ParseError("function argument must be linear in x", at);
    const Term& t = arg.terms.front();
    if (t.xpow != 1 || t.trig != Trig::none || !t.exprate.is_zero())
      throw ParseError("function argument must be linear in x", at);
    return t.coeff;
  }
};

}  // namespace

Expr parse_expr(const std::string& src) { return Parser(src).parse(); }

}  // namespace qda
