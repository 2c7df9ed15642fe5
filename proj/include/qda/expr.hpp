#pragma once
#include <vector>
#include <string>
#include <complex>
#include "qda/param.hpp"

namespace qda {

// One canonical term: coeff * x^xpow * exp(exprate*x) * trig(freq*x).
// Trig products are normalized away (product-to-sum), so at most one
// trig factor survives per term; exp factors merge by adding rates.
enum class Trig : int { none = 0, sin = 1, cos = 2 };

struct Term {
  ParamPoly coeff;
  int xpow = 0;
  ParamPoly exprate;  // zero polynomial = no exponential factor
  Trig trig = Trig::none;
  ParamPoly freq;     // meaningful only when trig != none

  // Basis signature ordering (coeff excluded).
  friend bool sig_less(const Term& s, const Term& t) {
    if (s.xpow != t.xpow) return s.xpow < t.xpow;
    if (s.exprate != t.exprate) return s.exprate < t.exprate;
    if (s.trig != t.trig) return static_cast<int>(s.trig) < static_cast<int>(t.trig);
    return s.freq < t.freq;
  }
  friend bool sig_equal(const Term& s, const Term& t) {
    return s.xpow == t.xpow && s.exprate == t.exprate && s.trig == t.trig &&
           (s.trig == Trig::none || s.freq == t.freq);
  }
};

class Expr {
 public:
  std::vector<Term> terms;  // canonical: sorted by signature, merged, nonzero

  Expr() = default;
  explicit Expr(std::vector<Term> ts) : terms(std::move(ts)) { canonicalize(); }

  static Expr zero() { return Expr(); }
  static Expr constant(ParamPoly c);
  static Expr number(GRat c) { return constant(ParamPoly(c)); }
  static Expr x(int pow = 1);
  static Expr param(Param p) { return constant(ParamPoly::var(p)); }
  static Expr exp_of(ParamPoly rate);         // exp(rate*x)
  static Expr trig_of(Trig kind, ParamPoly freq);  // sin/cos(freq*x)

  bool is_zero() const { return terms.empty(); }

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  Expr operator-() const;
  friend Expr operator*(const Expr& a, const Expr& b);

  // Division restricted to monomial-in-x or pure-parameter divisors.
  friend Expr operator/(const Expr& a, const Expr& b);

  Expr diff() const;

  std::complex<double> eval(double x, const ParamSet& ps) const;

  // Substitute numeric parameter values and collapse coefficients whose
  // magnitude is below `tol` relative to the largest coefficient.
  // Returns the list of surviving (signature, value) pairs.
  struct NumTerm {
    std::complex<double> coeff;
    int xpow;
    std::complex<double> exprate;
    Trig trig;
    std::complex<double> freq;
  };
  std::vector<NumTerm> substituted(const ParamSet& ps, double tol = 1e-12) const;

  std::string str() const;

  void canonicalize();
};

// Canonical equality after parameter substitution; falls back to random-point
// evaluation when numeric signatures collide inexactly.
bool expr_equal(const Expr& lhs, const Expr& rhs, const ParamSet& ps);

// True iff expr collapses to the zero expression under the substitution.
bool expr_is_zero(const Expr& e, const ParamSet& ps);

// Parser for the closed expression family. Throws ParseError.
struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off)
      : std::runtime_error(msg + " at offset " + std::to_string(off)), offset(off) {}
};
Expr parse_expr(const std::string& src);

}  // namespace qda
