#include "qda/expr.hpp"
#include <algorithm>
#include <random>
#include <sstream>

namespace qda {

std::string ParamPoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms) {
    std::string cs = c.str();
    if (!first) os << " + ";
    first = false;
    if (m.is_one()) { os << cs; continue; }
    if (!(c == GRat(1))) os << cs << "*";
    bool fp = true;
    for (int i = 0; i < kNumParams; ++i) {
      if (!m.e[i]) continue;
      if (!fp) os << "*";
      fp = false;
      os << param_name(static_cast<Param>(i));
      if (m.e[i] != 1) os << "^" << m.e[i];
    }
  }
  return os.str();
}

namespace {

// Lexicographic sign of a Gaussian rational (for trig-frequency normalization).
int grat_sign(const GRat& g) {
  if (!g.re.is_zero()) return g.re.num > 0 ? 1 : -1;
  if (!g.im.is_zero()) return g.im.num > 0 ? 1 : -1;
  return 0;
}
int poly_sign(const ParamPoly& p) {
  if (p.terms.empty()) return 0;
  return grat_sign(p.terms.begin()->second);
}

// Push a raw term into the accumulator, normalizing trig(0) and freq sign.
void push_term(std::vector<Term>& out, Term t) {
  if (t.coeff.is_zero()) return;
  if (t.trig != Trig::none) {
    if (t.freq.is_zero()) {
      if (t.trig == Trig::sin) return;  // sin(0) = 0
      t.trig = Trig::none;              // cos(0) = 1
      t.freq = ParamPoly();
    } else if (poly_sign(t.freq) < 0) {
      t.freq = -t.freq;
      if (t.trig == Trig::sin) t.coeff = -t.coeff;
    }
  }
  out.push_back(std::move(t));
}

// Multiply two terms; may produce one or two raw terms (trig product-to-sum).
void mul_terms(std::vector<Term>& out, const Term& s, const Term& t) {
  Term base;
  base.coeff = s.coeff * t.coeff;
  base.xpow = s.xpow + t.xpow;
  base.exprate = s.exprate + t.exprate;
  if (s.trig == Trig::none && t.trig == Trig::none) {
    push_term(out, base);
    return;
  }
  if (s.trig == Trig::none || t.trig == Trig::none) {
    const Term& tr = s.trig == Trig::none ? t : s;
    base.trig = tr.trig;
    base.freq = tr.freq;
    push_term(out, base);
    return;
  }
  ParamPoly sum = s.freq + t.freq, dif = s.freq - t.freq;
  GRat half(Rat(1, 2));
  Term t1 = base, t2 = base;
  if (s.trig == Trig::sin && t.trig == Trig::sin) {
    // sin A sin B = (cos(A-B) - cos(A+B))/2
    t1.coeff = base.coeff * ParamPoly(half); t1.trig = Trig::cos; t1.freq = dif;
    t2.coeff = -(base.coeff * ParamPoly(half)); t2.trig = Trig::cos; t2.freq = sum;
  } else if (s.trig == Trig::cos && t.trig == Trig::cos) {
    // cos A cos B = (cos(A-B) + cos(A+B))/2
    t1.coeff = base.coeff * ParamPoly(half); t1.trig = Trig::cos; t1.freq = dif;
    t2.coeff = base.coeff * ParamPoly(half); t2.trig = Trig::cos; t2.freq = sum;
  } else {
    // sin A cos B = (sin(A+B) + sin(A-B))/2 with A the sin factor
    const Term& sn = s.trig == Trig::sin ? s : t;
    const Term& cs = s.trig == Trig::sin ? t : s;
    t1.coeff = base.coeff * ParamPoly(half); t1.trig = Trig::sin; t1.freq = sn.freq + cs.freq;
    t2.coeff = base.coeff * ParamPoly(half); t2.trig = Trig::sin; t2.freq = sn.freq - cs.freq;
  }
  push_term(out, t1);
  push_term(out, t2);
}

}  // namespace

void Expr::canonicalize() {
  std::vector<Term> raw;
  raw.reserve(terms.size());
  for (auto& t : terms) push_term(raw, t);
  std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) { return sig_less(a, b); });
  std::vector<Term> merged;
  for (auto& t : raw) {
    if (!merged.empty() && sig_equal(merged.back(), t)) {
      merged.back().coeff = merged.back().coeff + t.coeff;
      if (merged.back().coeff.is_zero()) merged.pop_back();
    } else {
      merged.push_back(t);
    }
  }
  terms = std::move(merged);
}

Expr Expr::constant(ParamPoly c) {
  Term t;
  t.coeff = std::move(c);
  return Expr({t});
}
Expr Expr::x(int pow) {
  Term t;
  t.coeff = ParamPoly(GRat(1));
  t.xpow = pow;
  return Expr({t});
}
Expr Expr::exp_of(ParamPoly rate) {
  Term t;
  t.coeff = ParamPoly(GRat(1));
  t.exprate = std::move(rate);
  return Expr({t});
}
Expr Expr::trig_of(Trig kind, ParamPoly freq) {
  Term t;
  t.coeff = ParamPoly(GRat(1));
  t.trig = kind;
  t.freq = std::move(freq);
  return Expr({t});
}

Expr operator+(const Expr& a, const Expr& b) {
  std::vector<Term> ts = a.terms;
  ts.insert(ts.end(), b.terms.begin(), b.terms.end());
  return Expr(std::move(ts));
}
Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }
Expr Expr::operator-() const {
  std::vector<Term> ts = terms;
  for (auto& t : ts) t.coeff = -t.coeff;
  Expr r;
  r.terms = std::move(ts);
  return r;
}
Expr operator*(const Expr& a, const Expr& b) {
  std::vector<Term> out;
  out.reserve(a.terms.size() * b.terms.size() * 2);
  for (auto& s : a.terms)
    for (auto& t : b.terms) mul_terms(out, s, t);
  Expr r;
  r.terms = std::move(out);
  r.canonicalize();
  return r;
}

Expr operator/(const Expr& a, const Expr& b) {
  if (b.terms.size() != 1)
    throw std::domain_error("division only by monomials in x or pure parameters");
  const Term& d = b.terms.front();
  if (d.trig != Trig::none || !d.exprate.is_zero())
    throw std::domain_error("division only by monomials in x or pure parameters");
  std::vector<Term> ts = a.terms;
  for (auto& t : ts) {
    t.coeff = t.coeff / d.coeff;  // throws unless divisor coeff is a monomial
    t.xpow -= d.xpow;
  }
  Expr r;
  r.terms = std::move(ts);
  r.canonicalize();
  return r;
}

Expr Expr::diff() const {
  std::vector<Term> out;
  for (const auto& t : terms) {
    // power factor
    if (t.xpow != 0) {
      Term d = t;
      d.coeff = t.coeff * ParamPoly(GRat(t.xpow));
      d.xpow = t.xpow - 1;
      push_term(out, d);
    }
    // exponential factor
    if (!t.exprate.is_zero()) {
      Term d = t;
      d.coeff = t.coeff * t.exprate;
      push_term(out, d);
    }
    // trig factor
    if (t.trig == Trig::sin) {
      Term d = t;
      d.coeff = t.coeff * t.freq;
      d.trig = Trig::cos;
      push_term(out, d);
    } else if (t.trig == Trig::cos) {
      Term d = t;
      d.coeff = -(t.coeff * t.freq);
      d.trig = Trig::sin;
      push_term(out, d);
    }
  }
  Expr r;
  r.terms = std::move(out);
  r.canonicalize();
  return r;
}

std::complex<double> Expr::eval(double x, const ParamSet& ps) const {
  std::complex<double> sum = 0;
  for (const auto& t : terms) {
    std::complex<double> v = t.coeff.eval(ps);
    if (t.xpow != 0) v *= std::pow(std::complex<double>(x, 0), t.xpow);
    if (!t.exprate.is_zero()) v *= std::exp(t.exprate.eval(ps) * x);
    if (t.trig == Trig::sin) v *= std::sin(t.freq.eval(ps) * x);
    else if (t.trig == Trig::cos) v *= std::cos(t.freq.eval(ps) * x);
    sum += v;
  }
  return sum;
}

std::vector<Expr::NumTerm> Expr::substituted(const ParamSet& ps, double tol) const {
  std::vector<NumTerm> nts;
  double maxc = 0;
  for (const auto& t : terms) {
    NumTerm n;
    n.coeff = t.coeff.eval(ps);
    n.xpow = t.xpow;
    n.exprate = t.exprate.eval(ps);
    n.trig = t.trig;
    n.freq = t.trig == Trig::none ? 0.0 : t.freq.eval(ps);
    maxc = std::max(maxc, std::abs(n.coeff));
    nts.push_back(n);
  }
  std::vector<NumTerm> kept;
  for (auto& n : nts)
    if (std::abs(n.coeff) > tol * std::max(1.0, maxc)) kept.push_back(n);
  return kept;
}

std::string Expr::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    if (!first) os << " + ";
    first = false;
    std::vector<std::string> factors;
    std::string cs = t.coeff.str();
    if (cs != "1" || (t.xpow == 0 && t.exprate.is_zero() && t.trig == Trig::none)) {
      if (t.coeff.terms.size() > 1) cs = "(" + cs + ")";
      factors.push_back(cs);
    }
    if (t.xpow != 0)
      factors.push_back(t.xpow == 1 ? "x" : "x^" + std::to_string(t.xpow));
    if (!t.exprate.is_zero()) factors.push_back("exp((" + t.exprate.str() + ")*x)");
    if (t.trig == Trig::sin) factors.push_back("sin((" + t.freq.str() + ")*x)");
    if (t.trig == Trig::cos) factors.push_back("cos((" + t.freq.str() + ")*x)");
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) os << "*";
      os << factors[i];
    }
  }
  return os.str();
}

bool expr_is_zero(const Expr& e, const ParamSet& ps) {
  if (e.is_zero()) return true;
  if (e.substituted(ps).empty()) return true;
  // Random-point fallback: distinct symbolic signatures can alias numerically
  // (e.g. exp rates that coincide after substitution), so sample.
  std::mt19937_64 rng(0x51ec7a11);
  std::uniform_real_distribution<double> ud(0.3, 2.7);
  double scale = 0;
  for (int i = 0; i < 32; ++i) {
    double x = ud(rng);
    scale = std::max(scale, std::abs(e.eval(x, ps)));
  }
  return scale <= 1e-10;
}

bool expr_equal(const Expr& lhs, const Expr& rhs, const ParamSet& ps) {
  return expr_is_zero(lhs - rhs, ps);
}

}  // namespace qda
