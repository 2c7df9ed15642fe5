#pragma once
#include <array>
#include <map>
#include <string>
#include <vector>
#include <complex>
#include <optional>
#include <stdexcept>
#include "qda/rational.hpp"

namespace qda {

// Closed parameter set used across the catalog.
enum class Param : int {
  alpha = 0, beta, gamma, lambda, nu, tau,
  c1, c2, c3, a, b, c, k, eps, nu_pt,
  COUNT
};
constexpr int kNumParams = static_cast<int>(Param::COUNT);

inline const char* param_name(Param p) {
  static const char* names[] = {"alpha", "beta",  "gamma", "lambda", "nu",
                                "tau",   "c1",    "c2",    "c3",     "a",
                                "b",     "c",     "k",     "eps",    "nu_pt"};
  return names[static_cast<int>(p)];
}

inline std::optional<Param> param_from_name(const std::string& s) {
  for (int i = 0; i < kNumParams; ++i)
    if (s == param_name(static_cast<Param>(i))) return static_cast<Param>(i);
  return std::nullopt;
}

// Numeric parameter assignment (complex scalars, paper units hbar=2m=1).
struct ParamSet {
  std::array<std::complex<double>, kNumParams> values{};
  std::array<bool, kNumParams> set{};

  std::complex<double> get(Param p) const { return values[static_cast<int>(p)]; }
  bool has(Param p) const { return set[static_cast<int>(p)]; }
  void put(Param p, std::complex<double> v) {
    values[static_cast<int>(p)] = v;
    set[static_cast<int>(p)] = true;
  }
};

// Laurent monomial in the parameters: signed exponent vector (negative
// exponents arise from dividing by parameters).
struct ParamMono {
  std::array<std::int16_t, kNumParams> e{};
  friend bool operator<(const ParamMono& x, const ParamMono& y) { return x.e < y.e; }
  friend bool operator==(const ParamMono& x, const ParamMono& y) { return x.e == y.e; }
  bool is_one() const {
    for (auto v : e) if (v) return false;
    return true;
  }
  ParamMono times(const ParamMono& o) const {
    ParamMono r;
    for (int i = 0; i < kNumParams; ++i) {
      int s = e[i] + o.e[i];
      if (s > 1000 || s < -1000) throw std::overflow_error("parameter exponent overflow");
      r.e[i] = static_cast<std::int16_t>(s);
    }
    return r;
  }
};

// Exact multivariate polynomial in the parameters with Gaussian-rational coefficients.
class ParamPoly {
 public:
  std::map<ParamMono, GRat> terms;

  ParamPoly() = default;
  ParamPoly(GRat c) { if (!c.is_zero()) terms[ParamMono{}] = c; }
  ParamPoly(std::int64_t n) : ParamPoly(GRat(n)) {}
  static ParamPoly var(Param p) {
    ParamPoly r;
    ParamMono m;
    m.e[static_cast<int>(p)] = 1;
    r.terms[m] = GRat(1);
    return r;
  }

  bool is_zero() const { return terms.empty(); }
  bool is_const() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first.is_one());
  }
  GRat const_value() const {
    if (terms.empty()) return GRat(0);
    if (!is_const()) throw std::domain_error("ParamPoly not constant");
    return terms.begin()->second;
  }

  friend ParamPoly operator+(const ParamPoly& x, const ParamPoly& y) {
    ParamPoly r = x;
    for (auto& [m, c] : y.terms) {
      auto it = r.terms.find(m);
      if (it == r.terms.end()) r.terms[m] = c;
      else {
        it->second = it->second + c;
        if (it->second.is_zero()) r.terms.erase(it);
      }
    }
    return r;
  }
  friend ParamPoly operator-(const ParamPoly& x, const ParamPoly& y) { return x + (-y); }
  ParamPoly operator-() const {
    ParamPoly r = *this;
    for (auto& [m, c] : r.terms) c = -c;
    return r;
  }
  friend ParamPoly operator*(const ParamPoly& x, const ParamPoly& y) {
    ParamPoly r;
    for (auto& [mx, cx] : x.terms)
      for (auto& [my, cy] : y.terms) {
        ParamMono m = mx.times(my);
        GRat c = cx * cy;
        auto it = r.terms.find(m);
        if (it == r.terms.end()) { if (!c.is_zero()) r.terms[m] = c; }
        else {
          it->second = it->second + c;
          if (it->second.is_zero()) r.terms.erase(it);
        }
      }
    return r;
  }
  // Division only by a single (Laurent) monomial.
  friend ParamPoly operator/(const ParamPoly& x, const ParamPoly& y) {
    if (y.terms.size() != 1) throw std::domain_error("ParamPoly division requires monomial divisor");
    const auto& [dm, dc] = *y.terms.begin();
    ParamPoly r;
    for (auto& [m, c] : x.terms) {
      ParamMono q;
      for (int i = 0; i < kNumParams; ++i)
        q.e[i] = static_cast<std::int16_t>(m.e[i] - dm.e[i]);
      r.terms[q] = c / dc;
    }
    return r;
  }
  friend bool operator==(const ParamPoly& x, const ParamPoly& y) { return x.terms == y.terms; }
  friend bool operator!=(const ParamPoly& x, const ParamPoly& y) { return !(x == y); }
  friend bool operator<(const ParamPoly& x, const ParamPoly& y) {
    auto xi = x.terms.begin(), yi = y.terms.begin();
    for (; xi != x.terms.end() && yi != y.terms.end(); ++xi, ++yi) {
      if (xi->first == yi->first) {
        if (xi->second == yi->second) continue;
        return xi->second < yi->second;
      }
      return xi->first < yi->first;
    }
    return x.terms.size() < y.terms.size();
  }

  std::complex<double> eval(const ParamSet& ps) const {
    std::complex<double> sum = 0;
    for (auto& [m, c] : terms) {
      std::complex<double> t = c.to_complex();
      for (int i = 0; i < kNumParams; ++i) {
        if (m.e[i] >= 0)
          for (int j = 0; j < m.e[i]; ++j) t *= ps.get(static_cast<Param>(i));
        else
          for (int j = 0; j < -m.e[i]; ++j) t /= ps.get(static_cast<Param>(i));
      }
      sum += t;
    }
    return sum;
  }

  std::string str() const;
};

}  // namespace qda
