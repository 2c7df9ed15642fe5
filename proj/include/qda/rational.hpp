#pragma once
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <complex>

namespace qda {

// Exact rational over 64-bit integers with 128-bit intermediates.
struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rat() = default;
  Rat(std::int64_t n) : num(n), den(1) {}
  Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  static Rat make128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) { __int128 t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw std::overflow_error("rational overflow");
    Rat r; r.num = (std::int64_t)n; r.den = (std::int64_t)d; return r;
  }

  friend Rat operator+(const Rat& x, const Rat& y) {
    return make128((__int128)x.num * y.den + (__int128)y.num * x.den,
                   (__int128)x.den * y.den);
  }
  friend Rat operator-(const Rat& x, const Rat& y) {
    return make128((__int128)x.num * y.den - (__int128)y.num * x.den,
                   (__int128)x.den * y.den);
  }
  friend Rat operator*(const Rat& x, const Rat& y) {
    return make128((__int128)x.num * y.num, (__int128)x.den * y.den);
  }
  friend Rat operator/(const Rat& x, const Rat& y) {
    if (y.num == 0) throw std::domain_error("division by zero rational");
    return make128((__int128)x.num * y.den, (__int128)x.den * y.num);
  }
  Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }
  friend bool operator==(const Rat& x, const Rat& y) { return x.num == y.num && x.den == y.den; }
  friend bool operator!=(const Rat& x, const Rat& y) { return !(x == y); }
  friend bool operator<(const Rat& x, const Rat& y) {
    return (__int128)x.num * y.den < (__int128)y.num * x.den;
  }
  bool is_zero() const { return num == 0; }
  double to_double() const { return double(num) / double(den); }
  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// Gaussian rational: re + im*i, both exact.
struct GRat {
  Rat re, im;
  GRat() = default;
  GRat(Rat r) : re(r) {}
  GRat(std::int64_t n) : re(n) {}
  GRat(Rat r, Rat i) : re(r), im(i) {}

  friend GRat operator+(const GRat& x, const GRat& y) { return {x.re + y.re, x.im + y.im}; }
  friend GRat operator-(const GRat& x, const GRat& y) { return {x.re - y.re, x.im - y.im}; }
  friend GRat operator*(const GRat& x, const GRat& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend GRat operator/(const GRat& x, const GRat& y) {
    Rat n2 = y.re * y.re + y.im * y.im;
    if (n2.is_zero()) throw std::domain_error("division by zero");
    return {(x.re * y.re + x.im * y.im) / n2, (x.im * y.re - x.re * y.im) / n2};
  }
  GRat operator-() const { return {-re, -im}; }
  friend bool operator==(const GRat& x, const GRat& y) { return x.re == y.re && x.im == y.im; }
  friend bool operator!=(const GRat& x, const GRat& y) { return !(x == y); }
  friend bool operator<(const GRat& x, const GRat& y) {
    if (x.re != y.re) return x.re < y.re;
    return x.im < y.im;
  }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
  static GRat i() { return GRat(Rat(0), Rat(1)); }
  std::string str() const {
    if (im.is_zero()) return re.str();
    if (re.is_zero()) return im == Rat(1) ? "i" : (im == Rat(-1) ? "-i" : im.str() + "*i");
    return "(" + re.str() + (im.num > 0 ? "+" : "") +
           (im == Rat(1) ? "" : (im == Rat(-1) ? "-" : im.str() + "*")) + "i)";
  }
};

}  // namespace qda
