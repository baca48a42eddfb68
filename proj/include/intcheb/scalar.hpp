#ifndef INTCHEB_SCALAR_HPP
#define INTCHEB_SCALAR_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "intcheb/errors.hpp"

namespace intcheb {

using Integer = mpz_class;
using Rational = mpq_class;

/// n/d in lowest terms; gmpxx leaves two-argument constructions uncanonicalized.
inline Rational ratio(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// Parses "p/q", "p", or a finite decimal such as "0.05" into an exact rational.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '+'; }), s.end());
  if (s.empty())
    throw DomainError("empty rational literal");
  try {
    if (auto dot = s.find('.'); dot != std::string::npos) {
      bool neg = s[0] == '-';
      std::string body = neg ? s.substr(1) : s;
      dot = body.find('.');
      std::string whole = body.substr(0, dot);
      std::string frac = body.substr(dot + 1);
      if (whole.empty())
        whole = "0";
      Integer num(whole + frac, 10);
      Integer den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
      Rational r(num, den);
      r.canonicalize();
      return neg ? Rational(-r) : r;
    }
    Rational r(s, 10);
    if (r.get_den() == 0)
      throw DomainError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw DomainError("malformed rational literal '" + s + "'");
  }
}

/// Canonical "p/q" text (just "p" for integers).
inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Integer floor_of(const Rational& r) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

inline Integer ceil_of(const Rational& r) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

/// Nearest integer; exact halves go toward zero.
inline Integer round_nearest(const Rational& r) {
  Integer f = floor_of(r);
  Rational frac = r - f;
  const Rational half(1, 2);
  if (frac < half)
    return f;
  if (frac > half)
    return f + 1;
  return sgn(r) >= 0 ? f : Integer(f + 1);
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// min over c in Z of |r - c|.
inline Rational dist_to_integers(const Rational& r) {
  Rational d = r - round_nearest(r);
  return abs(d);
}

inline Rational pow(const Rational& base, unsigned long e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  out.canonicalize();
  return out;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

/// Gaussian rational re + i*im.
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(Rational r) : re(std::move(r)), im(0) {}
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  Gaussian(long v) : re(v), im(0) {}
  Gaussian(const Integer& v) : re(v), im(0) {}

  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o) {
    Rational n = o.re * o.re + o.im * o.im;
    if (n == 0)
      throw DomainError("division by zero Gaussian rational");
    Rational r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = std::move(r);
    return *this;
  }
  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend Gaussian operator-(const Gaussian& a) { return {Rational(-a.re), Rational(-a.im)}; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

  Gaussian conj() const { return {re, Rational(-im)}; }
  /// |z|^2, exact.
  Rational norm2() const { return re * re + im * im; }
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  friend std::ostream& operator<<(std::ostream& os, const Gaussian& g) {
    os << g.re.get_str();
    if (sgn(g.im) != 0)
      os << (sgn(g.im) > 0 ? "+" : "") << g.im.get_str() << "i";
    return os;
  }
};

inline std::string to_string(const Gaussian& g) {
  std::string s = g.re.get_str();
  if (sgn(g.im) != 0)
    s += (sgn(g.im) > 0 ? "+" : "") + g.im.get_str() + "i";
  return s;
}

/// Parses "re,im" (or a plain rational) into a Gaussian rational.
inline Gaussian parse_gaussian(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos)
    return Gaussian(parse_rational(text));
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

inline Gaussian round_nearest(const Gaussian& g) {
  return {Rational(round_nearest(g.re)), Rational(round_nearest(g.im))};
}

inline bool is_integer(const Gaussian& g) { return is_integer(g.re) && is_integer(g.im); }

inline Gaussian pow(const Gaussian& base, unsigned long e) {
  Gaussian out(1);
  Gaussian b = base;
  while (e) {
    if (e & 1)
      out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

/// Scalar traits let polynomial code treat Rational and Gaussian uniformly.
template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& v) { return sgn(v) == 0; }
  static bool is_integer(const Rational& v) { return intcheb::is_integer(v); }
  static Rational round(const Rational& v) { return Rational(round_nearest(v)); }
  /// |v|^2, exact.
  static Rational modulus2(const Rational& v) { return v * v; }
  static std::string str(const Rational& v) { return v.get_str(); }
};

template <>
struct ScalarTraits<Gaussian> {
  static Gaussian zero() { return Gaussian(0); }
  static Gaussian one() { return Gaussian(1); }
  static bool is_zero(const Gaussian& v) { return v.is_zero(); }
  static bool is_integer(const Gaussian& v) { return intcheb::is_integer(v); }
  static Gaussian round(const Gaussian& v) { return round_nearest(v); }
  static Rational modulus2(const Gaussian& v) { return v.norm2(); }
  static std::string str(const Gaussian& v) { return to_string(v); }
};

/// Closed interval [lo, hi] of rationals enclosing a real quantity.
struct Enclosure {
  Rational lo;
  Rational hi;

  Enclosure() = default;
  explicit Enclosure(const Rational& exact) : lo(exact), hi(exact) {}
  Enclosure(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi)
      throw DomainError("enclosure with lo > hi");
  }

  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  /// Width relative to the upper end (0 for an exact zero).
  Rational relative_width() const { return sgn(hi) == 0 ? Rational(0) : Rational(width() / abs(hi)); }

  friend Enclosure operator+(const Enclosure& a, const Enclosure& b) { return {a.lo + b.lo, a.hi + b.hi}; }
  /// Product of nonnegative enclosures.
  friend Enclosure operator*(const Enclosure& a, const Enclosure& b) {
    if (sgn(a.lo) < 0 || sgn(b.lo) < 0)
      throw DomainError("enclosure product expects nonnegative operands");
    return {a.lo * b.lo, a.hi * b.hi};
  }
  friend Enclosure operator*(const Enclosure& a, const Rational& k) {
    if (sgn(k) >= 0)
      return {a.lo * k, a.hi * k};
    return {a.hi * k, a.lo * k};
  }
};

inline Enclosure pow(const Enclosure& e, unsigned long n) {
  if (sgn(e.lo) < 0)
    throw DomainError("enclosure power expects a nonnegative base");
  return {pow(e.lo, n), pow(e.hi, n)};
}

/// Rational enclosure of sqrt(x) with about `bits` bits of relative accuracy.
inline Enclosure sqrt_enclosure(const Rational& x, unsigned bits = 128) {
  if (sgn(x) < 0)
    throw DomainError("sqrt of a negative rational");
  if (sgn(x) == 0)
    return Enclosure(Rational(0));
  // sqrt(p/q) = sqrt(p*q)/q; scale p*q by 4^k before the integer root.
  Integer pq = x.get_num() * x.get_den();
  Integer root;
  mpz_sqrt(root.get_mpz_t(), pq.get_mpz_t());
  if (root * root == pq) {
    Rational r(root, x.get_den());
    r.canonicalize();
    return Enclosure(r);
  }
  Integer scaled = pq << (2 * bits);
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  Integer den = x.get_den() << bits;
  Rational lo(root, den), hi(Integer(root + 1), den);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

/// Exact square root when x is the square of a rational.
inline bool exact_sqrt(const Rational& x, Rational& out) {
  if (sgn(x) < 0)
    return false;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
  if (n * n != x.get_num() || d * d != x.get_den())
    return false;
  out = Rational(n, d);
  return true;
}

/// Enclosure of |g| for a Gaussian rational.
inline Enclosure modulus(const Gaussian& g, unsigned bits = 128) { return sqrt_enclosure(g.norm2(), bits); }

} // namespace intcheb

#endif // INTCHEB_SCALAR_HPP
