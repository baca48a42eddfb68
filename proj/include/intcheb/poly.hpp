#ifndef INTCHEB_POLY_HPP
#define INTCHEB_POLY_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "intcheb/errors.hpp"
#include "intcheb/scalar.hpp"

namespace intcheb {

/// Dense univariate polynomial over an exact scalar, coefficients in ascending degree.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and has degree -1.
template <typename S>
class Poly {
public:
  using Scalar = S;
  using Traits = ScalarTraits<S>;

  Poly() = default;
  explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<S> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const S& v) { return Poly(std::vector<S>{v}); }
  /// v * x^k
  static Poly monomial(const S& v, std::size_t k) {
    std::vector<S> c(k + 1, Traits::zero());
    c[k] = v;
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(Traits::one(), 1); }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<S>& coeffs() const { return c_; }
  /// Coefficient of x^k (zero past the degree).
  S operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Traits::zero(); }
  S leading() const { return c_.empty() ? Traits::zero() : c_.back(); }

  void set(std::size_t k, const S& v) {
    if (k >= c_.size())
      c_.resize(k + 1, Traits::zero());
    c_[k] = v;
    trim();
  }

  bool is_integer() const {
    for (const auto& v : c_)
      if (!Traits::is_integer(v))
        return false;
    return true;
  }

  template <typename T>
  T operator()(const T& x) const {
    T acc = T(Traits::zero());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * x + T(*it);
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size())
      c_.resize(o.c_.size(), Traits::zero());
    for (std::size_t k = 0; k < o.c_.size(); ++k)
      c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size())
      c_.resize(o.c_.size(), Traits::zero());
    for (std::size_t k = 0; k < o.c_.size(); ++k)
      c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Poly& operator*=(const S& k) {
    for (auto& v : c_)
      v *= k;
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return Poly() - a; }
  friend Poly operator*(Poly a, const S& k) { return a *= k; }
  friend Poly operator*(const S& k, Poly a) { return a *= k; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
      return {};
    std::vector<S> out(a.c_.size() + b.c_.size() - 1, Traits::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (Traits::is_zero(a.c_[i]))
        continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned e) const {
    Poly out = constant(Traits::one());
    Poly b = *this;
    while (e) {
      if (e & 1u)
        out *= b;
      e >>= 1u;
      if (e)
        b *= b;
    }
    return out;
  }

  Poly derivative() const {
    if (c_.size() <= 1)
      return {};
    std::vector<S> out(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
      out[k - 1] = c_[k] * S(Rational(static_cast<long>(k)));
    return Poly(std::move(out));
  }

  /// Antiderivative vanishing at 0.
  Poly antiderivative() const {
    if (c_.empty())
      return {};
    std::vector<S> out(c_.size() + 1, Traits::zero());
    for (std::size_t k = 0; k < c_.size(); ++k)
      out[k + 1] = c_[k] / S(Rational(static_cast<long>(k + 1)));
    return Poly(std::move(out));
  }

  /// p(shift + scale * x), computed exactly by Horner on polynomials.
  Poly affine(const S& shift, const S& scale) const {
    Poly lin(std::vector<S>{shift, scale});
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * lin + constant(*it);
    return acc;
  }

  /// p(q(x)).
  Poly compose(const Poly& q) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * q + constant(*it);
    return acc;
  }

  /// Euclidean division; throws on a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero())
      throw DomainError("polynomial division by zero");
    Poly rem = *this;
    if (rem.degree() < d.degree())
      return {Poly(), rem};
    std::vector<S> quot(static_cast<std::size_t>(rem.degree() - d.degree() + 1), Traits::zero());
    const S lead = d.leading();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
      auto shift = static_cast<std::size_t>(rem.degree() - d.degree());
      S factor = rem.leading() / lead;
      quot[shift] = factor;
      for (std::size_t k = 0; k < d.c_.size(); ++k)
        rem.c_[k + shift] -= factor * d.c_[k];
      rem.c_.pop_back();
      rem.trim();
    }
    return {Poly(std::move(quot)), rem};
  }

  /// Monic gcd over the field of fractions.
  friend Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r);
    }
    if (!a.is_zero())
      a *= Traits::one() / a.leading();
    return a;
  }

  /// "p/q" strings in ascending degree, e.g. ["1/2","-1"].
  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& v : c_)
      out.push_back(Traits::str(v));
    return out;
  }

private:
  void trim() {
    while (!c_.empty() && Traits::is_zero(c_.back()))
      c_.pop_back();
  }

  std::vector<S> c_;
};

using Poly1 = Poly<Rational>;
using CPoly = Poly<Gaussian>;

inline CPoly to_complex(const Poly1& p) {
  std::vector<Gaussian> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs())
    c.emplace_back(v);
  return CPoly(std::move(c));
}

/// Result of nearest-integer rounding: f = rounded + residual.
template <typename S>
struct Rounded {
  Poly<S> rounded;
  Poly<S> residual;
};

/// Coefficient-wise nearest (Gaussian) integer, ties toward zero.
template <typename S>
Rounded<S> round_coeffs(const Poly<S>& f) {
  std::vector<S> q;
  q.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs())
    q.push_back(ScalarTraits<S>::round(v));
  Poly<S> rounded(std::move(q));
  return {rounded, f - rounded};
}

/// Largest coefficient modulus squared; exact.
template <typename S>
Rational max_coeff_modulus2(const Poly<S>& f) {
  Rational best(0);
  for (const auto& v : f.coeffs()) {
    Rational m = ScalarTraits<S>::modulus2(v);
    if (m > best)
      best = m;
  }
  return best;
}

} // namespace intcheb

#endif // INTCHEB_POLY_HPP
