#ifndef INTCHEB_BIGFLOAT_HPP
#define INTCHEB_BIGFLOAT_HPP

#include <mpfr.h>

#include <algorithm>
#include <cstdio>
#include <string>
#include <utility>

#include "intcheb/scalar.hpp"

namespace intcheb {

/// Owning MPFR value with an explicit binary precision.
///
/// Binary operations round to the larger precision of the two operands, so a
/// computation seeded at p bits stays at p bits without any global state.
class BigFloat {
public:
  explicit BigFloat(mpfr_prec_t bits = 128) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(double x, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  BigFloat(long x, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  BigFloat(int x, mpfr_prec_t bits) : BigFloat(static_cast<long>(x), bits) {}
  BigFloat(const Rational& q, mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, q.get_mpq_t(), rnd);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Exact rational value of this binary float.
  Rational to_rational() const {
    if (mpfr_zero_p(v_))
      return Rational(0);
    Integer m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
    Rational out(m);
    if (e >= 0)
      mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    else
      mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    return out;
  }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  /// this = this * x + y with a single rounding, in place.
  BigFloat& mul_add(const BigFloat& x, const BigFloat& y) {
    mpfr_fma(v_, v_, x.v_, y.v_, MPFR_RNDN);
    return *this;
  }
  void set_zero() { mpfr_set_zero(v_, 1); }
  void assign(const BigFloat& o) { mpfr_set(v_, o.v_, MPFR_RNDN); }

  BigFloat& operator+=(const BigFloat& o) { return apply(mpfr_add, o); }
  BigFloat& operator-=(const BigFloat& o) { return apply(mpfr_sub, o); }
  BigFloat& operator*=(const BigFloat& o) { return apply(mpfr_mul, o); }
  BigFloat& operator/=(const BigFloat& o) { return apply(mpfr_div, o); }

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  friend BigFloat operator-(BigFloat a) {
    mpfr_neg(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_); }

  friend BigFloat abs(BigFloat a) {
    mpfr_abs(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend BigFloat sqrt(BigFloat a) {
    mpfr_sqrt(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend BigFloat log(BigFloat a) {
    mpfr_log(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend BigFloat exp(BigFloat a) {
    mpfr_exp(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend BigFloat cos(BigFloat a) {
    mpfr_cos(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend BigFloat sin(BigFloat a) {
    mpfr_sin(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend BigFloat pow(BigFloat a, const BigFloat& e) {
    mpfr_pow(a.v_, a.v_, e.v_, MPFR_RNDN);
    return a;
  }
  friend BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

  static BigFloat pi(mpfr_prec_t bits) {
    BigFloat out(bits);
    mpfr_const_pi(out.v_, MPFR_RNDN);
    return out;
  }
  /// Unit roundoff 2^(1 - bits) at this precision.
  static BigFloat epsilon(mpfr_prec_t bits) {
    BigFloat out(1L, bits);
    mpfr_mul_2si(out.v_, out.v_, 1 - static_cast<long>(bits), MPFR_RNDN);
    return out;
  }

private:
  template <typename Op>
  BigFloat& apply(Op op, const BigFloat& o) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_))
      mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    op(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  mpfr_t v_;
};

/// Decimal rendering with `digits` significant digits (scientific when tiny or huge).
inline std::string format_decimal(const Rational& q, int digits = 20) {
  if (sgn(q) == 0)
    return "0";
  BigFloat v(q, static_cast<mpfr_prec_t>(digits * 4 + 16));
  char buf[256];
  mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, v.get());
  return buf;
}

inline std::string format_decimal(const BigFloat& v, int digits = 20) {
  char buf[256];
  mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, v.get());
  return buf;
}

/// Complex pair of BigFloats, used only for sampling values on circles.
struct BigComplex {
  BigFloat re;
  BigFloat im;

  BigComplex(mpfr_prec_t bits) : re(bits), im(bits) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  BigComplex(const Gaussian& g, mpfr_prec_t bits) : re(g.re, bits), im(g.im, bits) {}

  BigComplex& operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  BigFloat modulus() const { return sqrt(re * re + im * im); }
};

} // namespace intcheb

#endif // INTCHEB_BIGFLOAT_HPP
