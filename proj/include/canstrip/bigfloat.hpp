#pragma once

#include "canstrip/rational.hpp"

#include <mpfr.h>

#include <string>
#include <utility>

namespace canstrip {

/// RAII value type over mpfr_t. Every value carries its own precision;
/// arithmetic allocates the result at the larger operand precision and
/// rounds to nearest. Deterministic: no global or thread-local state.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); }  // NaN
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, 2);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, o.precision());
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat from(double x, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
  }
  static BigFloat from(long x, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }
  static BigFloat from(const Int& n, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_z(r.v_, n.get_mpz_t(), MPFR_RNDN);
    return r;
  }
  static BigFloat from(const Rat& q, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
  }
  static BigFloat zero(mpfr_prec_t prec) { return from(0L, prec); }
  static BigFloat pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// x = mantissa * 2^exp with |x| in [2^(exp-1), 2^exp); 0 for zero.
  mpfr_exp_t exponent() const { return is_zero() ? 0 : mpfr_get_exp(v_); }

  /// Decimal string, %.{digits}Rg format (shortest faithful within the
  /// requested significant digits, "0" and "-1" come out bare).
  std::string to_decimal(int significant_digits) const;

  /// Nearest integer; if distance != nullptr, |x - nearest| at this precision.
  Int round_to_integer(BigFloat* distance = nullptr) const;

  friend BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

#define CANSTRIP_BF_BINOP(op, fn)                                    \
  friend BigFloat operator op(const BigFloat& a, const BigFloat& b) { \
    BigFloat r(std::max(a.precision(), b.precision()));              \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                 \
    return r;                                                        \
  }                                                                  \
  friend BigFloat operator op(const BigFloat& a, long b) {           \
    BigFloat r(a.precision());                                       \
    fn##_si(r.v_, a.v_, b, MPFR_RNDN);                               \
    return r;                                                        \
  }
  CANSTRIP_BF_BINOP(+, mpfr_add)
  CANSTRIP_BF_BINOP(-, mpfr_sub)
  CANSTRIP_BF_BINOP(*, mpfr_mul)
  CANSTRIP_BF_BINOP(/, mpfr_div)
#undef CANSTRIP_BF_BINOP

  BigFloat& operator+=(const BigFloat& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator-=(const BigFloat& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator*=(const BigFloat& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator/=(const BigFloat& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_); }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !mpfr_equal_p(a.v_, b.v_); }

  friend BigFloat abs(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat sqrt(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat sin(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_sin(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat cos(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_cos(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat pow_ui(const BigFloat& a, unsigned long e) {
    BigFloat r(a.precision());
    mpfr_pow_ui(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }
  /// 2^e as an exact BigFloat (for thresholds).
  static BigFloat exp2(long e, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }
  friend BigFloat max(const BigFloat& a, const BigFloat& b) { return a >= b ? a : b; }
  friend BigFloat min(const BigFloat& a, const BigFloat& b) { return a <= b ? a : b; }

 private:
  mpfr_t v_;
};

/// Complex value over BigFloat (MPFR has no complex layer without MPC).
struct BigComplex {
  BigFloat re, im;

  explicit BigComplex(mpfr_prec_t prec = 128)
      : re(BigFloat::zero(prec)), im(BigFloat::zero(prec)) {}
  BigComplex(BigFloat real, BigFloat imag) : re(std::move(real)), im(std::move(imag)) {}

  mpfr_prec_t precision() const { return std::max(re.precision(), im.precision()); }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend BigComplex conj(const BigComplex& a) { return {a.re, -a.im}; }
  friend BigFloat abs(const BigComplex& a) {
    BigFloat r(a.precision());
    mpfr_hypot(r.raw(), a.re.raw(), a.im.raw(), MPFR_RNDN);
    return r;
  }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

}  // namespace canstrip
