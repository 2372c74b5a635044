#include "canstrip/verlinde.hpp"

#include "canstrip/bigfloat.hpp"
#include "canstrip/errors.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace canstrip {

ModuliDescriptor::ModuliDescriptor(int g) : genus(g) {
  if (g < 2) throw InvalidGenus("genus must be >= 2, got " + std::to_string(g));
}

namespace {

/// Determinant by fraction-free Bareiss elimination with row pivoting.
/// All intermediates are exact integers (minors of the input).
Int bareiss_determinant(std::vector<std::vector<Int>> m) {
  const size_t n = m.size();
  if (n == 0) return Int(1);
  Int prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return Int(0);
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

Int pow_int(long base, unsigned long e) {
  Int b(base), r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

Int verlinde_det(int g, long k) {
  if (g < 2) throw InvalidGenus("genus must be >= 2, got " + std::to_string(g));
  if (k < 0) throw InvalidGenus("level must be >= 0, got " + std::to_string(k));

  const size_t n = static_cast<size_t>(g);
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
  for (size_t s = 0; s < n; ++s) m[0][s] = 1;
  for (size_t r = 1; r < n; ++r) {
    const long plus = k + 1 + static_cast<long>(r);
    const long minus = k + 1 - static_cast<long>(r);
    for (size_t s = 0; s < n; ++s) {
      const unsigned long e = 2 * static_cast<unsigned long>(s) + 2;
      m[r][s] = pow_int(plus, e) - pow_int(minus, e);
    }
  }

  Int det = bareiss_determinant(std::move(m));
  Int numerator;
  mpz_mul_2exp(numerator.get_mpz_t(), det.get_mpz_t(), static_cast<mp_bitcnt_t>(g));
  Int denom(1);
  for (int j = 1; j <= g; ++j) denom *= factorial(2 * static_cast<unsigned long>(j));

  Int q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), numerator.get_mpz_t(), denom.get_mpz_t());
  if (rem != 0)
    throw NonIntegerResult("determinant form not divisible by prod (2j)! at g=" +
                           std::to_string(g) + ", k=" + std::to_string(k));
  return q;
}

mpfr_prec_t default_trig_precision(int g, long k) {
  const double bits = 64.0 + 4.0 * g * std::log2(static_cast<double>(k) + 2.0);
  return static_cast<mpfr_prec_t>(bits) + 1;
}

Int verlinde_trig(int g, long k, mpfr_prec_t precision_bits) {
  if (g < 2) throw InvalidGenus("genus must be >= 2, got " + std::to_string(g));
  if (k < 0) throw InvalidGenus("level must be >= 0, got " + std::to_string(k));
  if (precision_bits < 64) throw PrecisionExhausted("precision must be >= 64 bits");

  const mpfr_prec_t P = precision_bits;
  const unsigned long exp_sin = 2 * static_cast<unsigned long>(g) - 2;
  const BigFloat pi = BigFloat::pi(P);
  const BigFloat denom_angle = BigFloat::from(2 * k + 2, P);

  BigFloat sum = BigFloat::zero(P);
  for (long j = 1; j <= 2 * k + 1; ++j) {
    BigFloat angle = pi * BigFloat::from(j, P) / denom_angle;
    BigFloat term = BigFloat::from(1L, P) / pow_ui(sin(angle), exp_sin);
    if (j % 2 == 0)
      sum -= term;
    else
      sum += term;
  }
  Int scale = pow_int(k + 1, static_cast<unsigned long>(g - 1));
  BigFloat value = sum * BigFloat::from(scale, P);

  // once the ulp of the result reaches the tolerance the distance test below
  // is vacuous; the requested precision simply does not resolve the integer
  if (value.exponent() > static_cast<long>(P) - static_cast<long>(precision_bits / 4))
    throw PrecisionExhausted("result magnitude exceeds the requested precision (g=" +
                             std::to_string(g) + ", k=" + std::to_string(k) + ")");

  BigFloat dist(P);
  Int nearest = value.round_to_integer(&dist);
  if (!(dist < BigFloat::exp2(-static_cast<long>(precision_bits / 4), P)))
    throw PrecisionExhausted("trig sum not near an integer at " +
                             std::to_string(precision_bits) + " bits (g=" +
                             std::to_string(g) + ", k=" + std::to_string(k) + ")");
  return nearest;
}

ExactPolynomial hilbert_polynomial(int g) {
  const ModuliDescriptor moduli(g);
  const int dim = moduli.dimension();
  ValueTable table;
  table.offset = 0;
  table.values.reserve(static_cast<size_t>(3 * g));
  for (long k = 0; k < 3 * g; ++k) table.values.push_back(verlinde_det(g, k));
  return interpolate(table, dim);
}

}  // namespace canstrip
