#include "canstrip/bigfloat.hpp"

#include <cstdio>
#include <vector>

namespace canstrip {

std::string BigFloat::to_decimal(int significant_digits) const {
  const int n = mpfr_snprintf(nullptr, 0, "%.*Rg", significant_digits, v_);
  std::vector<char> buf(static_cast<size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", significant_digits, v_);
  return std::string(buf.data());
}

Int BigFloat::round_to_integer(BigFloat* distance) const {
  BigFloat nearest(precision());
  mpfr_rint(nearest.v_, v_, MPFR_RNDN);
  Int z;
  mpfr_get_z(z.get_mpz_t(), nearest.v_, MPFR_RNDN);
  if (distance != nullptr) {
    // |x - z| exactly: give the difference enough precision to be exact.
    BigFloat zf = BigFloat::from(z, std::max<mpfr_prec_t>(precision(), bit_length(z) + 2));
    BigFloat d(zf.precision());
    mpfr_sub(d.raw(), v_, zf.raw(), MPFR_RNDN);
    mpfr_abs(d.raw(), d.raw(), MPFR_RNDN);
    *distance = d;
  }
  return z;
}

}  // namespace canstrip
