#pragma once

#include "canstrip/polynomial.hpp"
#include "canstrip/rational.hpp"

#include <mpfr.h>

namespace canstrip {

/// Moduli space of rank-2 bundles with fixed odd-degree determinant on a
/// genus-g curve: dimension 3g-3, Picard rank 1, index 2.
struct ModuliDescriptor {
  int genus;

  explicit ModuliDescriptor(int g);
  int dimension() const { return 3 * genus - 3; }
  int index_r() const { return 2; }
};

/// dim H^0(M, Theta^k) via the determinant form: 2^g det M / prod_{j<=g}(2j)!
/// where row 0 of the g x g matrix is all ones and row r >= 1 has entries
/// (k+1+r)^(2s+2) - (k+1-r)^(2s+2). The determinant is computed fraction-free
/// over exact integers; the trailing division must be exact.
Int verlinde_det(int g, long k);

/// Same dimension via the trigonometric sum
/// (k+1)^(g-1) sum_{j=1}^{2k+1} (-1)^(j-1) / sin^(2g-2)(j pi / (2k+2)),
/// evaluated in MPFR at precision_bits and rounded to the nearest integer.
/// The result must sit within 2^(-precision_bits/4) of an integer; this is
/// the independent cross-check for verlinde_det.
Int verlinde_trig(int g, long k, mpfr_prec_t precision_bits);

/// Working precision heuristic: 64 + 4 g log2(k+2) bits.
mpfr_prec_t default_trig_precision(int g, long k);

/// Hilbert polynomial of (M, Theta): interpolates degree 3g-3 through the
/// values at k = 0..3g-3 and verifies k = 3g-2, 3g-1 as surplus points,
/// consuming exactly 3g values in total.
ExactPolynomial hilbert_polynomial(int g);

}  // namespace canstrip
