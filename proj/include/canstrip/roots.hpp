#pragma once

#include "canstrip/bigfloat.hpp"
#include "canstrip/polynomial.hpp"

#include <map>
#include <optional>
#include <vector>

namespace canstrip {

/// One root of the deflated polynomial with a certified inclusion radius:
/// the disk of that radius around (re, im) contains exactly `multiplicity`
/// roots (counting multiplicity; > 1 only for exactly known rational roots,
/// whose radius is zero).
struct CertifiedRoot {
  BigFloat re;
  BigFloat im;
  BigFloat radius;
  std::optional<Rat> exact_root;  ///< the root is exactly this rational
  std::optional<Rat> exact_re;    ///< real part is exactly this rational
  bool real_exact = false;        ///< imaginary part is exactly zero
  int multiplicity = 1;

  /// Real-part uncertainty: 0 when the real part is exactly known.
  BigFloat re_error() const;
};

struct RootAnalysis {
  int input_degree = 0;
  int multiplicity_at_minus_one = 0;
  int deflated_degree = 0;  ///< input_degree - multiplicity_at_minus_one
  /// Roots of the deflated polynomial; multiplicities sum to deflated_degree.
  std::vector<CertifiedRoot> roots;
  BigFloat max_real_part;   ///< max over roots, and -1 when deflation happened
  BigFloat max_real_error;
  bool max_is_exact = false;            ///< max attained at an exactly known real part
  std::optional<Rat> max_exact_value;   ///< its exact value, when max_is_exact
  mpfr_prec_t precision = 128;          ///< final working precision
};

/// Exactly divides out each candidate while it remains a root.
/// Returns the fully deflated polynomial and candidate -> multiplicity.
std::pair<ExactPolynomial, std::map<Rat, int>> deflate_rational_roots(
    const ExactPolynomial& p, const std::vector<Rat>& candidates = {Rat(-1)});

struct SolveOptions {
  double target_error = 1e-10;
  /// Serre symmetry centre -r/2 of the root set, when the caller has verified
  /// the polynomial identity p(t) = +-p(-2c - t). Real parts certified to lie
  /// on the centre line are snapped onto it exactly.
  std::optional<Rat> symmetry_center;
  mpfr_prec_t max_precision = 1000000;
};

/// All complex roots with certified error radii: exact deflation at -1 (and
/// at rational roots discovered along the way), then Aberth-Ehrlich
/// simultaneous iteration with doubling working precision until the
/// Weierstrass inclusion disks are pairwise disjoint and below the target
/// radius, cross-checked by agreement between precision p and 2p.
RootAnalysis solve(const ExactPolynomial& p, const SolveOptions& opts = {});
RootAnalysis solve(const ExactPolynomial& p, double target_error);

/// Maximum over roots of the distance to the nearest candidate under the
/// reflection a |-> -r - conj(a); a cheap independent sanity bound on the
/// computed root set.
BigFloat symmetry_residual(const RootAnalysis& analysis, int index_r);

}  // namespace canstrip
