#pragma once

#include "canstrip/bigfloat.hpp"
#include "canstrip/rational.hpp"
#include "canstrip/roots.hpp"

namespace canstrip {

/// Classification of a root set against the canonical line (all real parts
/// at the Serre symmetry centre -r/2), the narrow canonical strip
/// [-r + r/(dim+1), -r/(dim+1)] and the canonical strip [-r, 0] (intervals
/// mirrored for r < 0; all intervals closed). pass(CL) => pass(NCS) =>
/// pass(CS) holds on every emitted verdict.
struct HypothesisVerdict {
  bool canonical_line = false;
  bool narrow_strip = false;
  bool strip = false;
  /// Signed distances: negative means violated, magnitude is the distance
  /// from the nearest relevant boundary to the offending real part.
  BigFloat margin_cl;
  BigFloat margin_ncs;
  BigFloat margin_cs;
  /// Evaluated interval endpoints and the symmetry centre, exact.
  Rat ncs_lo, ncs_hi;
  Rat cs_lo, cs_hi;
  Rat line_center;
};

/// Evaluates every real part (including the exact root -1 with its
/// multiplicity) against the three conditions. Throws Indeterminate when a
/// real part sits within its certified error radius of a strip boundary
/// without being exactly known; callers should re-solve with a smaller
/// target error.
HypothesisVerdict classify(const RootAnalysis& analysis, int dimension, int index_r);

}  // namespace canstrip
