#include "canstrip/hypotheses.hpp"

#include "canstrip/errors.hpp"

#include <optional>
#include <string>
#include <vector>

namespace canstrip {

namespace {

struct RealPart {
  std::optional<Rat> exact;  // exactly known real part
  BigFloat approx;
  BigFloat error;  // zero when exact
};

/// min(x - lo, hi - x): positive strictly inside, zero on the boundary,
/// negative outside with magnitude = distance to the nearest boundary.
BigFloat signed_margin(const RealPart& x, const Rat& lo, const Rat& hi, mpfr_prec_t P) {
  const BigFloat lof = BigFloat::from(lo, P);
  const BigFloat hif = BigFloat::from(hi, P);
  return min(x.approx - lof, hif - x.approx);
}

enum class Membership { In, Out, Straddle };

Membership interval_membership(const RealPart& x, const Rat& lo, const Rat& hi) {
  if (x.exact) {
    return (*x.exact >= lo && *x.exact <= hi) ? Membership::In : Membership::Out;
  }
  const mpfr_prec_t P = x.approx.precision();
  const BigFloat lof = BigFloat::from(lo, P);
  const BigFloat hif = BigFloat::from(hi, P);
  // the interval endpoints converted to floats carry up to 1/2 ulp of error;
  // widen the uncertainty accordingly
  const BigFloat slack = x.error + (abs(lof) + abs(hif) + BigFloat::from(1L, P)) *
                                       BigFloat::exp2(2 - static_cast<long>(P), P);
  if (x.approx - slack > lof && x.approx + slack < hif) return Membership::In;
  if (x.approx + slack < lof || x.approx - slack > hif) return Membership::Out;
  return Membership::Straddle;
}

}  // namespace

HypothesisVerdict classify(const RootAnalysis& analysis, int dimension, int index_r) {
  if (dimension < 1) throw Error("classification needs dimension >= 1");

  const mpfr_prec_t P = analysis.precision;
  const Rat r(index_r);
  const Rat dim1(dimension + 1);

  HypothesisVerdict v;
  if (index_r >= 0) {
    v.cs_lo = -r;
    v.cs_hi = 0;
    v.ncs_lo = -r + r / dim1;
    v.ncs_hi = -r / dim1;
  } else {
    // mirror of the r >= 0 case; both intervals stay symmetric about -r/2
    // and reduce to the original strips at r = -1
    v.cs_lo = 0;
    v.cs_hi = -r;
    v.ncs_lo = -r / dim1;
    v.ncs_hi = -r + r / dim1;
  }
  v.line_center = -r / Rat(2);

  std::vector<RealPart> parts;
  if (analysis.multiplicity_at_minus_one > 0)
    parts.push_back({Rat(-1), BigFloat::from(-1L, P), BigFloat::zero(P)});
  for (const CertifiedRoot& root : analysis.roots) {
    RealPart x{std::nullopt, root.re, root.re_error()};
    if (root.exact_root)
      x.exact = root.exact_root;
    else if (root.exact_re)
      x.exact = root.exact_re;
    parts.push_back(std::move(x));
  }

  auto strip_verdict = [&](const Rat& lo, const Rat& hi, bool& pass, BigFloat& margin,
                           const char* name) {
    pass = true;
    bool first = true;
    for (const RealPart& x : parts) {
      switch (interval_membership(x, lo, hi)) {
        case Membership::In: break;
        case Membership::Out: pass = false; break;
        case Membership::Straddle:
          throw Indeterminate(std::string(name) +
                              ": a root sits within its error radius of a boundary");
      }
      BigFloat m = signed_margin(x, lo, hi, P);
      if (first || m < margin) {
        margin = m;
        first = false;
      }
    }
  };
  strip_verdict(v.cs_lo, v.cs_hi, v.strip, v.margin_cs, "canonical strip");
  strip_verdict(v.ncs_lo, v.ncs_hi, v.narrow_strip, v.margin_ncs, "narrow canonical strip");

  // canonical line: |alpha - (-r/2)| <= error radius for every root
  {
    const BigFloat center = BigFloat::from(v.line_center, P);
    v.canonical_line = true;
    bool first = true;
    for (const RealPart& x : parts) {
      BigFloat dist(P);
      bool on_line;
      if (x.exact) {
        on_line = (*x.exact == v.line_center);
        dist = abs(BigFloat::from(*x.exact - v.line_center, P));
      } else {
        dist = abs(x.approx - center);
        on_line = dist <= x.error;
      }
      if (!on_line) v.canonical_line = false;
      BigFloat m = x.error - dist;
      if (first || m < v.margin_cl) {
        v.margin_cl = m;
        first = false;
      }
    }
  }

  // (CL) => (NCS) => (CS) must hold on anything we emit
  if ((v.canonical_line && !v.narrow_strip) || (v.narrow_strip && !v.strip))
    throw Error("hypothesis implication chain violated; solver output inconsistent");
  return v;
}

}  // namespace canstrip
