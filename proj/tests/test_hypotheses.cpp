#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "canstrip/constructions.hpp"
#include "canstrip/errors.hpp"
#include "canstrip/hypotheses.hpp"
#include "canstrip/roots.hpp"
#include "canstrip/verlinde.hpp"

#include <cmath>

using namespace canstrip;

namespace {

RootAnalysis analysis_for(int g, ConstructionKind kind, double target = 1e-10) {
  PolarisedInvariant inv = apply(kind, g);
  SolveOptions opts;
  opts.target_error = target;
  Rat c(-inv.index_r, 2);
  c.canonicalize();
  opts.symmetry_center = c;
  return solve(inv.hilbert, opts);
}

CertifiedRoot exact_root(const Rat& value, int mult = 1) {
  CertifiedRoot r{BigFloat::from(value, 128), BigFloat::zero(128), BigFloat::zero(128),
                  value, value, true, mult};
  return r;
}

}  // namespace

TEST_CASE("synthetic exact verdicts at r = 0") {
  RootAnalysis a;
  a.input_degree = 1;
  a.deflated_degree = 1;
  a.roots.push_back(exact_root(Rat(0)));
  HypothesisVerdict v = classify(a, 3, 0);
  CHECK(v.canonical_line);
  CHECK(v.narrow_strip);
  CHECK(v.strip);
  CHECK(v.margin_cs.to_double() == 0.0);

  RootAnalysis b = a;
  b.roots[0] = exact_root(Rat(1, 10));
  HypothesisVerdict w = classify(b, 3, 0);
  CHECK_FALSE(w.canonical_line);
  CHECK_FALSE(w.narrow_strip);
  CHECK_FALSE(w.strip);
  CHECK(std::fabs(w.margin_cs.to_double() + 0.1) < 1e-15);
}

TEST_CASE("boundary membership counts as pass") {
  RootAnalysis a;
  a.input_degree = 2;
  a.deflated_degree = 2;
  a.roots.push_back(exact_root(Rat(-1, 4)));
  a.roots.push_back(exact_root(Rat(-3, 4)));
  // NCS bounds at r=1, dim 3 are [-3/4, -1/4]
  HypothesisVerdict v = classify(a, 3, 1);
  CHECK(v.narrow_strip);
  CHECK(v.strip);
  CHECK_FALSE(v.canonical_line);
  CHECK(v.margin_ncs.to_double() == 0.0);
  CHECK(v.ncs_lo == Rat(-3, 4));
  CHECK(v.ncs_hi == Rat(-1, 4));
}

TEST_CASE("an uncertain root near a boundary refuses to guess") {
  RootAnalysis a;
  a.input_degree = 1;
  a.deflated_degree = 1;
  CertifiedRoot r{BigFloat::from(1e-14, 128), BigFloat::zero(128),
                  BigFloat::from(1e-13, 128), std::nullopt, std::nullopt, false, 1};
  a.roots.push_back(r);
  CHECK_THROWS_AS(classify(a, 3, 0), Indeterminate);
}

TEST_CASE("moduli g=8: narrow strip fails, strip holds") {
  RootAnalysis a = analysis_for(8, ConstructionKind::Moduli);
  CHECK(std::fabs(a.max_real_part.to_double() + 0.0500409722) < 1e-8);
  HypothesisVerdict v = classify(a, 21, 2);
  CHECK_FALSE(v.narrow_strip);
  CHECK(v.strip);
  CHECK(v.ncs_hi == Rat(-1, 11));
  CHECK(v.margin_ncs.to_double() < 0);
  CHECK(v.margin_cs.to_double() > 0);
  // the NCS violation distance: max real part minus the upper bound
  CHECK(std::fabs(v.margin_ncs.to_double() + (a.max_real_part.to_double() - (-2.0 / 22))) < 1e-9);
}

TEST_CASE("moduli g=10: strip fails") {
  RootAnalysis a = analysis_for(10, ConstructionKind::Moduli);
  CHECK(std::fabs(a.max_real_part.to_double() - 0.0214869361) < 1e-8);
  HypothesisVerdict v = classify(a, 27, 2);
  CHECK_FALSE(v.strip);
  CHECK_FALSE(v.narrow_strip);
  // symmetric violations: the excess over both boundaries agrees
  double max_re = a.max_real_part.to_double();
  double min_re = max_re;
  auto upd = [&](double x) { min_re = std::min(min_re, x); };
  for (const CertifiedRoot& r : a.roots) upd(r.re.to_double());
  upd(-1.0);
  CHECK(std::fabs((max_re - 0.0) - (-2.0 - min_re)) < 1e-9);
}

TEST_CASE("canonical line for the anticanonical section flips at g=11") {
  RootAnalysis g10 = analysis_for(10, ConstructionKind::CY1);
  HypothesisVerdict v10 = classify(g10, 26, 0);
  CHECK(v10.canonical_line);
  CHECK(v10.narrow_strip);
  CHECK(v10.strip);

  RootAnalysis g11 = analysis_for(11, ConstructionKind::CY1);
  HypothesisVerdict v11 = classify(g11, 29, 0);
  CHECK_FALSE(v11.canonical_line);
  CHECK(std::fabs(g11.max_real_part.to_double() - 0.0614369091) < 1e-8);
}

TEST_CASE("r=0 gives identical flags and the implication chain holds") {
  for (int g : {2, 6, 10, 11}) {
    ExactPolynomial h = hilbert_polynomial(g);
    for (ConstructionKind kind : kAllConstructions) {
      PolarisedInvariant inv = apply(kind, g, h);
      SolveOptions opts;
      Rat c(-inv.index_r, 2);
      c.canonicalize();
      opts.symmetry_center = c;
      RootAnalysis a = solve(inv.hilbert, opts);
      HypothesisVerdict v = classify(a, inv.dimension, inv.index_r);
      if (v.canonical_line) CHECK(v.narrow_strip);
      if (v.narrow_strip) CHECK(v.strip);
      if (inv.index_r == 0) {
        CHECK(v.canonical_line == v.narrow_strip);
        CHECK(v.narrow_strip == v.strip);
      }
    }
  }
}

TEST_CASE("negative index mirrors the strip") {
  RootAnalysis a;
  a.input_degree = 1;
  a.deflated_degree = 1;
  a.roots.push_back(exact_root(Rat(1, 2)));
  HypothesisVerdict v = classify(a, 3, -1);  // strip [0, 1], narrow [1/4, 3/4]
  CHECK(v.strip);
  CHECK(v.narrow_strip);
  CHECK(v.canonical_line);  // centre is 1/2
  CHECK(v.cs_lo == Rat(0));
  CHECK(v.cs_hi == Rat(1));
  CHECK(v.ncs_lo == Rat(1, 4));
  CHECK(v.ncs_hi == Rat(3, 4));
}

TEST_CASE("the deflated root at -1 participates") {
  RootAnalysis a = analysis_for(2, ConstructionKind::Moduli);
  // all real parts sit at -1, so even CL holds at r=2
  HypothesisVerdict v = classify(a, 3, 2);
  CHECK(v.canonical_line);
  CHECK(v.narrow_strip);
  CHECK(v.strip);
  CHECK(v.line_center == Rat(-1));
}
