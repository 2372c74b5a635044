#pragma once

#include "canstrip/hypotheses.hpp"
#include "canstrip/polynomial.hpp"
#include "canstrip/polytope.hpp"
#include "canstrip/roots.hpp"

#include <string>
#include <vector>

namespace canstrip {

/// Exact number of lattice points in dilate * P (boundary included), by
/// bounding-box scan with exact half-space membership tests.
Int count_lattice_points(const LatticePolytope& p, long dilate);

/// Strict-inequality variant: interior points of dilate * P.
Int count_interior_points(const LatticePolytope& p, long dilate);

/// Interpolates the degree-d Ehrhart polynomial from the counts at dilates
/// 0..d and verifies dilate d+1 as a surplus point.
ExactPolynomial ehrhart_polynomial(const LatticePolytope& p);

/// Full pipeline for one polytope under the anticanonical polarisation
/// (index r = 1): Ehrhart polynomial, certified roots, verdict.
struct EhrhartAnalysis {
  std::string name;
  int dimension = 0;
  ExactPolynomial ehrhart;
  RootAnalysis roots;
  HypothesisVerdict verdict;
};

EhrhartAnalysis analyze_polytope(const std::string& name, const LatticePolytope& p,
                                 double target_error = 1e-10);

struct ScanResult {
  BigFloat max_real_part;
  std::string argmax;
  std::vector<EhrhartAnalysis> entries;
};

/// Runs the pipeline on every polytope (all of one dimension) and returns
/// the maximum max-real-part together with which polytope attains it.
ScanResult scan_maximum(const std::vector<std::pair<std::string, LatticePolytope>>& polytopes,
                        double target_error = 1e-10);

}  // namespace canstrip
