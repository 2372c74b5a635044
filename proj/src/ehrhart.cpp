#include "canstrip/ehrhart.hpp"

#include "canstrip/errors.hpp"

#include <functional>

namespace canstrip {

namespace {

/// Scans the integer bounding box of dilate * P, testing each point against
/// every facet inequality <n, x> >= dilate * b (strictly when interior).
Int count_points(const LatticePolytope& p, long dilate, bool interior) {
  if (dilate < 0) throw Error("dilate must be >= 0");
  if (dilate == 0) return interior ? Int(0) : Int(1);  // only the origin

  const int d = p.dimension;
  std::vector<Int> lo(static_cast<size_t>(d)), hi(static_cast<size_t>(d));
  for (int j = 0; j < d; ++j) {
    Int mn = p.vertices[0][static_cast<size_t>(j)], mx = mn;
    for (const auto& v : p.vertices) {
      mn = std::min(mn, v[static_cast<size_t>(j)]);
      mx = std::max(mx, v[static_cast<size_t>(j)]);
    }
    lo[static_cast<size_t>(j)] = mn * dilate;
    hi[static_cast<size_t>(j)] = mx * dilate;
  }

  std::vector<Int> scaled_offsets;
  scaled_offsets.reserve(p.facets.size());
  for (const auto& f : p.facets) scaled_offsets.push_back(f.offset * dilate);

  Int count(0);
  std::vector<Int> x(static_cast<size_t>(d));
  std::function<void(int)> scan = [&](int coord) {
    if (coord == d) {
      for (size_t f = 0; f < p.facets.size(); ++f) {
        Int s(0);
        for (int j = 0; j < d; ++j)
          s += p.facets[f].normal[static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
        if (interior ? !(s > scaled_offsets[f]) : (s < scaled_offsets[f])) return;
      }
      ++count;
      return;
    }
    for (Int v = lo[static_cast<size_t>(coord)]; v <= hi[static_cast<size_t>(coord)]; ++v) {
      x[static_cast<size_t>(coord)] = v;
      scan(coord + 1);
    }
  };
  scan(0);
  return count;
}

}  // namespace

Int count_lattice_points(const LatticePolytope& p, long dilate) {
  return count_points(p, dilate, false);
}

Int count_interior_points(const LatticePolytope& p, long dilate) {
  return count_points(p, dilate, true);
}

ExactPolynomial ehrhart_polynomial(const LatticePolytope& p) {
  const int d = p.dimension;
  ValueTable table;
  table.offset = 0;
  for (long t = 0; t <= d + 1; ++t) table.values.push_back(count_lattice_points(p, t));
  return interpolate(table, d);
}

EhrhartAnalysis analyze_polytope(const std::string& name, const LatticePolytope& p,
                                 double target_error) {
  EhrhartAnalysis a;
  a.name = name;
  a.dimension = p.dimension;
  a.ehrhart = ehrhart_polynomial(p);
  SolveOptions opts;
  opts.target_error = target_error;
  opts.symmetry_center = Rat(-1, 2);  // anticanonical polarisation, r = 1
  a.roots = solve(a.ehrhart, opts);
  a.verdict = classify(a.roots, p.dimension, 1);
  return a;
}

ScanResult scan_maximum(const std::vector<std::pair<std::string, LatticePolytope>>& polytopes,
                        double target_error) {
  if (polytopes.empty()) throw Error("scan over an empty polytope list");
  const int d = polytopes.front().second.dimension;
  for (const auto& [name, p] : polytopes)
    if (p.dimension != d)
      throw DimensionMismatch("scan requires polytopes of one dimension");

  ScanResult r;
  bool first = true;
  for (const auto& [name, p] : polytopes) {
    EhrhartAnalysis a = analyze_polytope(name, p, target_error);
    if (first || a.roots.max_real_part > r.max_real_part) {
      r.max_real_part = a.roots.max_real_part;
      r.argmax = name;
      first = false;
    }
    r.entries.push_back(std::move(a));
  }
  return r;
}

}  // namespace canstrip
