#pragma once

#include "canstrip/rational.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace canstrip {

/// Full-dimensional lattice polytope with the origin strictly interior,
/// described by integer vertices and inward facet inequalities
/// <normal, x> >= offset. For dimensions <= 3 the facets are derived from
/// the vertices by exact support-hyperplane enumeration; higher dimensions
/// must supply facets in the input file.
struct LatticePolytope {
  int dimension = 0;
  std::vector<std::vector<Int>> vertices;
  struct Facet {
    std::vector<Int> normal;
    Int offset;
  };
  std::vector<Facet> facets;
};

/// Validates and completes a polytope from raw vertex data (and optional
/// facet inequalities). Throws NotFullDimensional / OriginNotInterior.
LatticePolytope make_polytope(std::vector<std::vector<Int>> vertices,
                              std::vector<LatticePolytope::Facet> facets = {});

/// File format: one vertex per line, space-separated integers; `#` starts a
/// comment; optional `facet n_1 ... n_d b` lines supply inequalities
/// <n, x> >= b for dimensions above 3.
LatticePolytope read_polytope_file(const std::filesystem::path& path);

}  // namespace canstrip
