#include "canstrip/polytope.hpp"

#include "canstrip/errors.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace canstrip {

namespace {

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<Int> sub(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

std::vector<Int> cross3(const std::vector<Int>& a, const std::vector<Int>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

void make_primitive(std::vector<Int>& v) {
  Int g(0);
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (Int& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

/// Exact affine rank of the vertex set (rank of differences to vertex 0).
int affine_rank(const std::vector<std::vector<Int>>& vertices, int d) {
  std::vector<std::vector<Rat>> rows;
  for (size_t i = 1; i < vertices.size(); ++i) {
    std::vector<Int> diff = sub(vertices[i], vertices[0]);
    std::vector<Rat> row(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) row[static_cast<size_t>(j)] = Rat(diff[static_cast<size_t>(j)]);
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (int col = 0; col < d && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (size_t r = static_cast<size_t>(rank); r < rows.size(); ++r)
      if (rows[r][static_cast<size_t>(col)] != 0) {
        piv = static_cast<int>(r);
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(piv)]);
    const Rat pivot = rows[static_cast<size_t>(rank)][static_cast<size_t>(col)];
    for (size_t r = static_cast<size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][static_cast<size_t>(col)] == 0) continue;
      const Rat f = rows[r][static_cast<size_t>(col)] / pivot;
      for (int j = col; j < d; ++j)
        rows[r][static_cast<size_t>(j)] -= f * rows[static_cast<size_t>(rank)][static_cast<size_t>(j)];
    }
    ++rank;
  }
  return rank;
}

/// All facets of conv(vertices) for d in {1,2,3} by exact support-plane
/// enumeration over (d)-subsets. Normals are inward primitive.
std::vector<LatticePolytope::Facet> support_facets(
    const std::vector<std::vector<Int>>& vertices, int d) {
  std::map<std::vector<Int>, Int> seen;  // inward primitive normal -> offset
  const size_t n = vertices.size();

  auto consider = [&](std::vector<Int> normal, const std::vector<Int>& base) {
    bool zero = true;
    for (const Int& x : normal)
      if (x != 0) zero = false;
    if (zero) return;
    Int c = dot(normal, base);
    bool all_le = true, all_ge = true;
    for (const auto& p : vertices) {
      const Int v = dot(normal, p);
      if (v > c) all_le = false;
      if (v < c) all_ge = false;
    }
    if (all_le && !all_ge) {
      // outward; flip to the inward convention <n,x> >= b
      for (Int& x : normal) x = -x;
      c = -c;
    } else if (!all_ge) {
      return;  // not supporting
    }
    make_primitive(normal);
    // recompute the offset on the primitive normal
    Int b = dot(normal, base);
    auto it = seen.find(normal);
    if (it == seen.end()) seen.emplace(std::move(normal), std::move(b));
  };

  if (d == 1) {
    for (const auto& p : vertices) consider({Int(1)}, p), consider({Int(-1)}, p);
  } else if (d == 2) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) {
        std::vector<Int> e = sub(vertices[j], vertices[i]);
        consider({-e[1], e[0]}, vertices[i]);
      }
  } else {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        for (size_t k = j + 1; k < n; ++k)
          consider(cross3(sub(vertices[j], vertices[i]), sub(vertices[k], vertices[i])),
                   vertices[i]);
  }

  std::vector<LatticePolytope::Facet> out;
  out.reserve(seen.size());
  for (auto& [normal, offset] : seen) out.push_back({normal, offset});
  return out;
}

}  // namespace

LatticePolytope make_polytope(std::vector<std::vector<Int>> vertices,
                              std::vector<LatticePolytope::Facet> facets) {
  if (vertices.empty()) throw NotFullDimensional("no vertices");
  const int d = static_cast<int>(vertices[0].size());
  if (d < 1) throw NotFullDimensional("empty coordinate vectors");
  for (const auto& v : vertices)
    if (static_cast<int>(v.size()) != d)
      throw ParseError("vertices of mixed coordinate dimension");
  if (static_cast<int>(vertices.size()) < d + 1)
    throw NotFullDimensional("need at least " + std::to_string(d + 1) + " vertices");
  if (affine_rank(vertices, d) != d)
    throw NotFullDimensional("affine hull has dimension below " + std::to_string(d));

  LatticePolytope p;
  p.dimension = d;
  p.vertices = std::move(vertices);

  if (!facets.empty()) {
    for (const auto& f : facets) {
      if (static_cast<int>(f.normal.size()) != d)
        throw ParseError("facet normal of wrong dimension");
      for (const auto& v : p.vertices)
        if (dot(f.normal, v) < f.offset)
          throw ParseError("supplied facet inequality excludes a vertex");
    }
    p.facets = std::move(facets);
  } else {
    if (d > 3)
      throw NotFullDimensional(
          "facet enumeration implemented for dimension <= 3; supply facet lines");
    p.facets = support_facets(p.vertices, d);
  }

  // origin strictly interior: <n, 0> = 0 > offset for every inward facet
  for (const auto& f : p.facets)
    if (!(f.offset < 0))
      throw OriginNotInterior("a facet inequality excludes or touches the origin");
  return p;
}

LatticePolytope read_polytope_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open polytope file " + path.string());
  std::vector<std::vector<Int>> vertices;
  std::vector<LatticePolytope::Facet> facets;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first)) continue;  // blank
    const bool is_facet = (first == "facet");
    std::vector<Int> nums;
    if (!is_facet) {
      try {
        nums.emplace_back(first);
      } catch (const std::invalid_argument&) {
        throw ParseError(path.string() + ":" + std::to_string(lineno) +
                         ": expected an integer, got '" + first + "'");
      }
    }
    std::string tok;
    while (ss >> tok) {
      try {
        nums.emplace_back(tok);
      } catch (const std::invalid_argument&) {
        throw ParseError(path.string() + ":" + std::to_string(lineno) +
                         ": expected an integer, got '" + tok + "'");
      }
    }
    if (is_facet) {
      if (nums.size() < 2)
        throw ParseError(path.string() + ":" + std::to_string(lineno) + ": short facet line");
      Int offset = nums.back();
      nums.pop_back();
      facets.push_back({std::move(nums), std::move(offset)});
    } else {
      vertices.push_back(std::move(nums));
    }
  }
  if (vertices.empty())
    throw ParseError(path.string() + ": no vertex lines");
  return make_polytope(std::move(vertices), std::move(facets));
}

}  // namespace canstrip
