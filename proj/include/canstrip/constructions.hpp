#pragma once

#include "canstrip/polynomial.hpp"

#include <array>
#include <string>

namespace canstrip {

/// The nine polarised varieties derived from the moduli space: the space
/// itself, two Fano constructions (linear section; double cover branched in
/// 2 Theta) and six Calabi-Yau constructions (anticanonical section, linear
/// section of codimension 2, double cover branched in 4 Theta, cone cut by a
/// cubic, join with a line cut by two quadrics, join with a degree-1 elliptic
/// curve cut by two hyperplanes).
enum class ConstructionKind { Moduli, Fano1, Fano2, CY1, CY2, CY3, CY4, CY5, CY6 };

inline constexpr std::array<ConstructionKind, 9> kAllConstructions = {
    ConstructionKind::Moduli, ConstructionKind::Fano1, ConstructionKind::Fano2,
    ConstructionKind::CY1,    ConstructionKind::CY2,   ConstructionKind::CY3,
    ConstructionKind::CY4,    ConstructionKind::CY5,   ConstructionKind::CY6};

/// Report/column order: Fano1, Fano2, Moduli, CY1..CY6.
inline constexpr std::array<ConstructionKind, 9> kTableOrder = {
    ConstructionKind::Fano1, ConstructionKind::Fano2, ConstructionKind::Moduli,
    ConstructionKind::CY1,   ConstructionKind::CY2,   ConstructionKind::CY3,
    ConstructionKind::CY4,   ConstructionKind::CY5,   ConstructionKind::CY6};

std::string construction_name(ConstructionKind kind);      // "moduli", "fano1", ...
ConstructionKind parse_construction(const std::string& s);  // case-insensitive

/// One monotone polarised variety: dimension, monotone index r
/// (-K = r H numerically) and the Hilbert polynomial of H.
struct PolarisedInvariant {
  ConstructionKind kind;
  int dimension;
  int index_r;
  ExactPolynomial hilbert;
};

/// Dimension of a construction at genus g (the moduli space has 3g-3).
int construction_dimension(ConstructionKind kind, int g);
int construction_index(ConstructionKind kind);

/// Transforms the moduli Hilbert polynomial h into the derived variety's.
/// Writing h_j = shift(h, j) = h(t - j), the combinations are
///   Moduli h;  Fano1 h - h1;  Fano2 h + h1;  CY1 h - h2;  CY2 h - 2h1 + h2;
///   CY3 h + h2;  CY4 h + h1 + h2;  CY5 h + 2h1 + h2;  CY6 h - h1 + h2.
/// The result is checked against the claimed dimension (leading-term
/// cancellation), the Euler characteristic hilbert(0) = chi(O) (1 for the
/// Fano cases, 1 + (-1)^dim for the Calabi-Yau cases) and the Serre symmetry
/// identity hilbert(t) = (-1)^dim hilbert(-t - r); failures throw.
PolarisedInvariant apply(ConstructionKind kind, int g, const ExactPolynomial& h);

/// Convenience: computes hilbert_polynomial(g) internally.
PolarisedInvariant apply(ConstructionKind kind, int g);

/// Coefficient-level test of h(t) == (-1)^dim h(-t - r).
bool serre_symmetric(const ExactPolynomial& h, int dim, int index_r);

}  // namespace canstrip
