#include "canstrip/constructions.hpp"

#include "canstrip/errors.hpp"
#include "canstrip/verlinde.hpp"

#include <algorithm>
#include <cctype>

namespace canstrip {

std::string construction_name(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::Moduli: return "moduli";
    case ConstructionKind::Fano1: return "fano1";
    case ConstructionKind::Fano2: return "fano2";
    case ConstructionKind::CY1: return "cy1";
    case ConstructionKind::CY2: return "cy2";
    case ConstructionKind::CY3: return "cy3";
    case ConstructionKind::CY4: return "cy4";
    case ConstructionKind::CY5: return "cy5";
    case ConstructionKind::CY6: return "cy6";
  }
  throw Error("unreachable construction kind");
}

ConstructionKind parse_construction(const std::string& s) {
  std::string low(s);
  std::transform(low.begin(), low.end(), low.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (ConstructionKind kind : kAllConstructions)
    if (construction_name(kind) == low) return kind;
  throw ParseError("unknown construction '" + s + "'");
}

int construction_dimension(ConstructionKind kind, int g) {
  switch (kind) {
    case ConstructionKind::Fano1:
    case ConstructionKind::CY1: return 3 * g - 4;
    case ConstructionKind::CY2: return 3 * g - 5;
    default: return 3 * g - 3;
  }
}

int construction_index(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::Moduli: return 2;
    case ConstructionKind::Fano1:
    case ConstructionKind::Fano2: return 1;
    default: return 0;
  }
}

bool serre_symmetric(const ExactPolynomial& h, int dim, int index_r) {
  // h(-t - r): negate t, then shift. h(-t) has coefficients (-1)^i c_i, and
  // shifting that by -r gives h(-(t) - r).
  std::vector<Rat> neg(h.coefficients());
  for (size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
  ExactPolynomial reflected = shift(ExactPolynomial(std::move(neg)), -static_cast<long>(index_r));
  const Rat sign(dim % 2 == 0 ? 1 : -1);
  return h == linear_combine({{sign, reflected}});
}

PolarisedInvariant apply(ConstructionKind kind, int g, const ExactPolynomial& h) {
  (void)ModuliDescriptor(g);  // validates g >= 2
  const ExactPolynomial h1 = shift(h, 1);
  const ExactPolynomial h2 = shift(h, 2);

  ExactPolynomial out;
  switch (kind) {
    case ConstructionKind::Moduli: out = h; break;
    case ConstructionKind::Fano1: out = h - h1; break;
    case ConstructionKind::Fano2: out = h + h1; break;
    case ConstructionKind::CY1: out = h - h2; break;
    case ConstructionKind::CY2:
      out = linear_combine({{Rat(1), h}, {Rat(-2), h1}, {Rat(1), h2}});
      break;
    case ConstructionKind::CY3: out = h + h2; break;
    case ConstructionKind::CY4:
      out = linear_combine({{Rat(1), h}, {Rat(1), h1}, {Rat(1), h2}});
      break;
    case ConstructionKind::CY5:
      out = linear_combine({{Rat(1), h}, {Rat(2), h1}, {Rat(1), h2}});
      break;
    case ConstructionKind::CY6:
      out = linear_combine({{Rat(1), h}, {Rat(-1), h1}, {Rat(1), h2}});
      break;
  }

  const int dim = construction_dimension(kind, g);
  const int r = construction_index(kind);
  if (out.degree() != dim)
    throw DimensionMismatch("construction " + construction_name(kind) + " at g=" +
                            std::to_string(g) + ": degree " + std::to_string(out.degree()) +
                            " != dimension " + std::to_string(dim));
  // constant term is chi(O): 1 for the Fano cases, 1 + (-1)^dim for the
  // strict Calabi-Yau cases (so 2 in even dimension, 0 in odd)
  const Rat chi0 = (r > 0) ? Rat(1) : Rat(dim % 2 == 0 ? 2 : 0);
  if (out(Rat(0)) != chi0)
    throw SymmetryViolation("construction " + construction_name(kind) + " at g=" +
                            std::to_string(g) + ": constant term != chi(O)");
  if (!serre_symmetric(out, dim, r))
    throw SymmetryViolation("construction " + construction_name(kind) + " at g=" +
                            std::to_string(g) + ": Serre symmetry fails");
  return PolarisedInvariant{kind, dim, r, std::move(out)};
}

PolarisedInvariant apply(ConstructionKind kind, int g) {
  return apply(kind, g, hilbert_polynomial(g));
}

}  // namespace canstrip
