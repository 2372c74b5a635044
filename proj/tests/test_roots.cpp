#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "canstrip/constructions.hpp"
#include "canstrip/errors.hpp"
#include "canstrip/roots.hpp"
#include "canstrip/verlinde.hpp"

#include <cmath>

using namespace canstrip;

namespace {

double dbl(const BigFloat& x) { return x.to_double(); }

/// |prod factors - p| measured against the largest coefficient of p.
void check_reconstruction(const ExactPolynomial& p, const RootAnalysis& a) {
  const mpfr_prec_t P = std::max<mpfr_prec_t>(a.precision, 256);
  std::vector<BigComplex> factors;
  for (int k = 0; k < a.multiplicity_at_minus_one; ++k)
    factors.emplace_back(BigFloat::from(-1L, P), BigFloat::zero(P));
  for (const CertifiedRoot& r : a.roots)
    for (int k = 0; k < r.multiplicity; ++k) factors.emplace_back(r.re, r.im);
  REQUIRE(static_cast<int>(factors.size()) == p.degree());

  // coeffs[i] is the coefficient of t^i throughout
  std::vector<BigComplex> coeffs{BigComplex(BigFloat::from(p.leading(), P), BigFloat::zero(P))};
  for (const BigComplex& root : factors) {
    std::vector<BigComplex> next(coeffs.size() + 1, BigComplex(P));
    for (size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] = next[i + 1] + coeffs[i];
      next[i] = next[i] - coeffs[i] * root;
    }
    coeffs = std::move(next);
  }

  double scale = 0;
  for (const Rat& c : p.coefficients()) scale = std::max(scale, std::fabs(Rat(c).get_d()));
  for (size_t i = 0; i < coeffs.size(); ++i) {
    const double expect = p.coeff(i).get_d();
    CHECK(std::fabs(dbl(coeffs[i].re) - expect) <= 1e-10 * scale);
    CHECK(std::fabs(dbl(coeffs[i].im)) <= 1e-10 * scale);
  }
}

/// The root multiset maps into itself under conjugation, within radii.
void check_conjugate_closure(const RootAnalysis& a) {
  for (const CertifiedRoot& r : a.roots) {
    bool found = false;
    for (const CertifiedRoot& s : a.roots) {
      const double dre = dbl(r.re) - dbl(s.re);
      const double dim = dbl(r.im) + dbl(s.im);
      if (std::hypot(dre, dim) <= dbl(r.radius) + dbl(s.radius) + 1e-25) {
        found = true;
        break;
      }
    }
    CHECK(found);
  }
}

void check_bookkeeping(const ExactPolynomial& p, const RootAnalysis& a) {
  CHECK(a.multiplicity_at_minus_one + a.deflated_degree == p.degree());
  int total = 0;
  for (const CertifiedRoot& r : a.roots) total += r.multiplicity;
  CHECK(total == a.deflated_degree);
  for (const CertifiedRoot& r : a.roots) CHECK(dbl(r.radius) < 1e-12);
}

}  // namespace

TEST_CASE("rational deflation with the default candidate") {
  // (t+1)^3 (t^2+1) = t^5 + 3t^4 + 4t^3 + 4t^2 + 3t + 1
  ExactPolynomial p = ExactPolynomial::from_strings({"1", "3", "4", "4", "3", "1"});
  auto [q, mult] = deflate_rational_roots(p);
  CHECK(mult.at(Rat(-1)) == 3);
  CHECK(q == ExactPolynomial::from_strings({"1", "0", "1"}));

  CHECK(deflate_rational_roots(hilbert_polynomial(2)).second.at(Rat(-1)) == 1);
  CHECK(deflate_rational_roots(hilbert_polynomial(5)).second.at(Rat(-1)) == 4);
  CHECK_THROWS_AS(deflate_rational_roots(ExactPolynomial()), ZeroPolynomial);
}

TEST_CASE("quadratic with a conjugate pair") {
  ExactPolynomial p = ExactPolynomial::from_strings({"2", "2", "1"});  // t^2+2t+2
  RootAnalysis a = solve(p, 1e-10);
  check_bookkeeping(p, a);
  CHECK(a.multiplicity_at_minus_one == 0);
  REQUIRE(a.roots.size() == 2);
  CHECK(std::fabs(dbl(a.roots[0].re) + 1.0) < 1e-12);
  CHECK(std::fabs(std::fabs(dbl(a.roots[0].im)) - 1.0) < 1e-12);
  CHECK(std::fabs(dbl(a.max_real_part) + 1.0) < 1e-12);

  // with the verified centre the real parts become exact
  SolveOptions opts;
  opts.symmetry_center = Rat(-1);
  RootAnalysis b = solve(p, opts);
  CHECK(b.max_is_exact);
  REQUIRE(b.max_exact_value.has_value());
  CHECK(*b.max_exact_value == Rat(-1));
}

TEST_CASE("an unverifiable symmetry centre is ignored") {
  ExactPolynomial p = ExactPolynomial::from_strings({"2", "2", "1"});
  SolveOptions opts;
  opts.symmetry_center = Rat(0);  // p(-t) != +-p(t)
  RootAnalysis a = solve(p, opts);
  CHECK_FALSE(a.max_is_exact);
  CHECK(std::fabs(dbl(a.max_real_part) + 1.0) < 1e-12);
}

TEST_CASE("moduli g=2: deflation plus a snapped pair") {
  ExactPolynomial h = hilbert_polynomial(2);
  SolveOptions opts;
  opts.symmetry_center = Rat(-1);
  RootAnalysis a = solve(h, opts);
  check_bookkeeping(h, a);
  CHECK(a.multiplicity_at_minus_one == 1);
  CHECK(a.deflated_degree == 2);
  CHECK(a.max_is_exact);
  CHECK(*a.max_exact_value == Rat(-1));
  for (const CertifiedRoot& r : a.roots) {
    REQUIRE(r.exact_re.has_value());
    CHECK(*r.exact_re == Rat(-1));
    CHECK(std::fabs(dbl(r.im) * dbl(r.im) - 0.5) < 1e-12);  // im = +-1/sqrt(2)
  }
  check_reconstruction(h, a);
  check_conjugate_closure(a);
}

TEST_CASE("published CY1 value at g=11") {
  PolarisedInvariant inv = apply(ConstructionKind::CY1, 11);
  SolveOptions opts;
  opts.symmetry_center = Rat(0);
  RootAnalysis a = solve(inv.hilbert, opts);
  check_bookkeeping(inv.hilbert, a);
  CHECK(std::fabs(dbl(a.max_real_part) - 0.0614369091) < 1e-8);
  check_conjugate_closure(a);
}

TEST_CASE("exact multiple rational roots are deflated, not iterated") {
  // (2t+1)^3
  ExactPolynomial cube = ExactPolynomial::from_strings({"1", "6", "12", "8"});
  RootAnalysis a = solve(cube, 1e-10);
  check_bookkeeping(cube, a);
  REQUIRE(a.roots.size() == 1);
  CHECK(a.roots[0].multiplicity == 3);
  REQUIRE(a.roots[0].exact_root.has_value());
  CHECK(*a.roots[0].exact_root == Rat(-1, 2));
  CHECK(a.max_is_exact);

  // (2t+1)^2 (t^2+2t+3): a double rational root next to a complex pair
  ExactPolynomial mixed = ExactPolynomial::from_strings({"3", "14", "21", "12", "4"});
  RootAnalysis b = solve(mixed, 1e-10);
  check_bookkeeping(mixed, b);
  int rational_mult = 0;
  for (const CertifiedRoot& r : b.roots)
    if (r.exact_root) rational_mult += r.multiplicity;
  CHECK(rational_mult == 2);
  check_reconstruction(mixed, b);
}

TEST_CASE("a pure power of (t+1) leaves nothing to iterate") {
  ExactPolynomial p = ExactPolynomial::from_strings({"1", "2", "1"});
  RootAnalysis a = solve(p, 1e-10);
  CHECK(a.multiplicity_at_minus_one == 2);
  CHECK(a.deflated_degree == 0);
  CHECK(a.roots.empty());
  CHECK(a.max_is_exact);
  CHECK(*a.max_exact_value == Rat(-1));
}

TEST_CASE("purely imaginary pair sits exactly on the axis") {
  ExactPolynomial p = ExactPolynomial::from_strings({"1", "0", "1"});
  SolveOptions opts;
  opts.symmetry_center = Rat(0);
  RootAnalysis a = solve(p, opts);
  CHECK(a.max_is_exact);
  CHECK(*a.max_exact_value == Rat(0));
}

TEST_CASE("symmetry residual") {
  ExactPolynomial p = ExactPolynomial::from_strings({"2", "2", "1"});
  RootAnalysis a = solve(p, 1e-10);
  CHECK(dbl(symmetry_residual(a, 2)) < 1e-12);  // roots -1 +- i, line -1

  PolarisedInvariant cy3 = apply(ConstructionKind::CY3, 6);
  SolveOptions opts;
  opts.symmetry_center = Rat(0);
  RootAnalysis b = solve(cy3.hilbert, opts);
  CHECK(dbl(symmetry_residual(b, 0)) < 1e-10);

  ExactPolynomial lin = ExactPolynomial::from_strings({"1/2", "1"});  // root -1/2
  RootAnalysis c = solve(lin, 1e-10);
  CHECK(dbl(symmetry_residual(c, 1)) < 1e-20);  // fixed point of the reflection
}

TEST_CASE("reconstruction across a genus range") {
  for (int g : {3, 5, 8, 12, 15}) {
    ExactPolynomial h = hilbert_polynomial(g);
    SolveOptions opts;
    opts.symmetry_center = Rat(-1);
    RootAnalysis a = solve(h, opts);
    check_bookkeeping(h, a);
    CHECK(a.multiplicity_at_minus_one == g - 1);
    check_reconstruction(h, a);
    check_conjugate_closure(a);
  }
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(solve(ExactPolynomial(), 1e-10), ZeroPolynomial);
  CHECK_THROWS_AS(solve(ExactPolynomial::from_strings({"5"}), 1e-10), Error);
  CHECK_THROWS_AS(solve(ExactPolynomial::from_strings({"1", "1"}), -1.0), Error);

  // an irreducible square cannot be separated: the precision cap reports it
  ExactPolynomial sq = ExactPolynomial::from_strings({"1", "1", "1"});
  ExactPolynomial p = sq * sq;
  SolveOptions opts;
  opts.max_precision = 512;
  CHECK_THROWS_AS(solve(p, opts), NonConvergence);
}
