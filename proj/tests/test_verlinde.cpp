#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "canstrip/errors.hpp"
#include "canstrip/verlinde.hpp"

using namespace canstrip;

TEST_CASE("determinant form at small levels") {
  CHECK(verlinde_det(2, 0) == 1);  // sections of the trivial bundle
  CHECK(verlinde_det(2, 1) == 6);  // (2k^3+6k^2+7k+3)/3 at k=1
  CHECK(verlinde_det(2, 2) == 19);
  CHECK(verlinde_det(2, 3) == 44);
}

TEST_CASE("trigonometric form at small levels") {
  // g=2, k=1: 2 [1/sin^2(pi/4) - 1/sin^2(pi/2) + 1/sin^2(3pi/4)] = 2 [2-1+2]
  CHECK(verlinde_trig(2, 1, 128) == 6);
  CHECK(verlinde_trig(2, 0, 128) == 1);  // single j=1 term, sin(pi/2) = 1
  CHECK(verlinde_trig(5, 3, 256) == verlinde_det(5, 3));
}

TEST_CASE("cross-formula oracle on a genus/level grid") {
  for (int g = 2; g <= 6; ++g)
    for (long k = 0; k <= 8; ++k)
      CHECK(verlinde_det(g, k) == verlinde_trig(g, k, 512));
}

TEST_CASE("default precision heuristic is enough across the grid") {
  for (int g = 2; g <= 8; ++g)
    for (long k = 0; k <= 10; k += 5)
      CHECK(verlinde_det(g, k) == verlinde_trig(g, k, default_trig_precision(g, k)));
}

TEST_CASE("verlinde numbers grow strictly in the level") {
  for (int g = 2; g <= 8; ++g) {
    Int prev = verlinde_det(g, 1);
    for (long k = 2; k <= 10; ++k) {
      Int next = verlinde_det(g, k);
      CHECK(next > prev);
      prev = next;
    }
  }
}

TEST_CASE("hilbert polynomial of the g=2 moduli space") {
  ExactPolynomial h = hilbert_polynomial(2);
  CHECK(h == ExactPolynomial::from_strings({"1", "7/3", "2", "2/3"}));
  CHECK(h(Rat(-1)) == 0);
  for (int g = 2; g <= 8; ++g) CHECK(hilbert_polynomial(g)(Rat(0)) == 1);
}

TEST_CASE("Serre symmetry of the moduli Hilbert function") {
  for (int g = 2; g <= 8; ++g) {
    ExactPolynomial h = hilbert_polynomial(g);
    const int dim = 3 * g - 3;
    const Rat sign(dim % 2 == 0 ? 1 : -1);
    for (long k = 0; k <= 6; ++k) CHECK(h(Rat(k)) == sign * h(Rat(-k - 2)));
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(verlinde_det(1, 0), InvalidGenus);
  CHECK_THROWS_AS(verlinde_det(2, -1), InvalidGenus);
  CHECK_THROWS_AS(verlinde_trig(2, 0, 32), PrecisionExhausted);
  CHECK_THROWS_AS(ModuliDescriptor(1), InvalidGenus);
  CHECK(ModuliDescriptor(5).dimension() == 12);
  CHECK(ModuliDescriptor(5).index_r() == 2);
}

TEST_CASE("insufficient precision is reported, not rounded through") {
  // at g=10, k=12 the sum is ~1e22; 64 bits cannot place it within 2^-16
  CHECK_THROWS_AS(verlinde_trig(10, 12, 64), PrecisionExhausted);
}
