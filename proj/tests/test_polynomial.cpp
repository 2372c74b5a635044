#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "canstrip/errors.hpp"
#include "canstrip/polynomial.hpp"

#include <random>

using namespace canstrip;

namespace {

ValueTable sample(const ExactPolynomial& p, long offset, int count) {
  ValueTable t;
  t.offset = offset;
  for (int k = 0; k < count; ++k) {
    Rat v = p(Rat(offset + k));
    REQUIRE(v.get_den() == 1);
    t.values.push_back(v.get_num());
  }
  return t;
}

}  // namespace

TEST_CASE("interpolation of a constant table") {
  ValueTable t{{Int(1), Int(1), Int(1)}, 0};
  ExactPolynomial p = interpolate(t, 0);
  CHECK(p.degree() == 0);
  CHECK(p.coeff(0) == 1);
}

TEST_CASE("interpolation recovers the g=2 Hilbert polynomial from its values") {
  // values of (2t^3 + 6t^2 + 7t + 3)/3 at t = 0..3
  ValueTable t{{Int(1), Int(6), Int(19), Int(44)}, 0};
  ExactPolynomial p = interpolate(t, 3);
  ExactPolynomial expected = ExactPolynomial::from_strings({"1", "7/3", "2", "2/3"});
  CHECK(p == expected);
  for (long k = 0; k <= 3; ++k) CHECK(p(Rat(k)) == Rat(t.values[static_cast<size_t>(k)]));
}

TEST_CASE("surplus points certify the claimed degree") {
  ValueTable linear{{Int(0), Int(1), Int(2)}, 0};
  CHECK_NOTHROW(interpolate(linear, 1));
  ValueTable off{{Int(0), Int(1), Int(3)}, 0};
  CHECK_THROWS_AS(interpolate(off, 1), DegreeOverflow);
}

TEST_CASE("interpolation needs degree+1 points") {
  ValueTable t{{Int(1), Int(2)}, 0};
  CHECK_THROWS_AS(interpolate(t, 2), InsufficientPoints);
}

TEST_CASE("interpolation honours the table offset") {
  // t^2 sampled at 5..8
  ExactPolynomial sq = ExactPolynomial::monomial(2);
  ExactPolynomial p = interpolate(sample(sq, 5, 4), 2);
  CHECK(p == sq);
}

TEST_CASE("shift is binomial expansion") {
  ExactPolynomial sq = ExactPolynomial::monomial(2);
  CHECK(shift(sq, 1) == ExactPolynomial::from_strings({"1", "-2", "1"}));
  ExactPolynomial p = ExactPolynomial::from_strings({"3", "7/3", "2", "2/3"});
  CHECK(shift(p, 0) == p);
  CHECK(shift(shift(p, 1), -1) == p);
}

TEST_CASE("shift is a group action") {
  ExactPolynomial p = ExactPolynomial::from_strings({"1", "-4", "0", "5/7", "3"});
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      CHECK(shift(p, a + b) == shift(shift(p, a), b));
}

TEST_CASE("linear combinations cancel exactly") {
  ExactPolynomial p = ExactPolynomial::from_strings({"1", "7/3", "2", "2/3"});
  ExactPolynomial zero = linear_combine({{Rat(1), p}, {Rat(-1), p}});
  CHECK(zero.is_zero());
  CHECK(zero.degree() == ExactPolynomial::kZeroDegree);

  // t^3 - (t-1)^3 = 3t^2 - 3t + 1
  ExactPolynomial cube = ExactPolynomial::monomial(3);
  ExactPolynomial diff = cube - shift(cube, 1);
  CHECK(diff == ExactPolynomial::from_strings({"1", "-3", "3"}));
}

TEST_CASE("sum against its own shift evaluates like h(1) + h(0)") {
  ExactPolynomial h = ExactPolynomial::from_strings({"1", "7/3", "2", "2/3"});
  ExactPolynomial s = h + shift(h, 1);
  CHECK(s(Rat(1)) == Rat(7));  // 6 + 1
}

TEST_CASE("synthetic division by a root") {
  ExactPolynomial p = ExactPolynomial::from_strings({"-1", "0", "1"});  // t^2 - 1
  auto [q, ok] = exact_divide_by_root(p, Rat(-1));
  CHECK(ok);
  CHECK(q == ExactPolynomial::from_strings({"-1", "1"}));

  ExactPolynomial odd = ExactPolynomial::from_strings({"1", "0", "1"});  // t^2 + 1
  auto [q2, ok2] = exact_divide_by_root(odd, Rat(-1));
  CHECK_FALSE(ok2);
  CHECK(q2 == odd);

  ExactPolynomial h = ExactPolynomial::from_strings({"1", "7/3", "2", "2/3"});
  auto [q3, ok3] = exact_divide_by_root(h, Rat(-1));
  CHECK(ok3);
  CHECK(q3 == ExactPolynomial::from_strings({"1", "4/3", "2/3"}));

  CHECK_THROWS_AS(exact_divide_by_root(ExactPolynomial(), Rat(0)), ZeroPolynomial);
}

TEST_CASE("divide out then multiply back is the identity") {
  ExactPolynomial p = ExactPolynomial::from_strings({"-6", "1", "7", "2"});
  for (const char* root : {"-1", "2/7", "-3"}) {
    Rat r = parse_rational(root);
    auto [q, ok] = exact_divide_by_root(p, r);
    if (!ok) continue;
    ExactPolynomial back = q * ExactPolynomial::from_strings({"0", "1"});
    back = back - Rat(r) * q;
    CHECK(back == p);
  }
}

TEST_CASE("interpolation round-trips random integer polynomials") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> coeff(-30, 30);
  std::uniform_int_distribution<int> deg(0, 12);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = deg(rng);
    std::vector<Rat> c(static_cast<size_t>(d) + 1);
    for (auto& x : c) x = Rat(coeff(rng));
    if (c.back() == 0) c.back() = 1;
    ExactPolynomial p{std::move(c)};
    ExactPolynomial q = interpolate(sample(p, -2, d + 3), d);
    CHECK(q == p);
  }
}

TEST_CASE("JSON round trip keeps exact coefficients") {
  ExactPolynomial p = ExactPolynomial::from_strings({"1", "-7/3", "0", "22"});
  auto j = to_json(p);
  CHECK(j["coefficients"][1] == "-7/3");
  CHECK(polynomial_from_json(j) == p);

  CHECK(polynomial_from_json(to_json(ExactPolynomial())).is_zero());
  CHECK_THROWS_AS(polynomial_from_json(nlohmann::json{{"coefficients", {"1/0"}}}), ParseError);
}
