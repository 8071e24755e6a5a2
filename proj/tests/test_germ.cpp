#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "helpers.hpp"
#include "valcone/contact.hpp"
#include "valcone/criteria.hpp"
#include "valcone/germ.hpp"
#include "valcone/lattice.hpp"

using namespace valcone;
using valcone::testing::cusp;
using valcone::testing::parabola;
using valcone::testing::random_config;

namespace {

const Field Q = Field::rationals();

GermPoly parse_terms(std::initializer_list<std::tuple<int, int, long>> ts) {
  GermPoly f;
  for (const auto& [a, b, c] : ts)
    if (c != 0) f.terms[{a, b}] = Rat(c);
  return f;
}

std::vector<Int> ints(std::initializer_list<long> xs) {
  return std::vector<Int>(xs.begin(), xs.end());
}

ErrorCode thrown_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::logic_error("expected an Error");
}

// Parabola realized along v = u^2: p_3 at direction 1, p_4 at 0.
RealizedConfiguration canonical_parabola() {
  return realize_with(parabola(), Q, {Rat(1), Rat(0)});
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const GermPoly a = parse_terms({{1, 0, 1}, {0, 1, 2}});    // u + 2v
  const GermPoly b = parse_terms({{1, 0, 1}, {0, 0, -1}});   // u - 1
  CHECK(gp_add(Q, a, b) == parse_terms({{1, 0, 2}, {0, 1, 2}, {0, 0, -1}}));
  CHECK(gp_mul(Q, a, b) ==
        parse_terms({{2, 0, 1}, {1, 1, 2}, {1, 0, -1}, {0, 1, -2}}));
  CHECK(gp_sub(Q, a, a).is_zero());
  CHECK(a.total_degree() == 1);
  CHECK(a.order() == 1);
  CHECK(b.order() == 0);
  CHECK(GermPoly{}.total_degree() == -1);

  // (u + 2v)(u, uv) = u + 2uv, divisible by u.
  const GermPoly c = gp_compose(Q, a, gp_monomial(1, 0), gp_monomial(1, 1));
  CHECK(gp_div_upow(c, 1) == parse_terms({{0, 0, 1}, {0, 1, 2}}));
  CHECK(thrown_code([&] { gp_div_upow(a, 1); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("prime field arithmetic") {
  const Field F7 = Field::prime(7);
  CHECK(F7.add(Rat(5), Rat(4)) == Rat(2));
  CHECK(F7.inv(Rat(3)) == Rat(5));
  CHECK(F7.reduce(Rat(1, 2)) == Rat(4));
  CHECK(thrown_code([] { Field::prime(6); }) == ErrorCode::PreconditionViolated);
  CHECK(thrown_code([&] { F7.inv(Rat(7)); }) == ErrorCode::PreconditionViolated);
  CHECK(thrown_code([&] { F7.reduce(Rat(1, 7)); }) == ErrorCode::Unsupported);
}

TEST_CASE("realization structure") {
  const RealizedConfiguration real = realize(cusp(), Q, 7);
  CHECK(real.charts.size() == 2);
  CHECK(real.charts[0].forced);  // p_2 on L
  CHECK(real.charts[1].forced);  // p_3 satellite
  CHECK(real.d_m == 3);

  const RealizedConfiguration r1 = realize(cusp(1), Q, 7);
  CHECK_FALSE(r1.charts[0].forced);
  CHECK(r1.charts[0].param != 0);
  CHECK(r1.d_m == 2);

  // Mismatched parameter counts and collisions with marked divisors.
  CHECK(thrown_code([] { realize_with(cusp(1), Q, {}); }) == ErrorCode::BadLength);
  CHECK(thrown_code([] { realize_with(cusp(1), Q, {Rat(0)}); }) ==
        ErrorCode::PreconditionViolated);
}

TEST_CASE("germ multiplicities and valuation") {
  const RealizedConfiguration real = realize(cusp(), Q, 7);
  const GermPoly v = gp_monomial(0, 1);
  // L passes through p_1 and p_2 only.
  CHECK(germ_multiplicities(real, v) == ints({1, 1, 0}));
  CHECK(germ_valuation(real, v) == 3);
  CHECK(germ_valuation(real, gp_monomial(0, 0)) == 0);
  CHECK(germ_valuation(real, gp_monomial(1, 0)) == 2);  // u misses p_2
  CHECK(thrown_code([&] { germ_valuation(real, GermPoly{}); }) == ErrorCode::ZeroGerm);

  // v - u^2 on the canonical parabola realization has the full cluster.
  const RealizedConfiguration par = canonical_parabola();
  const GermPoly germ = parse_terms({{0, 1, 1}, {2, 0, -1}});
  CHECK(germ_multiplicities(par, germ) == ints({1, 1, 1, 1}));
  CHECK(germ_valuation(par, germ) == 4);
  CHECK(germ_valuation(par, gp_monomial(0, 1)) == 2);  // nu(v) = d_m
}

TEST_CASE("polynomial valuation") {
  const RealizedConfiguration par = canonical_parabola();
  // f = x - y^2 under x^a y^b keys.
  const GermPoly f = parse_terms({{1, 0, 1}, {0, 2, -1}});
  CHECK(poly_valuation(par, f) == 0);
  CHECK(poly_valuation(par, gp_monomial(1, 0)) == -2);  // nu(x) = -d_m
  CHECK(poly_valuation(par, gp_monomial(0, 0)) == 0);
  CHECK(thrown_code([&] { poly_valuation(par, GermPoly{}); }) == ErrorCode::ZeroPolynomial);

  // Example 3 (a = r = 4): nu(x) = -16.
  const FamilyReport rep = am_family(4, 4);
  const RealizedConfiguration ex3 = realize(rep.config, Q, 3);
  CHECK(poly_valuation(ex3, gp_monomial(1, 0)) == -16);

  // Round trips between f and its germ at infinity.
  CHECK(germ_at_infinity(f) == parse_terms({{0, 1, 1}, {2, 0, -1}}));
  CHECK(polynomial_from_germ(germ_at_infinity(f)) == f);
}

TEST_CASE("valuation axioms") {
  std::mt19937_64 rng(11);
  const RealizedConfiguration real = realize(cusp(1), Q, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const GermPoly f = random_polynomial(Q, rng, 3);
    const GermPoly g = random_polynomial(Q, rng, 3);
    CHECK(poly_valuation(real, gp_mul(Q, f, g)) ==
          poly_valuation(real, f) + poly_valuation(real, g));
    const GermPoly sum = gp_add(Q, f, g);
    if (!sum.is_zero())
      CHECK(poly_valuation(real, sum) >=
            std::min(poly_valuation(real, f), poly_valuation(real, g)));
  }
}

TEST_CASE("curvette equations") {
  const RealizedConfiguration real = realize(cusp(), Q, 7);
  const GermPoly phi3 = curvette_equation(real, 3);
  CHECK(germ_multiplicities(real, phi3) == ints({2, 1, 1}));
  CHECK(germ_valuation(real, phi3) == 6);  // beta_bar_2
  const GermPoly phi1 = curvette_equation(real, 1);
  CHECK(germ_valuation(real, phi1) == 2);  // mu_1

  const RealizedConfiguration par = canonical_parabola();
  CHECK(germ_valuation(par, curvette_equation(par, 4)) == 4);

  // Random configurations: nu(phi_i) = d_i d_m - D_i . D_m.
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 12; ++trial) {
    const Configuration c = random_config(rng, 7);
    const RealizedConfiguration r = realize(c, Q, 100 + trial);
    const DFamily fam = d_family(c);
    const int m = c.m();
    for (int i = 1; i <= m; ++i) {
      const Rat expected =
          Rat(fam.d[i - 1] * fam.d[m - 1]) - intersect(fam.divisors[i], fam.divisors[m]);
      CHECK(Rat(germ_valuation(r, curvette_equation(r, i))) == expected);
    }
  }
}

TEST_CASE("phi pairing identity") {
  const RealizedConfiguration cusp1 = realize(cusp(1), Q, 7);
  CHECK(phi_pairing_check(cusp1, gp_monomial(0, 1)));  // f = y
  const RealizedConfiguration par = canonical_parabola();
  CHECK(phi_pairing_check(par, parse_terms({{1, 0, 1}, {0, 2, -1}})));
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial)
    CHECK(phi_pairing_check(par, random_polynomial(Q, rng, 4)));
}

TEST_CASE("witness search") {
  // cusp s=1 is not nonpositive: degree-1 positive witness.
  const RealizedConfiguration cusp1 = realize(cusp(1), Q, 7);
  const WitnessResult pos = witness_search(cusp1, WitnessMode::Positive);
  REQUIRE(pos.f.has_value());
  CHECK(pos.value > 0);
  CHECK(pos.f->total_degree() == 1);
  CHECK(poly_valuation(cusp1, *pos.f) == pos.value);

  // Parabola boundary: zero witness of degree 2.
  const RealizedConfiguration par = canonical_parabola();
  const WitnessResult zero = witness_search(par, WitnessMode::Zero);
  REQUIRE(zero.f.has_value());
  CHECK(zero.value == 0);
  CHECK(zero.f->total_degree() >= 1);

  // Nonpositive valuations admit no positive witness.
  const RealizedConfiguration c2 = realize(cusp(), Q, 7);
  CHECK_FALSE(witness_search(c2, WitnessMode::Positive).f.has_value());
  const FamilyReport rep = am_family(4, 4);
  const RealizedConfiguration ex3 = realize(rep.config, Q, 3);
  CHECK_FALSE(witness_search(ex3, WitnessMode::Positive).f.has_value());
}

TEST_CASE("realization independence and prime fields") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 8; ++trial) {
    const Configuration c = random_config(rng, 8);
    const RealizedConfiguration a = realize(c, Q, 1000 + trial);
    const RealizedConfiguration b = realize(c, Field::prime(10007), 2000 + trial);
    // The L-germ valuation is realization- and field-independent.
    CHECK(germ_valuation(a, gp_monomial(0, 1)) == a.d_m);
    CHECK(germ_valuation(b, gp_monomial(0, 1)) == a.d_m);
    for (int i = 1; i <= c.m(); ++i) {
      const Int va = germ_valuation(a, curvette_equation(a, i));
      const Int vb = germ_valuation(b, curvette_equation(b, i));
      CHECK(va == vb);
    }
  }
}
