#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "valcone/config.hpp"
#include "valcone/field.hpp"

namespace valcone {

// Sparse exact-coefficient polynomial in two variables. Keys are exponent
// pairs; the same type serves germs in the local variables (u, v) and
// affine polynomials in (x, y).
struct GermPoly {
  std::map<std::pair<int, int>, Rat> terms;

  bool is_zero() const { return terms.empty(); }
  int total_degree() const;  // -1 for the zero polynomial
  int order() const;         // minimal total degree; -1 for zero

  bool operator==(const GermPoly&) const = default;
};

GermPoly gp_monomial(int a, int b, const Rat& coeff = Rat(1));
GermPoly gp_add(const Field& k, const GermPoly& a, const GermPoly& b);
GermPoly gp_sub(const Field& k, const GermPoly& a, const GermPoly& b);
GermPoly gp_mul(const Field& k, const GermPoly& a, const GermPoly& b);
GermPoly gp_scale(const Field& k, const GermPoly& a, const Rat& c);
// h(A, B): substitution of both variables.
GermPoly gp_compose(const Field& k, const GermPoly& h, const GermPoly& A, const GermPoly& B);
// Exact division by u^n; throws PreconditionViolated if not divisible.
GermPoly gp_div_upow(const GermPoly& a, int n);

// One blow-up step: the images of the chart coordinates at p_i written in
// the chart at p_{i+1}, where the fresh exceptional divisor is {u = 0}.
struct ChartStep {
  GermPoly u_image;
  GermPoly v_image;
  Rat param;            // free-direction parameter; 0 for forced steps
  bool forced = false;  // L-chain points and satellites admit no choice
};

// A configuration with explicit coordinates: chart-to-chart substitutions
// for every blow-up, over an exact field. Immutable after construction.
struct RealizedConfiguration {
  Configuration config;
  Field field;
  std::vector<ChartStep> charts;  // charts[i-1]: chart at p_i -> chart at p_{i+1}
  std::uint64_t seed = 0;
  std::vector<Int> mult;  // curvette multiplicities mu_1, ..., mu_m
  Int d_m;                // degree of D_m = sum of mu_j over j <= s
};

RealizedConfiguration realize(const Configuration& config, const Field& field,
                              std::uint64_t seed);
// Deterministic variant: params lists the free-direction parameters of the
// non-forced points in blow-up order.
RealizedConfiguration realize_with(const Configuration& config, const Field& field,
                                   const std::vector<Rat>& params);

// Multiplicities of the strict transforms of the germ h at p_1, ..., p_m.
std::vector<Int> germ_multiplicities(const RealizedConfiguration& real, const GermPoly& h);

// nu(h) = sum of mu_j * mult_j; throws ZeroGerm on h = 0.
Int germ_valuation(const RealizedConfiguration& real, const GermPoly& h);

// nu extended to affine polynomials in (x, y) via the germ at infinity;
// throws ZeroPolynomial on f = 0.
Int poly_valuation(const RealizedConfiguration& real, const GermPoly& f);

// h_f = v^deg(f) * f(1/v, u/v), the germ of f at p_1; always polynomial.
GermPoly germ_at_infinity(const GermPoly& f);
// f(x, y) = x^deg(h) * h(y/x, 1/x), the inverse direction.
GermPoly polynomial_from_germ(const GermPoly& h);

// Equation of a curvette of the level-i truncation: a germ whose
// multiplicity vector is exactly multiplicity_vector(config, i) and which
// misses p_{i+1}.
GermPoly curvette_equation(const RealizedConfiguration& real, int i);

// Checks -poly_valuation(f) = d_m * deg(f) - sum mu_j * mult_j(h_f), the
// pairing of D_m with the class of the closure of {f = 0}.
bool phi_pairing_check(const RealizedConfiguration& real, const GermPoly& f);

enum class WitnessMode { Positive, Zero };

struct WitnessResult {
  std::optional<GermPoly> f;  // empty = NotFound within budget
  Int value;                  // poly_valuation(f) when found
  Int budget;                 // degree bound actually used
};

// Searches for f with nu(f) > 0 (Positive) or nonconstant f with
// nu(f) = 0 (Zero) of degree <= budget; budget <= 0 selects 2 * d_m.
// Candidates are curvettes at infinity of the truncations whose pairing
// with D_m has the required sign; every hit is re-verified.
WitnessResult witness_search(const RealizedConfiguration& real, WitnessMode mode,
                             Int budget = 0);

// Random nonzero polynomial of total degree <= max_degree.
GermPoly random_polynomial(const Field& k, std::mt19937_64& rng, int max_degree);

}  // namespace valcone
