// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. All comparisons are exact (integer / rational); the only
// tolerances are the per-criterion wall-clock budgets stated inline.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "valcone/contact.hpp"
#include "valcone/criteria.hpp"
#include "valcone/dot.hpp"
#include "valcone/germ.hpp"
#include "valcone/lattice.hpp"
#include "valcone/report.hpp"

using namespace valcone;
using valcone::testing::cusp;
using valcone::testing::parabola;
using valcone::testing::random_config;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<bool()>& body) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_seconds > 0 && elapsed > budget_seconds) {
    ok = false;
    note += " (over time budget)";
  }
  std::printf("%s criterion %2d: %s [%.2fs]%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
              elapsed, note.c_str());
  if (!ok) ++failures;
}

std::vector<Configuration> seeded_suite(std::uint64_t seed, int count, int max_m) {
  std::mt19937_64 rng(seed);
  std::vector<Configuration> out;
  for (int i = 0; i < count; ++i) out.push_back(random_config(rng, max_m));
  return out;
}

const Field Q = Field::rationals();

// Example 3 golden values for a = r = 4.
bool example3_golden() {
  const FamilyReport rep = am_family(4, 4);
  const ContactInvariants inv = contact_invariants(rep.config);
  if (inv.beta_bar != std::vector<Int>{4, 59, 237}) return false;
  if (rep.nonpositive.d_m != 16 || rep.nonpositive.D_m_sq != 19) return false;
  const int i1 = satellite_block_starts(rep.config)[0] - 1;
  if (i1 != 15) return false;
  const DFamily fam = d_family(rep.config);
  if (fam.self_int[i1 - 1] != 1) return false;
  if (intersect(fam.divisors[i1], canonical_class(rep.config.m())) != Rat(3)) return false;
  if (!rep.nonpositive.decision || !rep.negative.decision || !rep.cox.decision ||
      !rep.anticanonical.decision)
    return false;
  if (rep.delta.delta != std::vector<Int>{16, 12, 5}) return false;
  const auto stages = am_stages(rep.delta);
  return !am_realizable(rep.delta) && stages[1].product == 20 && !stages[1].member;
}

bool example3_sweep() {
  for (long a = 4; a <= 6; ++a)
    for (long r = a; r <= a + 8; ++r) {
      if (std::gcd(a, r + 1) != 1) continue;
      const FamilyReport rep = am_family(a, r);
      if (!rep.nonpositive.decision || !rep.negative.decision || !rep.cox.decision ||
          !rep.anticanonical.decision || !rep.delta_obstructed)
        return false;
    }
  return true;
}

bool lemma2_suite() {
  int kept = 0;
  for (const Configuration& c : seeded_suite(20260823, 1000, 20)) {
    const DFamily fam = d_family(c);
    const int m = c.m();
    if (fam.self_int[m - 1] < 0) continue;
    ++kept;
    for (int i = 1; i <= m; ++i) {
      if (fam.self_int[i - 1] < 0) return false;
      if (c.point(i).is_satellite() && fam.self_int[i - 1] <= 0) return false;
      if (i >= 2 && fam.self_int[i - 2] == 0) {
        const bool allowed =
            i == 2 || (c.point(i).is_satellite() && !c.point(i - 1).is_satellite());
        if (!allowed) return false;
      }
    }
  }
  return kept > 0;
}

bool dual_basis_suite() {
  for (const Configuration& c : seeded_suite(20260823, 1000, 20)) {
    const int m = c.m();
    const DFamily fam = d_family(c);
    std::vector<DivisorClass> basis{line_class(c)};
    for (int j = 1; j <= m; ++j) basis.push_back(strict_exceptional(c, j));
    for (int i = 0; i <= m; ++i)
      for (int j = 0; j <= m; ++j)
        if (intersect(fam.divisors[i], basis[j]) != Rat(i == j ? 1 : 0)) return false;
  }
  return true;
}

bool oracle_agreement() {
  std::mt19937_64 rng(404);
  std::vector<Configuration> yes, no;
  while (yes.size() < 200 || no.size() < 200) {
    const Configuration c = random_config(rng, 10);
    (decide_nonpositive(c).decision ? yes : no).push_back(c);
  }
  yes.resize(200);
  no.resize(200);

  std::uint64_t seed = 1;
  for (const Configuration& c : yes) {
    const RealizedConfiguration real = realize(c, Q, seed++);
    for (int trial = 0; trial < 50; ++trial) {
      const GermPoly f = random_polynomial(Q, rng, 6);
      if (poly_valuation(real, f) > 0) return false;
    }
  }

  // Curated sub-suite: the failing truncation has a low-degree curvette
  // at infinity, so the default budget must find a positive witness.
  std::vector<Configuration> curated{cusp(1)};
  for (const Configuration& c : no) {
    const DFamily fam = d_family(c);
    const int m = c.m();
    for (int i = 1; i <= m; ++i)
      if (intersect(fam.divisors[m], fam.divisors[i]) < 0 && fam.d[i - 1] <= 4) {
        curated.push_back(c);
        break;
      }
  }
  if (curated.size() < 20) return false;
  for (const Configuration& c : curated) {
    const RealizedConfiguration real = realize(c, Q, seed++);
    const WitnessResult res = witness_search(real, WitnessMode::Positive);
    if (!res.f || res.value <= 0) return false;
    if (poly_valuation(real, *res.f) != res.value) return false;
  }
  return true;
}

bool parabola_boundary() {
  const Configuration par = parabola();
  if (!decide_nonpositive(par).decision) return false;
  if (decide_negative(par).decision) return false;
  const RealizedConfiguration real = realize_with(par, Q, {Rat(1), Rat(0)});
  GermPoly canonical;  // x - y^2
  canonical.terms[{1, 0}] = 1;
  canonical.terms[{0, 2}] = -1;
  if (poly_valuation(real, canonical) != 0) return false;
  const WitnessResult res = witness_search(real, WitnessMode::Zero);
  return res.f && res.value == 0 && res.f->total_degree() >= 1 &&
         poly_valuation(real, *res.f) == 0;
}

bool truncation_monotonicity() {
  for (const Configuration& c : seeded_suite(20260823, 1000, 20)) {
    if (!decide_nonpositive(c).decision) continue;
    for (int i = 1; i <= c.m(); ++i)
      if (!decide_nonpositive(truncate(c, i)).decision) return false;
  }
  return true;
}

bool valuation_axioms() {
  std::mt19937_64 rng(808);
  int checks = 0;
  for (int k = 0; k < 20; ++k) {
    const Configuration c = random_config(rng, 8);
    const Field field = k % 4 == 3 ? Field::prime(10007) : Q;
    const RealizedConfiguration real = realize(c, field, 900 + k);
    for (int trial = 0; trial < 500; ++trial, ++checks) {
      const GermPoly f = random_polynomial(field, rng, 2);
      const GermPoly g = random_polynomial(field, rng, 2);
      if (poly_valuation(real, gp_mul(field, f, g)) !=
          poly_valuation(real, f) + poly_valuation(real, g))
        return false;
      const GermPoly sum = gp_add(field, f, g);
      if (!sum.is_zero() &&
          poly_valuation(real, sum) <
              std::min(poly_valuation(real, f), poly_valuation(real, g)))
        return false;
    }
  }
  return checks == 10000;
}

bool eq3_check() {
  std::mt19937_64 rng(909);
  int done = 0;
  while (done < 200) {
    Configuration c = random_config(rng, 12);
    // Force a double-satellite tail.
    const int n = c.m();
    if (n < 2) continue;
    if (!(n >= 3 && c.point(n).is_satellite() && c.point(n - 1).is_satellite())) {
      c.points.push_back(Point::satellite(c.m() - 1));
      c.points.push_back(Point::satellite(c.m() - 1));
    }
    validate(c);
    const ContactInvariants inv = contact_invariants(c);
    const ContactInvariants hat = contact_invariants(truncate(c, c.m() - 1));
    const int g = inv.g();
    if (hat.g() != g) return false;
    const Int lhs = hat.beta_bar[g] * inv.e[g - 1] - hat.e[g - 1] * inv.beta_bar[g];
    if (lhs != 1 && lhs != -1) return false;
    ++done;
  }
  return true;
}

bool determinism() {
  const FamilyReport rep = am_family(4, 4);
  std::vector<Configuration> suite{cusp(), cusp(1), parabola(), rep.config};
  for (const Configuration& c : suite) {
    if (emit_json(analyze(c)) != emit_json(analyze(c))) return false;
    if (emit_json(decide(c)) != emit_json(decide(c))) return false;
    if (export_dot(c) != export_dot(c)) return false;
  }
  if (emit_json(am_family(4, 4)) != emit_json(rep)) return false;
  // Same seed, same realization, same witness.
  const RealizedConfiguration a = realize(cusp(1), Q, 11);
  const RealizedConfiguration b = realize(cusp(1), Q, 11);
  return witness_search(a, WitnessMode::Positive).f == witness_search(b, WitnessMode::Positive).f;
}

}  // namespace

int main() {
  criterion(1, "Example 3 golden run (a=4, r=4)", 1.0, example3_golden);
  criterion(2, "Example 3 sweep a in 4..6, r in [a, a+8]", 10.0, example3_sweep);
  criterion(3, "Lemma 2 property suite (1000 configurations)", 10.0, lemma2_suite);
  criterion(4, "dual basis D_i . B_j = delta_ij", 0.0, dual_basis_suite);
  criterion(5, "Theorem 1 oracle agreement + positive witnesses", 60.0, oracle_agreement);
  criterion(6, "Theorem 2 parabola boundary + zero witness", 0.0, parabola_boundary);
  criterion(7, "Corollary 4 truncation monotonicity", 0.0, truncation_monotonicity);
  criterion(8, "valuation axioms (10000 checks, 20 realizations)", 30.0, valuation_axioms);
  criterion(9, "Eq. (3) on double-satellite tails", 0.0, eq3_check);
  criterion(10, "byte-identical reports and DOT exports", 0.0, determinism);
  return failures == 0 ? 0 : 1;
}
