#pragma once

#include <optional>
#include <vector>

#include "valcone/lattice.hpp"

namespace valcone {

// Candidate generators of the semigroup at infinity -nu(k[x,y]).
struct DeltaSequence {
  std::vector<Int> delta;
  bool operator==(const DeltaSequence&) const = default;
};

struct NonPositiveVerdict {
  bool decision = false;
  Int d_m;
  Int beta_last;  // \bar{beta}_{g+1}
  Int D_m_sq;

  bool recompute() const { return d_m * d_m >= beta_last; }
  bool operator==(const NonPositiveVerdict&) const = default;
};

// One stage of the Abhyankar-Moh semigroup condition.
struct SemigroupStage {
  Int gcd_prefix;
  Int delta;
  Int product;  // gcd_prefix * delta
  bool member = false;
  bool operator==(const SemigroupStage&) const = default;
};

struct IitakaClass {
  int kappa = 0;  // 0, 1 or 2 here (the -inf case never arises for the D_i)
  enum class Basis { Big, AmRealizable, AmObstructed } basis = Basis::Big;
  Int self_int;
  std::optional<DeltaSequence> delta;  // boundary case only
  bool operator==(const IitakaClass&) const = default;
};

struct NegativeVerdict {
  bool decision = false;
  NonPositiveVerdict nonpositive;
  std::optional<IitakaClass> boundary_kappa;
  bool operator==(const NegativeVerdict&) const = default;
};

struct CoxEntry {
  int index = 0;
  Int self_int;
  std::optional<IitakaClass> kappa;
  bool ok = false;
  bool operator==(const CoxEntry&) const = default;
};

struct CoxVerdict {
  bool decision = false;  // also: characteristic cone closed
  std::vector<CoxEntry> entries;
  bool operator==(const CoxVerdict&) const = default;
};

struct AnticanonicalVerdict {
  bool decision = false;
  std::optional<int> witness_index;
  Rat witness_pairing;
  bool operator==(const AnticanonicalVerdict&) const = default;
};

struct ConeGenerators {
  std::vector<DivisorClass> ne;   // L~, E_1, ..., E_m (total basis)
  std::vector<DivisorClass> nef;  // D_0, ..., D_m
};

// Theorem-1 decider: d_m^2 >= beta_{g+1} iff NE(X) regular iff D_m nef iff
// nu <= 0 on k[x,y].
NonPositiveVerdict decide_nonpositive(const Configuration& config);

// NE / nef generators when the cone is regular; throws NotRegular otherwise.
ConeGenerators cone_generators(const Configuration& config);
bool is_nef(const Configuration& config, const DivisorClass& D);

// Stagewise condition gcd(delta_0..delta_{i-1}) * delta_i in
// <delta_0..delta_{i-1}>.
bool am_realizable(const DeltaSequence& delta);
std::vector<SemigroupStage> am_stages(const DeltaSequence& delta);

DeltaSequence delta_sequence(const Configuration& config);

// Iitaka dimension of D_i under the Theorem-1 hypotheses. The boundary
// branch (D_i^2 = 0) assumes characteristic zero; pass the realization
// characteristic to get an Unsupported error instead of a silent guess.
IitakaClass kappa(const Configuration& config, int i, unsigned characteristic = 0);

NegativeVerdict decide_negative(const Configuration& config, unsigned characteristic = 0);
CoxVerdict decide_cox(const Configuration& config, unsigned characteristic = 0);
AnticanonicalVerdict anticanonical_negative_infinity(const Configuration& config);

// Example-3 family: beta = (a, ar^2-r-1, a(ar^2-r-1)+1), s = r.
struct FamilyReport {
  long a = 0;
  long r = 0;
  Configuration config;
  NonPositiveVerdict nonpositive;
  NegativeVerdict negative;
  CoxVerdict cox;
  AnticanonicalVerdict anticanonical;
  DeltaSequence delta;
  bool delta_obstructed = false;  // am_realizable(delta) is false
  bool operator==(const FamilyReport&) const = default;
};

FamilyReport am_family(long a, long r);

}  // namespace valcone
