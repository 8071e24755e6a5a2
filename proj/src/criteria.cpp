#include "valcone/criteria.hpp"

#include <algorithm>

#include "valcone/errors.hpp"

namespace valcone {

NonPositiveVerdict decide_nonpositive(const Configuration& config) {
  const ContactInvariants ci = contact_invariants(config);
  const DFamily fam = d_family(config);
  NonPositiveVerdict v;
  v.d_m = fam.d.back();
  v.beta_last = ci.beta_bar.back();
  v.D_m_sq = fam.self_int.back();
  v.decision = v.d_m * v.d_m >= v.beta_last;
  return v;
}

ConeGenerators cone_generators(const Configuration& config) {
  if (!decide_nonpositive(config).decision)
    throw Error(ErrorCode::NotRegular, "cone of curves is not regular");
  ConeGenerators gens;
  gens.ne.push_back(line_class(config));
  for (int i = 1; i <= config.m(); ++i) gens.ne.push_back(strict_exceptional(config, i));
  gens.nef = d_family(config).divisors;
  return gens;
}

bool is_nef(const Configuration& config, const DivisorClass& D) {
  const ConeGenerators gens = cone_generators(config);
  for (const DivisorClass& g : gens.ne)
    if (intersect(D, g) < 0) return false;
  return true;
}

std::vector<SemigroupStage> am_stages(const DeltaSequence& delta) {
  std::vector<SemigroupStage> stages;
  const auto& d = delta.delta;
  for (size_t i = 1; i < d.size(); ++i) {
    SemigroupStage st;
    st.gcd_prefix = d[0];
    for (size_t j = 1; j < i; ++j) st.gcd_prefix = gcd(st.gcd_prefix, d[j]);
    st.delta = d[i];
    st.product = st.gcd_prefix * st.delta;
    st.member = semigroup_contains({d.begin(), d.begin() + i}, st.product);
    stages.push_back(std::move(st));
  }
  return stages;
}

bool am_realizable(const DeltaSequence& delta) {
  for (const SemigroupStage& st : am_stages(delta))
    if (!st.member) return false;
  return true;
}

DeltaSequence delta_sequence(const Configuration& config) {
  const ContactInvariants ci = contact_invariants(config);
  const DFamily fam = d_family(config);
  const Int d_m = fam.d.back();

  DeltaSequence seq;
  seq.delta.push_back(d_m);  // delta_0 = -nu(x)
  // delta_1 = -nu(y) for a generic y-direction: the y-germ passes through
  // p_1 only, so nu(y) = beta_0 - nu(v).
  const Int delta1 = d_m - ci.beta_bar[0];
  if (delta1 < 0)
    throw Error(ErrorCode::NonPositiveDelta, "delta_1 negative");
  if (delta1 > 0) seq.delta.push_back(delta1);
  // Higher deltas come from the maximal contact curvettes: the curvette at
  // the last free point before block j has degree d_{c_j} and value
  // beta_j, hence -nu = d_{c_j} d_m - beta_j.
  const std::vector<int> blocks = satellite_block_starts(config);
  for (size_t j = 0; j < blocks.size(); ++j) {
    const int c = blocks[j] - 1;
    const Int value = fam.d[c - 1] * d_m - ci.beta_bar[j + 1];
    if (value <= 0)
      throw Error(ErrorCode::NonPositiveDelta,
                  "delta for satellite block " + std::to_string(j + 1) + " is nonpositive");
    seq.delta.push_back(value);
  }
  return seq;
}

IitakaClass kappa(const Configuration& config, int i, unsigned characteristic) {
  if (!decide_nonpositive(config).decision)
    throw Error(ErrorCode::NotNonPositive, "kappa needs the Theorem-1 hypotheses");
  const DFamily fam = d_family(config);
  IitakaClass k;
  k.self_int = fam.self_int[i - 1];
  if (k.self_int > 0) {
    k.kappa = 2;
    k.basis = IitakaClass::Basis::Big;
    return k;
  }
  if (characteristic != 0)
    throw Error(ErrorCode::Unsupported,
                "kappa boundary decision assumes characteristic zero");
  k.delta = delta_sequence(truncate(config, i));
  if (am_realizable(*k.delta)) {
    k.kappa = 1;
    k.basis = IitakaClass::Basis::AmRealizable;
  } else {
    k.kappa = 0;
    k.basis = IitakaClass::Basis::AmObstructed;
  }
  return k;
}

NegativeVerdict decide_negative(const Configuration& config, unsigned characteristic) {
  NegativeVerdict v;
  v.nonpositive = decide_nonpositive(config);
  if (!v.nonpositive.decision) {
    v.decision = false;
    return v;
  }
  if (v.nonpositive.D_m_sq > 0) {
    v.decision = true;
    return v;
  }
  v.boundary_kappa = kappa(config, config.m(), characteristic);
  v.decision = v.boundary_kappa->kappa == 0;
  return v;
}

CoxVerdict decide_cox(const Configuration& config, unsigned characteristic) {
  if (!decide_nonpositive(config).decision)
    throw Error(ErrorCode::NotNonPositive, "Cox criterion needs the Theorem-1 hypotheses");
  const DFamily fam = d_family(config);
  CoxVerdict v;
  v.decision = true;
  for (int i = 2; i <= config.m(); ++i) {
    CoxEntry entry;
    entry.index = i;
    entry.self_int = fam.self_int[i - 1];
    if (entry.self_int > 0) {
      entry.ok = true;
    } else {
      entry.kappa = kappa(config, i, characteristic);
      entry.ok = entry.kappa->kappa > 0;
    }
    v.decision = v.decision && entry.ok;
    v.entries.push_back(std::move(entry));
  }
  return v;
}

AnticanonicalVerdict anticanonical_negative_infinity(const Configuration& config) {
  if (!decide_nonpositive(config).decision)
    throw Error(ErrorCode::NotNonPositive, "needs the Theorem-1 hypotheses");
  const DFamily fam = d_family(config);
  const DivisorClass K = canonical_class(config.m());
  AnticanonicalVerdict v;
  for (int i = 0; i <= config.m(); ++i) {
    const Rat pairing = intersect(fam.divisors[i], K);
    if (pairing > 0) {
      v.decision = true;
      v.witness_index = i;
      v.witness_pairing = pairing;
      return v;
    }
  }
  v.decision = false;
  return v;
}

FamilyReport am_family(long a, long r) {
  if (!(r >= a && a >= 4))
    throw Error(ErrorCode::PreconditionViolated, "need r >= a >= 4");
  if (gcd(Int(a), Int(r + 1)) != 1)
    throw Error(ErrorCode::PreconditionViolated, "need gcd(a, r+1) = 1");
  FamilyReport rep;
  rep.a = a;
  rep.r = r;
  const Int beta0 = a;
  const Int beta1 = Int(a) * r * r - r - 1;
  const Int beta2 = beta0 * beta1 + 1;
  rep.config = configuration_from_contact({beta0, beta1, beta2}, static_cast<int>(r));
  rep.nonpositive = decide_nonpositive(rep.config);
  rep.negative = decide_negative(rep.config);
  rep.cox = decide_cox(rep.config);
  rep.anticanonical = anticanonical_negative_infinity(rep.config);
  rep.delta = delta_sequence(rep.config);
  rep.delta_obstructed = !am_realizable(rep.delta);
  return rep;
}

}  // namespace valcone
