#include "valcone/lattice.hpp"

#include <random>

#include "valcone/errors.hpp"

namespace valcone {

namespace {

void check_dim(const DivisorClass& a, const DivisorClass& b) {
  if (a.coeffs.size() != b.coeffs.size())
    throw Error(ErrorCode::DimensionMismatch, "divisor classes live on different surfaces");
}

}  // namespace

DivisorClass& DivisorClass::operator+=(const DivisorClass& rhs) {
  check_dim(*this, rhs);
  for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += rhs.coeffs[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& rhs) {
  check_dim(*this, rhs);
  for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= rhs.coeffs[i];
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rat& scale) {
  for (Rat& c : coeffs) c *= scale;
  return *this;
}

DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
DivisorClass operator*(const Rat& scale, DivisorClass a) { return a *= scale; }

Rat intersect(const DivisorClass& a, const DivisorClass& b) {
  check_dim(a, b);
  Rat result = a.coeffs[0] * b.coeffs[0];
  for (size_t i = 1; i < a.coeffs.size(); ++i) result -= a.coeffs[i] * b.coeffs[i];
  return result;
}

DFamily d_family(const Configuration& config) {
  validate(config);
  const int m = config.m();
  DFamily fam;
  DivisorClass d0 = DivisorClass::zero(m);
  d0.coeffs[0] = 1;  // D_0 := E_0
  fam.divisors.push_back(d0);
  for (int i = 1; i <= m; ++i) {
    const std::vector<Int> mult = multiplicity_vector(config, i);
    Int d = 0;
    for (int j = 0; j < std::min(config.s, i); ++j) d += mult[j];
    DivisorClass D = DivisorClass::zero(m);
    D.coeffs[0] = Rat(d);
    Int sq = d * d;
    for (int j = 1; j <= i; ++j) {
      D.coeffs[j] = -Rat(mult[j - 1]);
      sq -= mult[j - 1] * mult[j - 1];
    }
    fam.d.push_back(d);
    fam.self_int.push_back(sq);
    fam.divisors.push_back(std::move(D));
  }
  return fam;
}

BasisChange strict_basis_change(const Configuration& config) {
  validate(config);
  const int m = config.m();
  BasisChange bc;
  bc.total_to_strict.assign(m + 1, std::vector<Int>(m + 1, 0));
  for (int i = 0; i <= m; ++i) bc.total_to_strict[i][i] = 1;
  for (int i = 1; i <= m; ++i)
    for (int k : proximate_points(config, i, m)) bc.total_to_strict[i][k] = -1;

  // Unit upper-triangular on exceptional indices; invert by forward
  // substitution.
  bc.strict_to_total.assign(m + 1, std::vector<Int>(m + 1, 0));
  for (int i = m; i >= 0; --i) {
    bc.strict_to_total[i][i] = 1;
    for (int k = i + 1; k <= m; ++k) {
      Int acc = 0;
      for (int t = i + 1; t <= k; ++t) acc += bc.total_to_strict[i][t] * bc.strict_to_total[t][k];
      bc.strict_to_total[i][k] = -acc;
    }
  }
  return bc;
}

DivisorClass strict_exceptional(const Configuration& config, int i) {
  const int m = config.m();
  DivisorClass E = DivisorClass::zero(m);
  E.coeffs[i] = 1;
  for (int k : proximate_points(config, i, m)) E.coeffs[k] = -1;
  return E;
}

DivisorClass line_class(const Configuration& config) {
  const int m = config.m();
  DivisorClass L = DivisorClass::zero(m);
  L.coeffs[0] = 1;
  for (int j = 1; j <= config.s; ++j) L.coeffs[j] = -1;
  return L;
}

DivisorClass canonical_class(int m) {
  DivisorClass K = DivisorClass::zero(m);
  K.coeffs[0] = -3;
  for (int i = 1; i <= m; ++i) K.coeffs[i] = 1;
  return K;
}

bool lemma1_nonneg(const DivisorClass& D) {
  if (D.coeffs[0] <= 0)
    throw Error(ErrorCode::NonPositiveDegree, "lemma1_nonneg needs d > 0");
  for (size_t i = 1; i < D.coeffs.size(); ++i)
    if (-D.coeffs[i] < 0)
      throw Error(ErrorCode::NegativeMultiplicity, "lemma1_nonneg needs r_i >= 0");
  return self_intersection(D) >= 0;
}

std::vector<DivisorClass> sample_Q(int m, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-1000, 1000);
  std::vector<DivisorClass> out;
  out.reserve(count);
  for (int n = 0; n < count; ++n) {
    std::vector<Int> raw(m);
    Int sq = 0;
    for (Int& r : raw) {
      r = coord(rng);
      sq += r * r;
    }
    // Scale into the unit ball: q = isqrt(sum r_i^2) + 1.
    Int q;
    mpz_sqrt(q.get_mpz_t(), sq.get_mpz_t());
    q += 1;
    DivisorClass x = DivisorClass::zero(m);
    x.coeffs[0] = 1;
    for (int i = 1; i <= m; ++i) {
      x.coeffs[i] = Rat(raw[i - 1], q);
      x.coeffs[i].canonicalize();
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Rat> effective_decomposition(const Configuration& config, int j) {
  const DFamily fam = d_family(config);
  const int m = config.m();
  if (fam.self_int[m - 1] < 0)
    throw Error(ErrorCode::NotNonPositive,
                "effective decomposition needs a regular cone of curves");
  std::vector<Rat> coeffs;
  for (int i = 0; i <= m; ++i) coeffs.push_back(intersect(fam.divisors[j], fam.divisors[i]));
  return coeffs;
}

}  // namespace valcone
