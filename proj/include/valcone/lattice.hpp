#pragma once

#include <cstdint>
#include <vector>

#include "valcone/config.hpp"
#include "valcone/contact.hpp"

namespace valcone {

// Element of Pic_Q(X) in the total-transform basis (E_0*, E_1*, ..., E_m*).
// The intersection form is diagonal: E_0*^2 = 1, E_i*^2 = -1.
struct DivisorClass {
  std::vector<Rat> coeffs;  // length m + 1

  int m() const { return static_cast<int>(coeffs.size()) - 1; }
  static DivisorClass zero(int m) { return {std::vector<Rat>(m + 1, Rat(0))}; }
  bool operator==(const DivisorClass&) const = default;

  DivisorClass& operator+=(const DivisorClass& rhs);
  DivisorClass& operator-=(const DivisorClass& rhs);
  DivisorClass& operator*=(const Rat& scale);
};

DivisorClass operator+(DivisorClass a, const DivisorClass& b);
DivisorClass operator-(DivisorClass a, const DivisorClass& b);
DivisorClass operator*(const Rat& scale, DivisorClass a);

Rat intersect(const DivisorClass& a, const DivisorClass& b);
inline Rat self_intersection(const DivisorClass& a) { return intersect(a, a); }

// The divisor family of the valuation: D_0 = E_0 and, for i >= 1,
// D_i = d_i E_0* - sum_j mult_{p_j}(phi_i) E_j* with d_i given by Noether's
// formula from the line contact count s.
struct DFamily {
  std::vector<Int> d;                  // d_1, ..., d_m
  std::vector<DivisorClass> divisors;  // D_0, D_1, ..., D_m
  std::vector<Int> self_int;           // D_1^2, ..., D_m^2 (D_0^2 = 1)
  bool operator==(const DFamily&) const = default;
};

DFamily d_family(const Configuration& config);

// Change of basis between total and strict transforms on exceptional
// indices (extended by the identity on index 0). first = total -> strict
// rows (E_i in the E_j* basis), second = its inverse.
struct BasisChange {
  std::vector<std::vector<Int>> total_to_strict;
  std::vector<std::vector<Int>> strict_to_total;
};

BasisChange strict_basis_change(const Configuration& config);

// Class of the strict transform of a single exceptional divisor, and of
// the line at infinity L.
DivisorClass strict_exceptional(const Configuration& config, int i);
DivisorClass line_class(const Configuration& config);

DivisorClass canonical_class(int m);

// Lemma-1 test for D = d E_0* - sum r_i E_i* with d > 0 and r_i >= 0:
// D.x >= 0 for all x in Q(X) iff D^2 >= 0.
bool lemma1_nonneg(const DivisorClass& D);

// Deterministic sampler of Q(X) elements x = E_0* - sum x_i E_i* with
// sum x_i^2 <= 1.
std::vector<DivisorClass> sample_Q(int m, int count, std::uint64_t seed);

// Coefficients of D_j over the basis (L~, E_1, ..., E_m); nonnegative when
// the cone of curves is regular.
std::vector<Rat> effective_decomposition(const Configuration& config, int j);

}  // namespace valcone
