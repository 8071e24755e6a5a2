#pragma once

#include <vector>

#include "valcone/config.hpp"
#include "valcone/numeric.hpp"

namespace valcone {

// Numerical invariants of the valuation: maximal contact values, Puiseux
// exponents, gcd chain and the curvette multiplicity vector.
struct ContactInvariants {
  std::vector<Int> beta_bar;  // beta_bar[j] = \bar{beta}_j, 0 <= j <= g+1
  std::vector<Rat> puiseux;   // beta'_0 ... beta'_{g+1}
  std::vector<Int> e;         // e_j = gcd(beta_bar_0..beta_bar_j), 0 <= j <= g
  std::vector<Int> N;         // N_0 = 0, N_j = e_{j-1}/e_j
  std::vector<Int> mult;      // multiplicities of the generic curvette

  int g() const { return static_cast<int>(e.size()) - 1; }
  bool operator==(const ContactInvariants&) const = default;
};

ContactInvariants contact_invariants(const Configuration& config);

// Conversions between the contact-value and Puiseux-exponent encodings.
// Input to puiseux_from_contact is the full sequence beta_bar_0..beta_bar_{g+1}.
std::vector<Rat> puiseux_from_contact(const std::vector<Int>& beta_bar);
std::vector<Int> contact_from_puiseux(const std::vector<Rat>& puiseux);

// Builds the configuration whose contact values match beta_bar. The input
// is either the generator sequence beta_bar_0..beta_bar_g (then
// trailing_free free points are appended after the last satellite), or the
// full sequence ending in beta_bar_{g+1} (recognized by the gcd of the
// prefix already being 1; trailing_free must then be 0, the count is read
// off beta_bar_{g+1}).
Configuration configuration_from_contact(const std::vector<Int>& beta_bar, int s,
                                         int trailing_free = 0);

// True iff n is a nonnegative integer combination of the generators.
bool semigroup_contains(const std::vector<Int>& generators, const Int& n);

}  // namespace valcone
