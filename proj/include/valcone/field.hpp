#pragma once

#include <random>

#include "valcone/errors.hpp"
#include "valcone/numeric.hpp"

namespace valcone {

// Exact coefficient field: the rationals (p = 0) or the prime field F_p.
// F_p elements are stored as integer-valued Rat in [0, p), so one element
// type serves both and polynomial code stays monomorphic.
struct Field {
  unsigned long p = 0;

  static Field rationals() { return {}; }
  // Throws PreconditionViolated unless p is prime.
  static Field prime(unsigned long p);

  unsigned long characteristic() const { return p; }

  // Canonical representative (reduces num * den^-1 mod p when p > 0).
  Rat reduce(const Rat& x) const;

  Rat add(const Rat& a, const Rat& b) const { return reduce(a + b); }
  Rat sub(const Rat& a, const Rat& b) const { return reduce(a - b); }
  Rat mul(const Rat& a, const Rat& b) const { return reduce(a * b); }
  Rat neg(const Rat& a) const { return reduce(-a); }
  Rat inv(const Rat& a) const;
  Rat div(const Rat& a, const Rat& b) const { return mul(a, inv(b)); }

  Rat from_int(long n) const { return reduce(Rat(n)); }

  // Small random element / nonzero element, uniform over F_p when p > 0.
  Rat random(std::mt19937_64& rng) const;
  Rat random_nonzero(std::mt19937_64& rng) const;

  bool operator==(const Field&) const = default;
};

}  // namespace valcone
