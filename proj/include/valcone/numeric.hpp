#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace valcone {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Parses "p/q" or "p" with arbitrary precision; throws std::invalid_argument on garbage.
Rat parse_rational(const std::string& text);

inline std::string to_string(const Int& z) { return z.get_str(); }

inline std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::vector<std::string> to_strings(const std::vector<Int>& v);
std::vector<std::string> to_strings(const std::vector<Rat>& v);

}  // namespace valcone
