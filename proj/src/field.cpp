#include "valcone/field.hpp"

namespace valcone {

Field Field::prime(unsigned long p) {
  Int z(static_cast<long>(p));
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
    throw Error(ErrorCode::PreconditionViolated, "not a prime: " + std::to_string(p));
  return {p};
}

Rat Field::reduce(const Rat& x) const {
  if (p == 0) return x;
  const Int mod(static_cast<long>(p));
  Int den_inv;
  if (mpz_invert(den_inv.get_mpz_t(), x.get_den().get_mpz_t(), mod.get_mpz_t()) == 0)
    throw Error(ErrorCode::Unsupported,
                "denominator vanishes modulo " + std::to_string(p));
  Int r = (x.get_num() % mod) * den_inv % mod;
  if (r < 0) r += mod;
  return Rat(r);
}

Rat Field::inv(const Rat& a) const {
  const Rat r = reduce(a);
  if (r == 0) throw Error(ErrorCode::PreconditionViolated, "division by zero");
  if (p == 0) return 1 / r;
  const Int mod(static_cast<long>(p));
  Int out;
  mpz_invert(out.get_mpz_t(), r.get_num().get_mpz_t(), mod.get_mpz_t());
  return Rat(out);
}

Rat Field::random(std::mt19937_64& rng) const {
  if (p == 0) {
    std::uniform_int_distribution<long> d(-20, 20);
    return Rat(d(rng));
  }
  std::uniform_int_distribution<unsigned long> d(0, p - 1);
  return Rat(static_cast<long>(d(rng)));
}

Rat Field::random_nonzero(std::mt19937_64& rng) const {
  if (p == 1) throw Error(ErrorCode::FieldTooSmall, "no nonzero elements");
  for (int tries = 0; tries < 64; ++tries) {
    Rat x = random(rng);
    if (x != 0) return x;
  }
  throw Error(ErrorCode::FieldTooSmall, "could not sample a nonzero element");
}

}  // namespace valcone
