#include "valcone/contact.hpp"

#include <algorithm>

namespace valcone {

namespace {

// gcd chain e_j = gcd(beta_bar_0..beta_bar_j) of a generator prefix.
std::vector<Int> gcd_chain(const std::vector<Int>& gen) {
  std::vector<Int> e;
  Int cur = 0;
  for (const Int& b : gen) {
    cur = gcd(cur, b);
    e.push_back(cur);
  }
  return e;
}

void require_positive(const std::vector<Int>& beta_bar) {
  for (const Int& b : beta_bar)
    if (b <= 0)
      throw Error(ErrorCode::InvalidContactSequence, "contact values must be positive");
}

}  // namespace

ContactInvariants contact_invariants(const Configuration& config) {
  validate(config);
  const int m = config.m();
  ContactInvariants ci;
  ci.mult = multiplicity_vector(config, m);

  const std::vector<int> blocks = satellite_block_starts(config);
  ci.beta_bar.push_back(ci.mult[0]);
  for (int start : blocks) {
    // beta_bar_j is the value of the maximal contact curvette at the last
    // free point before the j-th satellite block.
    const int c = start - 1;
    const std::vector<Int> phi = multiplicity_vector(config, c);
    Int value = 0;
    for (int k = 0; k < c; ++k) value += ci.mult[k] * phi[k];
    ci.beta_bar.push_back(value);
  }
  Int last = 0;
  for (const Int& mu : ci.mult) last += mu * mu;
  ci.beta_bar.push_back(last);

  const int g = static_cast<int>(blocks.size());
  ci.e = gcd_chain({ci.beta_bar.begin(), ci.beta_bar.begin() + g + 1});
  ci.N.push_back(0);
  for (int j = 1; j <= g; ++j) ci.N.push_back(ci.e[j - 1] / ci.e[j]);
  ci.puiseux = puiseux_from_contact(ci.beta_bar);
  return ci;
}

std::vector<Rat> puiseux_from_contact(const std::vector<Int>& beta_bar) {
  require_positive(beta_bar);
  const int n = static_cast<int>(beta_bar.size());
  if (n < 2) throw Error(ErrorCode::InvalidContactSequence, "need beta_bar_0 and beta_bar_{g+1}");
  const std::vector<Int> e = gcd_chain({beta_bar.begin(), beta_bar.end() - 1});
  const int g = n - 2;
  for (int j = 1; j <= g; ++j)
    if (e[j] >= e[j - 1])
      throw Error(ErrorCode::InvalidContactSequence, "gcd chain not strictly decreasing");
  if (e[g] != 1)
    throw Error(ErrorCode::InvalidContactSequence, "gcd chain does not reach 1 at level g");

  std::vector<Rat> puiseux;
  puiseux.emplace_back(beta_bar[0]);
  for (int j = 1; j <= g + 1; ++j) {
    const Int N_prev = (j == 1) ? Int(0) : e[j - 2] / e[j - 1];
    Rat b(beta_bar[j] - N_prev * beta_bar[j - 1]);
    b /= Rat(e[j - 1]);
    puiseux.push_back(b);
  }
  return puiseux;
}

std::vector<Int> contact_from_puiseux(const std::vector<Rat>& puiseux) {
  const int n = static_cast<int>(puiseux.size());
  if (n < 2) throw Error(ErrorCode::InvalidContactSequence, "need beta'_0 and beta'_{g+1}");
  if (puiseux[0].get_den() != 1 || puiseux[0] <= 0)
    throw Error(ErrorCode::InvalidContactSequence, "beta'_0 must be a positive integer");

  std::vector<Int> beta_bar{puiseux[0].get_num()};
  std::vector<Int> e{beta_bar[0]};
  for (int j = 1; j < n; ++j) {
    const Int N_prev = (j == 1) ? Int(0) : e[j - 2] / e[j - 1];
    const Rat b = Rat(e[j - 1]) * puiseux[j] + Rat(N_prev * beta_bar[j - 1]);
    if (b.get_den() != 1 || b <= 0)
      throw Error(ErrorCode::InvalidContactSequence, "beta'_" + std::to_string(j) +
                                                         " incompatible with gcd chain");
    beta_bar.push_back(b.get_num());
    e.push_back(gcd(e[j - 1], beta_bar[j]));
  }
  const int g = n - 2;
  for (int j = 1; j <= g; ++j)
    if (e[j] >= e[j - 1])
      throw Error(ErrorCode::InvalidContactSequence, "gcd chain not strictly decreasing");
  if (e[g] != 1)
    throw Error(ErrorCode::InvalidContactSequence, "gcd chain does not reach 1 at level g");
  return beta_bar;
}

Configuration configuration_from_contact(const std::vector<Int>& beta_bar, int s,
                                         int trailing_free) {
  require_positive(beta_bar);
  if (trailing_free < 0)
    throw Error(ErrorCode::InvalidContactSequence, "trailing_free must be nonnegative");
  const int n = static_cast<int>(beta_bar.size());
  if (n < 1) throw Error(ErrorCode::InvalidContactSequence, "empty contact sequence");

  // Split into generator prefix and trailing-free count.
  std::vector<Int> gen;
  Int tail_free = trailing_free;
  if (n >= 2 && gcd_chain({beta_bar.begin(), beta_bar.end() - 1}).back() == 1) {
    // Full sequence: the last entry is beta_bar_{g+1}.
    if (trailing_free != 0)
      throw Error(ErrorCode::InvalidContactSequence,
                  "trailing_free given together with beta_bar_{g+1}");
    gen.assign(beta_bar.begin(), beta_bar.end() - 1);
    const int g = static_cast<int>(gen.size()) - 1;
    const Int base = (g == 0) ? Int(1)  // free chain: beta_bar_1 counts the points
                              : gcd_chain(gen)[g - 1] * gen[g];
    tail_free = beta_bar[n - 1] - base;
    if (tail_free < 0)
      throw Error(ErrorCode::InvalidContactSequence, "beta_bar_{g+1} below its satellite floor");
  } else {
    gen = beta_bar;
  }

  const int g = static_cast<int>(gen.size()) - 1;
  const std::vector<Int> e = gcd_chain(gen);
  if (e[g] != 1)
    throw Error(ErrorCode::InvalidContactSequence, "gcd chain does not reach 1");
  for (int j = 1; j <= g; ++j)
    if (e[j] >= e[j - 1])
      throw Error(ErrorCode::InvalidContactSequence, "gcd chain not strictly decreasing");
  if (g >= 1 && gen[1] <= gen[0])
    throw Error(ErrorCode::InvalidContactSequence, "beta_bar_1 must exceed beta_bar_0");

  // Each level contributes the subtractive-Euclid staircase of
  // (beta_bar_j - N_{j-1} beta_bar_{j-1}, e_{j-1}) to the multiplicity
  // sequence.
  std::vector<Int> mult;
  for (int j = 1; j <= g; ++j) {
    const Int N_prev = (j == 1) ? Int(0) : e[j - 2] / e[j - 1];
    Int a = gen[j] - N_prev * gen[j - 1];
    Int b = e[j - 1];
    if (a <= 0)
      throw Error(ErrorCode::InvalidContactSequence,
                  "beta_bar_" + std::to_string(j) + " below its semigroup floor");
    while (a > 0 && b > 0) {
      if (a >= b) {
        mult.push_back(b);
        a -= b;
      } else {
        mult.push_back(a);
        b -= a;
      }
    }
  }
  if (mult.empty()) mult.push_back(1);  // g = 0: a bare free chain
  for (Int t = 0; t < tail_free; ++t) mult.push_back(1);

  Configuration config = configuration_from_multiplicities(mult, 1);
  if (s < 1 || s > initial_free_chain(config))
    throw Error(ErrorCode::InconsistentLineContact,
                "s=" + std::to_string(s) + " exceeds the initial free chain");
  config.s = s;
  return config;
}

bool semigroup_contains(const std::vector<Int>& generators, const Int& n) {
  if (n < 0) return false;
  if (n == 0) return true;
  if (!n.fits_ulong_p() || n > 100000000)
    throw Error(ErrorCode::Unsupported, "semigroup membership bound too large");
  const unsigned long bound = n.get_ui();
  std::vector<char> table(bound + 1, 0);
  table[0] = 1;
  for (const Int& gen : generators) {
    if (gen <= 0)
      throw Error(ErrorCode::PreconditionViolated, "semigroup generators must be positive");
    if (!gen.fits_ulong_p() || gen > n) continue;
    const unsigned long gu = gen.get_ui();
    for (unsigned long v = gu; v <= bound; ++v)
      if (table[v - gu]) table[v] = 1;
  }
  return table[bound] != 0;
}

}  // namespace valcone
