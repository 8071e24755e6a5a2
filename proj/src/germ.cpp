#include "valcone/germ.hpp"

#include <algorithm>

#include "valcone/lattice.hpp"

namespace valcone {

int GermPoly::total_degree() const {
  int d = -1;
  for (const auto& [key, c] : terms) d = std::max(d, key.first + key.second);
  return d;
}

int GermPoly::order() const {
  if (terms.empty()) return -1;
  int o = -1;
  for (const auto& [key, c] : terms) {
    const int t = key.first + key.second;
    if (o < 0 || t < o) o = t;
  }
  return o;
}

GermPoly gp_monomial(int a, int b, const Rat& coeff) {
  GermPoly out;
  if (coeff != 0) out.terms[{a, b}] = coeff;
  return out;
}

GermPoly gp_add(const Field& k, const GermPoly& a, const GermPoly& b) {
  GermPoly out = a;
  for (const auto& [key, c] : b.terms) {
    Rat& dst = out.terms[key];
    dst = k.add(dst, c);
    if (dst == 0) out.terms.erase(key);
  }
  return out;
}

GermPoly gp_scale(const Field& k, const GermPoly& a, const Rat& c) {
  GermPoly out;
  if (k.reduce(c) == 0) return out;
  for (const auto& [key, x] : a.terms) {
    Rat v = k.mul(x, c);
    if (v != 0) out.terms[key] = v;
  }
  return out;
}

GermPoly gp_sub(const Field& k, const GermPoly& a, const GermPoly& b) {
  return gp_add(k, a, gp_scale(k, b, Rat(-1)));
}

GermPoly gp_mul(const Field& k, const GermPoly& a, const GermPoly& b) {
  GermPoly out;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      const std::pair<int, int> key{ka.first + kb.first, ka.second + kb.second};
      Rat& dst = out.terms[key];
      dst = k.add(dst, k.mul(ca, cb));
      if (dst == 0) out.terms.erase(key);
    }
  return out;
}

namespace {

// Powers A^0..A^n, reused across the terms of one substitution.
std::vector<GermPoly> gp_powers(const Field& k, const GermPoly& base, int n) {
  std::vector<GermPoly> pow(n + 1);
  pow[0] = gp_monomial(0, 0);
  for (int i = 1; i <= n; ++i) pow[i] = gp_mul(k, pow[i - 1], base);
  return pow;
}

}  // namespace

GermPoly gp_compose(const Field& k, const GermPoly& h, const GermPoly& A, const GermPoly& B) {
  int maxa = 0, maxb = 0;
  for (const auto& [key, c] : h.terms) {
    maxa = std::max(maxa, key.first);
    maxb = std::max(maxb, key.second);
  }
  const auto powA = gp_powers(k, A, maxa);
  const auto powB = gp_powers(k, B, maxb);
  GermPoly out;
  for (const auto& [key, c] : h.terms)
    out = gp_add(k, out, gp_scale(k, gp_mul(k, powA[key.first], powB[key.second]), c));
  return out;
}

GermPoly gp_div_upow(const GermPoly& a, int n) {
  GermPoly out;
  for (const auto& [key, c] : a.terms) {
    if (key.first < n)
      throw Error(ErrorCode::PreconditionViolated, "inexact division by exceptional power");
    out.terms[{key.first - n, key.second}] = c;
  }
  return out;
}

// --- realization -----------------------------------------------------------

namespace {

ChartStep step_free(const Rat& c) {
  ChartStep st;
  st.u_image = gp_monomial(1, 0);
  st.v_image = gp_add(Field::rationals(), gp_monomial(1, 1), gp_monomial(1, 0, c));
  st.param = c;
  return st;
}

// Next point at the intersection of the fresh exceptional with the strict
// transform of the divisor {v = 0}.
ChartStep step_corner_v() {
  ChartStep st;
  st.u_image = gp_monomial(1, 0);
  st.v_image = gp_monomial(1, 1);
  st.forced = true;
  return st;
}

// Next point at the intersection with the strict transform of {u = 0},
// i.e. the previous exceptional divisor.
ChartStep step_corner_u() {
  ChartStep st;
  st.u_image = gp_monomial(1, 1);
  st.v_image = gp_monomial(1, 0);
  st.forced = true;
  return st;
}

RealizedConfiguration build_realization(const Configuration& config, const Field& field,
                                        const std::vector<Rat>* params, std::uint64_t seed) {
  validate(config);
  RealizedConfiguration real;
  real.config = config;
  real.field = field;
  real.seed = seed;
  real.mult = multiplicity_vector(config, config.m());
  real.d_m = 0;
  for (int j = 1; j <= config.s; ++j) real.d_m += real.mult[j - 1];

  std::mt19937_64 rng(seed);
  std::size_t next_param = 0;
  // Chart at p_i keeps the previous exceptional at {u = 0}; marked tracks
  // whether a marked divisor (L or an older exceptional) sits at {v = 0}.
  bool marked = true;  // L = {v = 0} at p_1
  for (int i = 1; i < config.m(); ++i) {
    const Point& q = config.point(i + 1);
    if (q.is_satellite()) {
      real.charts.push_back(q.target == i - 1 ? step_corner_u() : step_corner_v());
      marked = true;
    } else if (i + 1 <= config.s) {
      real.charts.push_back(step_corner_v());  // forced onto L
    } else {
      Rat c;
      if (params) {
        if (next_param >= params->size())
          throw Error(ErrorCode::BadLength, "not enough free-direction parameters");
        c = field.reduce((*params)[next_param++]);
        if (marked && c == 0)
          throw Error(ErrorCode::PreconditionViolated,
                      "free direction collides with a marked divisor at p_" +
                          std::to_string(i + 1));
      } else {
        c = field.random_nonzero(rng);
      }
      real.charts.push_back(step_free(c));
      marked = false;
    }
  }
  return real;
}

}  // namespace

RealizedConfiguration realize(const Configuration& config, const Field& field,
                              std::uint64_t seed) {
  return build_realization(config, field, nullptr, seed);
}

RealizedConfiguration realize_with(const Configuration& config, const Field& field,
                                   const std::vector<Rat>& params) {
  return build_realization(config, field, &params, 0);
}

// --- valuation -------------------------------------------------------------

std::vector<Int> germ_multiplicities(const RealizedConfiguration& real, const GermPoly& h) {
  if (h.is_zero()) throw Error(ErrorCode::ZeroGerm, "zero germ has no valuation");
  const int m = real.config.m();
  std::vector<Int> mults(m, 0);
  GermPoly t = h;
  for (int i = 1; i <= m; ++i) {
    const int o = t.order();
    if (o == 0) break;  // strict transform misses p_i, hence all later points
    mults[i - 1] = o;
    if (i < m) {
      const ChartStep& st = real.charts[i - 1];
      t = gp_div_upow(gp_compose(real.field, t, st.u_image, st.v_image), o);
    }
  }
  return mults;
}

Int germ_valuation(const RealizedConfiguration& real, const GermPoly& h) {
  const std::vector<Int> mults = germ_multiplicities(real, h);
  Int value = 0;
  for (int j = 0; j < real.config.m(); ++j) value += real.mult[j] * mults[j];
  return value;
}

GermPoly germ_at_infinity(const GermPoly& f) {
  const int d = f.total_degree();
  GermPoly h;
  for (const auto& [key, c] : f.terms) h.terms[{key.second, d - key.first - key.second}] = c;
  return h;
}

GermPoly polynomial_from_germ(const GermPoly& h) {
  const int d = h.total_degree();
  GermPoly f;
  for (const auto& [key, c] : h.terms) f.terms[{d - key.first - key.second, key.first}] = c;
  return f;
}

Int poly_valuation(const RealizedConfiguration& real, const GermPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no valuation");
  const int d = f.total_degree();
  return germ_valuation(real, germ_at_infinity(f)) - Int(d) * real.d_m;
}

bool phi_pairing_check(const RealizedConfiguration& real, const GermPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial");
  const int d = f.total_degree();
  const GermPoly h = germ_at_infinity(f);
  const std::vector<Int> mults = germ_multiplicities(real, h);
  // Left side from chart replay only (nu(v) recomputed, not assumed d_m);
  // right side from the lattice data.
  const Int lhs = Int(d) * germ_valuation(real, gp_monomial(0, 1)) - germ_valuation(real, h);
  Int rhs = Int(d) * real.d_m;
  for (int j = 0; j < real.config.m(); ++j) rhs -= real.mult[j] * mults[j];
  return lhs == rhs;
}

// --- cluster linear algebra ------------------------------------------------

namespace {

using Vec = std::vector<Rat>;

void vec_axpy(const Field& k, Vec& y, const Rat& c, const Vec& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = k.add(y[i], k.mul(c, x[i]));
}

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

struct LinPoly {
  std::map<std::pair<int, int>, Vec> terms;
};

// Substitution step for a polynomial with unknown (vector-valued)
// coefficients, followed by exact division by u^div_u.
LinPoly lin_compose(const Field& k, const LinPoly& t, const ChartStep& st, int div_u,
                    std::size_t n) {
  int maxa = 0, maxb = 0;
  for (const auto& [key, vec] : t.terms) {
    maxa = std::max(maxa, key.first);
    maxb = std::max(maxb, key.second);
  }
  const auto powA = gp_powers(k, st.u_image, maxa);
  const auto powB = gp_powers(k, st.v_image, maxb);
  LinPoly out;
  for (const auto& [key, vec] : t.terms) {
    const GermPoly p = gp_mul(k, powA[key.first], powB[key.second]);
    for (const auto& [pk, c] : p.terms) {
      if (pk.first < div_u)
        throw Error(ErrorCode::PreconditionViolated, "inexact division by exceptional power");
      Vec& dst = out.terms[{pk.first - div_u, pk.second}];
      if (dst.empty()) dst.assign(n, Rat(0));
      vec_axpy(k, dst, c, vec);
    }
  }
  for (auto it = out.terms.begin(); it != out.terms.end();)
    it = vec_is_zero(it->second) ? out.terms.erase(it) : std::next(it);
  return out;
}

std::vector<Vec> nullspace(const Field& k, std::vector<Vec> rows, std::size_t n) {
  std::vector<int> pivcol;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Rat scale = k.inv(rows[r][col]);
    for (std::size_t j = col; j < n; ++j) rows[r][j] = k.mul(rows[r][j], scale);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Rat c = rows[i][col];
      for (std::size_t j = col; j < n; ++j)
        rows[i][j] = k.sub(rows[i][j], k.mul(c, rows[r][j]));
    }
    pivcol.push_back(static_cast<int>(col));
    ++r;
  }
  std::vector<Vec> basis;
  std::vector<bool> is_pivot(n, false);
  for (int c : pivcol) is_pivot[c] = true;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Vec x(n, Rat(0));
    x[j] = 1;
    for (std::size_t i = 0; i < pivcol.size(); ++i) x[pivcol[i]] = k.neg(rows[i][j]);
    basis.push_back(std::move(x));
  }
  return basis;
}

// Monomials of total degree <= deg, in a fixed order.
std::vector<std::pair<int, int>> monomial_list(int deg) {
  std::vector<std::pair<int, int>> mons;
  for (int t = 0; t <= deg; ++t)
    for (int a = t; a >= 0; --a) mons.push_back({a, t - a});
  return mons;
}

// Solution space of "germ of degree <= deg with multiplicity >= w_i at
// each cluster point", as germ polynomials.
std::vector<GermPoly> cluster_solutions(const RealizedConfiguration& real,
                                        const std::vector<Int>& w, int deg) {
  const Field& k = real.field;
  const auto mons = monomial_list(deg);
  const std::size_t n = mons.size();
  LinPoly t;
  for (std::size_t idx = 0; idx < n; ++idx) {
    Vec e(n, Rat(0));
    e[idx] = 1;
    t.terms[mons[idx]] = std::move(e);
  }
  int last = 0;
  for (int i = 0; i < static_cast<int>(w.size()); ++i)
    if (w[i] > 0) last = i + 1;
  std::vector<Vec> rows;
  for (int i = 1; i <= last; ++i) {
    const int wi = static_cast<int>(w[i - 1].get_si());
    for (auto it = t.terms.begin(); it != t.terms.end();) {
      if (it->first.first + it->first.second < wi) {
        rows.push_back(it->second);
        it = t.terms.erase(it);
      } else {
        ++it;
      }
    }
    if (i < last) t = lin_compose(k, t, real.charts[i - 1], wi, n);
  }
  std::vector<GermPoly> out;
  for (const Vec& x : nullspace(k, std::move(rows), n)) {
    GermPoly h;
    for (std::size_t idx = 0; idx < n; ++idx)
      if (x[idx] != 0) h.terms[mons[idx]] = x[idx];
    out.push_back(std::move(h));
  }
  return out;
}

GermPoly random_combination(const Field& k, const std::vector<GermPoly>& basis,
                            std::mt19937_64& rng) {
  GermPoly h;
  for (const GermPoly& b : basis) h = gp_add(k, h, gp_scale(k, b, k.random(rng)));
  if (h.is_zero() && !basis.empty())
    h = gp_scale(k, basis[0], k.random_nonzero(rng));
  return h;
}

}  // namespace

GermPoly curvette_equation(const RealizedConfiguration& real, int i) {
  const int m = real.config.m();
  if (i < 1 || i > m)
    throw Error(ErrorCode::PreconditionViolated, "level out of range: " + std::to_string(i));
  std::vector<Int> w = multiplicity_vector(real.config, i);
  w.resize(m, Int(0));
  std::mt19937_64 rng(real.seed ^ 0x9e3779b97f4a7c15ULL ^ (std::uint64_t(i) << 32));
  const int base = static_cast<int>(w[0].get_si());
  for (int deg = base; deg <= base + m + 2; ++deg) {
    const auto basis = cluster_solutions(real, w, deg);
    if (basis.empty()) continue;
    for (int attempt = 0; attempt < 16; ++attempt) {
      const GermPoly h = random_combination(real.field, basis, rng);
      if (!h.is_zero() && germ_multiplicities(real, h) == w) return h;
    }
    if (real.field.p > 0 && real.field.p < 16)
      throw Error(ErrorCode::FieldTooSmall,
                  "field has too few directions for a generic curvette");
  }
  throw Error(ErrorCode::Unsupported, "no curvette found within the degree bound");
}

WitnessResult witness_search(const RealizedConfiguration& real, WitnessMode mode, Int budget) {
  if (budget <= 0) budget = 2 * real.d_m;
  if (budget < 1) budget = 1;
  const Configuration& config = real.config;
  const int m = config.m();
  const DFamily fam = d_family(config);

  // Candidate witnesses are curvettes at infinity of the truncations: a
  // curve of degree d_i whose germ at p_1 has multiplicities mu^(i) has
  // nu = -(D_m . D_i), so truncations with the right pairing sign are
  // tried in order of degree.
  std::vector<std::pair<Int, int>> cands;
  for (int i = 1; i <= m; ++i) {
    const Rat pairing = intersect(fam.divisors[m], fam.divisors[i]);
    const bool want = mode == WitnessMode::Positive ? pairing < 0 : pairing == 0;
    if (want && fam.d[i - 1] <= budget) cands.push_back({fam.d[i - 1], i});
  }
  std::sort(cands.begin(), cands.end());

  std::mt19937_64 rng(real.seed ^ 0xd1b54a32d192ed03ULL);
  for (const auto& [deg, i] : cands) {
    std::vector<Int> w = multiplicity_vector(config, i);
    w.resize(m, Int(0));
    const auto basis = cluster_solutions(real, w, static_cast<int>(deg.get_si()));
    for (int attempt = 0; attempt < 16; ++attempt) {
      const GermPoly h = random_combination(real.field, basis, rng);
      if (h.is_zero()) break;
      const GermPoly f = polynomial_from_germ(h);
      if (f.is_zero()) continue;
      const Int value = poly_valuation(real, f);
      const bool hit = mode == WitnessMode::Positive ? value > 0
                                                     : value == 0 && f.total_degree() >= 1;
      if (hit) return {f, value, budget};
    }
  }
  return {std::nullopt, Int(0), budget};
}

GermPoly random_polynomial(const Field& k, std::mt19937_64& rng, int max_degree) {
  std::uniform_real_distribution<double> keep(0.0, 1.0);
  for (int tries = 0; tries < 64; ++tries) {
    GermPoly f;
    for (const auto& mon : monomial_list(max_degree)) {
      if (keep(rng) > 0.4) continue;
      const Rat c = k.random(rng);
      if (c != 0) f.terms[mon] = c;
    }
    if (!f.is_zero()) return f;
  }
  return gp_monomial(0, 0, k.from_int(1));
}

}  // namespace valcone
