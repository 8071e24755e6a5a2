#include "valcone/config.hpp"

#include <numeric>

namespace valcone {

const Configuration& validate(const Configuration& config) {
  const int m = config.m();
  if (m < 1) throw Error(ErrorCode::BadLength, "configuration needs at least one point");
  if (config.s < 1 || config.s > m)
    throw Error(ErrorCode::BadLength, "s must satisfy 1 <= s <= m, got s=" + std::to_string(config.s));
  if (config.point(1).kind != Point::Kind::Origin)
    throw Error(ErrorCode::BadLength, "p_1 must be the origin");
  for (int i = 2; i <= m; ++i) {
    const Point& p = config.point(i);
    switch (p.kind) {
      case Point::Kind::Origin:
        throw Error(ErrorCode::BadLength, "origin repeated at position " + std::to_string(i));
      case Point::Kind::Free:
        break;
      case Point::Kind::Satellite: {
        // The strict transform of E_j meets E_{i-1} only when j = i-2 or
        // p_{i-1} is itself satellite over the same j.
        const bool legal =
            p.target == i - 2 ||
            (config.point(i - 1).is_satellite() && config.point(i - 1).target == p.target);
        if (p.target < 1 || p.target >= i - 1 || !legal)
          throw Error(ErrorCode::IllegalSatelliteTarget,
                      "satellite target " + std::to_string(p.target) + " at position " +
                          std::to_string(i));
        if (i <= config.s)
          throw Error(ErrorCode::LineThroughSatellite,
                      "p_" + std::to_string(i) + " lies on L but is satellite");
        break;
      }
    }
  }
  return config;
}

bool is_valid(const Configuration& config) {
  try {
    validate(config);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<int> proximate_points(const Configuration& config, int j, int i) {
  std::vector<int> out;
  if (j + 1 <= i) out.push_back(j + 1);
  // Satellites over p_j form a consecutive run starting at p_{j+2}.
  for (int k = j + 2; k <= i; ++k) {
    if (config.point(k).is_satellite() && config.point(k).target == j)
      out.push_back(k);
    else
      break;
  }
  return out;
}

std::vector<std::vector<Int>> proximity_matrix(const Configuration& config) {
  const int m = config.m();
  std::vector<std::vector<Int>> P(m, std::vector<Int>(m, 0));
  for (int i = 1; i <= m; ++i) {
    P[i - 1][i - 1] = 1;
    if (i >= 2) P[i - 1][i - 2] = -1;
    if (config.point(i).is_satellite()) P[i - 1][config.point(i).target - 1] = -1;
  }
  return P;
}

std::vector<Int> multiplicity_vector(const Configuration& config, int i) {
  std::vector<Int> mult(i + 1, 0);  // 1-based
  mult[i] = 1;
  for (int j = i - 1; j >= 1; --j) {
    Int sum = 0;
    for (int k : proximate_points(config, j, i)) sum += mult[k];
    mult[j] = sum;
  }
  return std::vector<Int>(mult.begin() + 1, mult.end());
}

Configuration truncate(const Configuration& config, int i) {
  Configuration out;
  out.points.assign(config.points.begin(), config.points.begin() + i);
  out.s = std::min(config.s, i);
  return out;
}

int initial_free_chain(const Configuration& config) {
  int n = 1;
  while (n < config.m() && !config.point(n + 1).is_satellite()) ++n;
  return n;
}

std::vector<int> satellite_block_starts(const Configuration& config) {
  std::vector<int> starts;
  for (int i = 2; i <= config.m(); ++i)
    if (config.point(i).is_satellite() && !config.point(i - 1).is_satellite()) starts.push_back(i);
  return starts;
}

Configuration configuration_from_multiplicities(const std::vector<Int>& mult, int s) {
  const int m = static_cast<int>(mult.size());
  if (m < 1 || mult[m - 1] != 1)
    throw Error(ErrorCode::InvalidContactSequence, "multiplicity vector must end in 1");
  // prox[j] = indices proximate to p_j: the consecutive run after j whose
  // multiplicities sum exactly to mult[j].
  std::vector<std::vector<int>> prox(m + 1);
  for (int j = 1; j < m; ++j) {
    Int sum = 0;
    int k = j + 1;
    while (k <= m && sum < mult[j - 1]) sum += mult[k++ - 1];
    if (sum != mult[j - 1])
      throw Error(ErrorCode::InvalidContactSequence,
                  "proximity equality unsolvable at point " + std::to_string(j));
    for (int t = j + 1; t < k; ++t) prox[j].push_back(t);
  }
  Configuration out;
  out.s = s;
  out.points.push_back(Point::origin());
  for (int i = 2; i <= m; ++i) {
    int target = 0;
    for (int j = 1; j < i - 1; ++j)
      for (int k : prox[j])
        if (k == i) target = j;
    out.points.push_back(target == 0 ? Point::free_point() : Point::satellite(target));
  }
  validate(out);
  return out;
}

}  // namespace valcone
