#include "valcone/numeric.hpp"

#include <stdexcept>

namespace valcone {

Rat parse_rational(const std::string& text) {
  Rat q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("not a rational: '" + text + "'");
  q.canonicalize();
  return q;
}

std::vector<std::string> to_strings(const std::vector<Int>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const Int& z : v) out.push_back(to_string(z));
  return out;
}

std::vector<std::string> to_strings(const std::vector<Rat>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const Rat& q : v) out.push_back(to_string(q));
  return out;
}

}  // namespace valcone
