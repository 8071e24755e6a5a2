#include "valcone/dot.hpp"

#include "valcone/lattice.hpp"

namespace valcone {

std::string export_dot(const Configuration& config) {
  validate(config);
  const int m = config.m();
  std::vector<DivisorClass> strict;  // index 0 = L~, i = E_i
  strict.push_back(line_class(config));
  for (int i = 1; i <= m; ++i) strict.push_back(strict_exceptional(config, i));

  std::string out = "graph dual {\n";
  out += "  L [label=\"L~\"];\n";
  for (int i = 1; i <= m; ++i) {
    const std::string name = "E" + std::to_string(i);
    out += "  " + name + " [label=\"" + name + "\"];\n";
  }
  auto name = [](int i) { return i == 0 ? std::string("L") : "E" + std::to_string(i); };
  for (int i = 0; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (intersect(strict[i], strict[j]) != 0)
        out += "  " + name(i) + " -- " + name(j) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace valcone
