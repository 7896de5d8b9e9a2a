#include "chiclass/format.hpp"

namespace chiclass {

std::vector<std::string> homology_lines(const HomologyClass& c) {
  std::vector<std::string> out;
  for (int k = c.dim_x(); k >= 0; --k) {
    const GradedClass part = c.homology_part(k);
    if (part.is_zero()) continue;
    out.push_back("H_" + std::to_string(k) + ": " + to_string(part));
  }
  if (out.empty()) out.push_back("0");
  return out;
}

}  // namespace chiclass
