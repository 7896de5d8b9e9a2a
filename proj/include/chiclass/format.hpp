#pragma once

#include <string>
#include <vector>

#include "chiclass/classes.hpp"

namespace chiclass {

// One line per nonzero homology degree, highest first:
//   "H_2: h"  "H_0: (2 - 20y + 2y^2)h^3"
std::vector<std::string> homology_lines(const HomologyClass& c);

}  // namespace chiclass
