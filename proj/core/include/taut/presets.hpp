#pragma once

#include "taut/setup.hpp"

#include <string>
#include <vector>

namespace taut {

// Bundled setups. The parameter is the sphere dimension m for s-even and
// s-odd, the complex dimension n for cpn and cpn-real, and ignored for
// cp2-euler-trivial.
std::vector<std::string> preset_names();
int preset_default_parameter(const std::string& name);
std::string preset_text(const std::string& name, int parameter);
std::string preset_text(const std::string& name);
SetupSpec preset_setup(const std::string& name, int parameter);

}  // namespace taut
