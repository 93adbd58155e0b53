#pragma once

#include <stdexcept>
#include <string>

namespace taut {

// Malformed or inconsistent caller input (bad dimensions, unknown names, degree mismatches).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A mathematical construction failed a machine check (d^2 != 0, non-cocycle, failed solve).
class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace taut
