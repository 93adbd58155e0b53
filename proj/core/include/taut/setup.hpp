#pragma once

#include "taut/algebra.hpp"
#include "taut/expr.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace taut {

// Parsed and validated setup file. Expressions are stored in normal form
// (printed from their evaluated elements), so print/parse round-trips.
struct SetupSpec {
    struct Generator {
        std::string name;
        int degree = 0;
        SourcePos pos;
    };
    struct Differential {
        std::string generator;
        std::string value;
        SourcePos pos;
    };
    struct LieElement {
        std::string name;
        int degree = 0;  // homological
        std::string dual;
        SourcePos pos;
    };
    struct XiValue {
        std::string cls;  // dual class name
        std::string value;
        SourcePos pos;
    };
    struct HolonomyElement {
        // coefficient (in the fiber algebra) of each d/d<generator>
        std::vector<std::pair<std::string, std::string>> terms;
        std::string dual;  // empty: default name
        SourcePos pos;
    };
    struct Options {
        int cutoff = 40;
        std::optional<int> verify;
        std::string lambda_model = "cohomology";
        std::string naming = "suffix";
        std::optional<int> rank;
        std::string pushforward = "auto";
        std::string contract;
        std::map<std::string, int> signs;
        std::string trivialize;
        std::vector<std::string> classes;
        std::map<std::string, SourcePos> positions;
    };

    std::vector<Generator> fiber;
    std::vector<Differential> differentials;
    std::vector<LieElement> lie_model;
    std::vector<XiValue> xi;
    std::vector<HolonomyElement> holonomy;
    Options options;

    AlgebraPtr fiber_algebra() const;
    Cdga fiber_cdga() const;
    Element xi_value(const std::string& cls) const;  // zero when unset
    Derivation holonomy_derivation(std::size_t i) const;
    std::string holonomy_dual(std::size_t i) const;
    std::string holonomy_string(std::size_t i) const;
};

bool operator==(const SetupSpec& a, const SetupSpec& b);

SetupSpec parse_setup(const std::string& text);
// Normalized text: sections in a fixed order, one statement per line.
std::string print_setup(const SetupSpec& s);
// FNV-1a 64-bit hash of the normalized text, as 16 hex digits.
std::string setup_hash(const SetupSpec& s);
std::string fnv1a_hex(const std::string& text);

}  // namespace taut
