#pragma once

#include "taut/ce.hpp"
#include "taut/fiber.hpp"
#include "taut/setup.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace taut {

struct PipelineCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Everything built from a setup: the holonomy sub-dgla, the Lie model of the
// base, the relative model and the fibered model used for pushforwards.
struct Pipeline {
    SetupSpec setup;
    Cdga lambda;
    DerivationLie holonomy;
    LambdaModel lambda_model;
    DgLie pi;
    std::vector<PiClass> classes;
    std::vector<Element> xi;
    LXi lxi;
    RelativeModel relative;
    std::optional<SimplifiedTotal> simplified;
    FiberedModel untrivialized;
    FiberedModel model;  // after the optional trivialization
    std::map<std::string, Element> trivialization;
    // Signs of the base generators under the involution given by the
    // `sign` options (empty without them).
    std::map<std::string, int> base_signs;
    std::vector<PipelineCheck> checks;
    int cutoff = 40;
    int verify = 0;

    bool checks_pass() const;
};

struct PipelineOptions {
    // Skip the quasi-isomorphism and cross-validation checks.
    bool skip_verification = false;
};

Pipeline build_pipeline(const SetupSpec& s, const PipelineOptions& opts = {});

// Signs of the fiber generators: given ones, the rest forced by the
// differential or +1.
std::map<std::string, int> fiber_signs(const Cdga& lambda, const std::map<std::string, int>& given);

}  // namespace taut
