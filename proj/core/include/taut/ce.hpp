#pragma once

#include "taut/dgla.hpp"
#include "taut/graded.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace taut {

// Chevalley-Eilenberg cochains: generator i is dual to Lie basis element i and
// has degree |b_i| + 1.
struct CeAlgebra {
    Cdga cdga;
    std::shared_ptr<const DgLie> lie;
};

CeAlgebra ce_algebra(const DgLie& L);

struct RelativeModel {
    CeAlgebra base;
    Cdga lambda;
    Cdga total;  // base generators first, then the fiber generators
    AlgebraMap base_inclusion;
    AlgebraMap fiber_inclusion;
    AlgebraMap fiber_restriction;  // kills the base generators
    // Action of each base Lie basis element on the fiber algebra.
    std::vector<Derivation> theta;
    // Characteristic cochains of the total bundle, by class name.
    std::vector<std::string> class_order;
    std::map<std::string, Element> cochains;
    std::map<std::string, Element> fiber_cochains;  // the inputs, in lambda
};

// Builds C*(l, lambda) with differential d_lambda + sum_j xi_j theta_j and the
// characteristic cochains p_b(zeta) = iota(p_b(xi)) + sum_l p_b^{m_l} m_l.
RelativeModel relative_model(const LXi& lxi, const DerivationLie& h, const LambdaModel& model,
                             const std::vector<PiClass>& classes, const std::vector<Element>& xi);

struct CrossCheck {
    bool ok = true;
    std::size_t evaluations = 0;
    std::string message;
};

// Compares the tensor differential with the Hom-complex differential (the
// cochain differential plus the twisting term) on cochains of word length
// <= 1, evaluated on all words of length <= 2, up to max_degree.
CrossCheck cross_validate(const RelativeModel& m, int max_degree);

// Eliminates the contractible pair (y, dy): the quotient of the total algebra
// without y by the ideal (dy).
struct SimplifiedTotal {
    AlgebraPtr algebra;       // total generators without y
    Element relation;         // dy, in `algebra`
    std::string eliminated;
    int verified_through = -1;
    std::vector<std::size_t> total_cohomology;
    std::vector<std::size_t> quotient_dims;
};

SimplifiedTotal simplify_total(const RelativeModel& m, const std::string& y, int verify_cutoff);

}  // namespace taut
