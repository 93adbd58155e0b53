#pragma once

#include "taut/fiber.hpp"
#include "taut/graded.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace taut {

std::string kappa_name(const std::string& class_expr);

struct KappaRingOptions {
    int cutoff = 40;
    bool fiberwise = false;
    PresentationOptions presentation;
};

// Monomials in the characteristic classes of the model whose kappa-classes
// have degree 1..cutoff.
std::vector<std::string> default_kappa_classes(const FiberedModel& m, int cutoff);

// Subset of the named elements, in order, that is not generated by the
// earlier ones; a minimal generating set of the subring up to the cutoff.
std::vector<NamedElement> minimal_generators(const GradedAmbient& ambient, const std::vector<NamedElement>& candidates,
                                             int cutoff);

// Presentation of the subring of the base cohomology generated by the given
// kappa-classes. Without explicit classes, a minimal generating set is chosen
// from default_kappa_classes.
RingPresentation kappa_ring(const FiberedModel& m, const std::vector<std::string>& classes,
                            const KappaRingOptions& opts = {});

// Exact forms d(Omega) in the Kahler differentials of Q[p1..pk] relative to
// Q[p1..p_{r-1}], with |dp_i| = 4i - m.
struct KahlerRing {
    int m = 0;
    int k = 0;
    int r = 0;
    AlgebraPtr omega;     // p1..pk, dp_r..dp_k
    AlgebraPtr classes;   // Q[p1..pk]
    Derivation D;         // degree -m, p_i -> dp_i (i >= r)
    int cutoff = 0;
    std::vector<std::vector<Element>> exact_basis;  // per degree 0..cutoff
    bool d_squared_zero = false;
    bool products_vanish = false;  // all products of exact basis elements vanish

    Element d(const Element& c) const;  // c in `classes`
    std::size_t exact_dim(int n) const;
};

KahlerRing kahler_exact_forms(int m, int cutoff);

// Sends Omega to the odd-sphere base: p_i -> p_i, dp_i -> the named base
// generator (default naming p<i>_x).
AlgebraMap kahler_to_base(const KahlerRing& K, const AlgebraPtr& base, const std::string& suffix = "_x");

// Adjoins M with dM = class for each class of degree >= 2; a degree-1 class
// is killed by passing to the quotient by it (a degree-0 generator is not
// available in a Sullivan algebra).
struct KillResult {
    Cdga model;
    AlgebraMap from_original;
    std::vector<std::string> adjoined;
    std::vector<std::string> quotiented;
};

KillResult kill_cocycles(const Cdga& c, const std::vector<NamedElement>& classes);

// Coefficients of the differences (fiberwise class) - (total class) in the
// basis of powers of the coupling class.
struct DifferenceData {
    std::vector<NamedElement> coefficients;  // pd<i>|<j>, ed|<j>, cd<i>|<j>
    std::vector<Element> ideal;              // nonzero coefficients

    const Element& coefficient(const std::string& name) const;
};

DifferenceData difference_ideal(const FiberedModel& m);

// Substitution that trivializes the difference of the named class: every
// nonzero coefficient must contain a base generator with a constant
// coefficient, which is solved for.
std::map<std::string, Element> trivialization(const FiberedModel& m, const std::string& class_name);

struct KernelResult {
    AlgebraPtr source;
    int cutoff = 0;
    std::vector<Relation> generators;  // minimal generators of the kernel
    std::vector<std::size_t> kernel_dims;
};

// Degreewise kernel of the algebra map f: source -> target.algebra().
KernelResult ring_map_kernel(const AlgebraMap& f, const GradedAmbient& target, int cutoff);

struct IdealComparison {
    bool equal = true;
    int first_mismatch = -1;
    std::string detail;
};

IdealComparison compare_with(const KernelResult& k, const std::vector<Element>& ideal);

// The map q*: Q[a_2..a_{n+1}, c<i>|<j>] -> Q[c1..c_{n+1}] recording the
// projectivization of the universal rank n+1 bundle, and the linear ideal
// c<i>|<j> - binom(n+1-i+j, j) a_{i-j}.
struct ProjectiveKernelData {
    AlgebraMap q;
    std::vector<Element> ideal;
};

ProjectiveKernelData projective_bundle_map(int n);

// True iff a lies in the ideal generated by the products of two (not
// necessarily distinct) elements of gens.
bool in_ideal_square(const Algebra& alg, const std::vector<Element>& gens, const Element& a);

struct IdentityCheck {
    std::string name;
    std::string lhs;
    std::string rhs;
    bool pass = false;
};

// Ring-level computations for CP^2 with real tangent data, after trivializing
// the Euler difference.
struct Cp2Report {
    FiberedModel model;  // trivialized
    std::map<std::string, Element> kappas;
    DifferenceData differences;
    std::vector<IdentityCheck> identities;
    RingPresentation ring;            // generated by the kappas and lambda = p1|1^2
    RingPresentation invariant_ring;  // fixed ring of the involution
    bool generates_invariants = false;
    RegularSequenceResult l_classes_regular;
    Element quartic;                  // in kappa[p1^2], kappa[p1^4], lambda
    AlgebraPtr quartic_symbols;
    bool pd10_survives = false;
    Element pd10_in_generators;
    std::map<std::string, Element> fiberwise_kappas;
};

Cp2Report cp2_report(const FiberedModel& real_model, const std::map<std::string, int>& base_signs, int cutoff);

// Elements of a presentation's symbol algebra representing a (in degree n).
std::optional<Element> express_in_generators(const GradedAmbient& ambient, const RingPresentation& p,
                                             const Element& a);

}  // namespace taut
