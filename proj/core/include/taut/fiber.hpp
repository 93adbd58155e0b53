#pragma once

#include "taut/ce.hpp"
#include "taut/expr.hpp"
#include "taut/graded.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace taut {

enum class PushforwardStrategy {
    // total = base[x]/(f), f monic in x; pi_! reads off the top x-coefficient
    FreeModule,
    // total = base[x] with x odd and dx in the base; pi_! reads off the
    // coefficient of x
    ContractiblePair,
};

// Model of a fibration over the universal base: the total algebra has the base
// generators first and the fiber generator x last.
struct FiberedModel {
    PushforwardStrategy strategy = PushforwardStrategy::FreeModule;
    Cdga base;
    std::shared_ptr<const GradedAmbient> base_ring;
    AlgebraPtr total;
    std::size_t x = 0;  // index of the fiber generator in `total`
    int fiber_dim = 0;  // degree drop of the pushforward
    Element relation;   // FreeModule: monic in x of x-degree top + 1
    int top = 0;        // FreeModule: x-degree of the top fiber class
    Derivation total_d; // ContractiblePair: differential of the total algebra
    std::vector<std::string> class_order;
    std::map<std::string, Element> classes;  // characteristic classes of the total bundle
    std::optional<int> rank;                 // real rank of the total bundle, when known
    AlgebraMap base_to_total;
    AlgebraMap total_to_base;  // kills x

    const AlgebraPtr& base_algebra() const { return base.algebra(); }
    Element x_element() const { return Element::generator(total, x); }
    Element lift(const Element& b) const { return base_to_total.apply(b); }
    // FreeModule: remainder of division by the relation.
    Element reduce(const Element& a) const;
    // Base coefficients c_0..c_top of the reduced element in powers of x
    // (ContractiblePair: c_0, c_1 with a = c_0 + c_1 x).
    std::vector<Element> x_coefficients(const Element& a) const;
    Element pushforward(const Element& a) const;
    bool base_equal(const Element& a, const Element& b) const;
};

// Free-module model from a relative model whose odd generator y has been
// eliminated; the remaining fiber generator must be even.
FiberedModel free_module_model(const RelativeModel& m, const SimplifiedTotal& s, std::optional<int> rank);
// Model for a single odd fiber generator x with dx in the base.
FiberedModel contractible_model(const RelativeModel& m, std::optional<int> rank);

// Pullback of a fibered model along a base substitution: each named base
// generator is replaced by the given base element (which must not involve any
// replaced generator) and dropped from the base.
FiberedModel substitute_base(const FiberedModel& m, const std::map<std::string, Element>& values);

// Coupling class: the unique element restricting to x in the fiber with
// pi_!(w^{top+1}) = 0.
Element coupling_class(const FiberedModel& m);
// Coefficients in the basis 1, w, ..., w^top (w the coupling class).
std::vector<Element> decompose(const FiberedModel& m, const Element& a);
Element reassemble(const FiberedModel& m, const std::vector<Element>& coeffs);
// a_0 = 1, a_1 = 0, a_2, ..., a_{top+1} with sum_k a_{top+1-k} w^k = 0.
std::vector<Element> a_classes(const FiberedModel& m);
// c<i>_fw (i = 0..n), p<i>_fw, e_fw for a CP^n-type model (|x| = 2).
std::map<std::string, Element> fiberwise_classes(const FiberedModel& m);

// Hirzebruch L-polynomial L_i in Q[p1, ..., pi] (|pj| = 4j).
Element l_polynomial(int i);
// Coefficients b_k of sqrt(y)/tanh(sqrt(y)) = sum b_k y^k.
Rational l_series_coefficient(int k);
// Q[p1, ..., pn] with |pj| = 4j, shared per n.
AlgebraPtr pontryagin_algebra(int n);

// Resolves the class symbols e, p<i>, c<i>, w, L<i> and their _fw variants
// against the class table, with rank and Chern-to-Pontryagin fallbacks.
class ClassResolver {
public:
    explicit ClassResolver(const FiberedModel& m, bool fiberwise = false);
    Element resolve(const std::string& symbol, SourcePos pos = {}) const;
    Element evaluate(const ExprPtr& e) const;

private:
    const FiberedModel& m_;
    bool fiberwise_;
    mutable std::map<std::string, Element> cache_;
    mutable std::optional<std::map<std::string, Element>> fw_;
    const std::map<std::string, Element>& fw() const;
    std::optional<Element> lookup(const std::string& symbol, SourcePos pos) const;
};

struct KappaValue {
    std::string name;  // the class expression as given
    Element value;     // in the base algebra
};

KappaValue kappa(const FiberedModel& m, const std::string& class_expr, bool fiberwise = false);
Element kappa(const FiberedModel& m, const ExprPtr& c, bool fiberwise = false);

// Formal projective-bundle data over Q[c1, ..., c_{n+1}] for a complex vector
// bundle E of rank n+1 and its projectivization.
struct Projectivization {
    int n = 0;
    AlgebraPtr chern;          // c1..c_{n+1}
    AlgebraPtr chern_line;     // c1..c_{n+1}, l = c_1 of the conjugate line bundle
    AlgebraPtr chern_coupling; // c1..c_{n+1}, w
    std::vector<Element> a;    // a_0..a_{n+1} in `chern`
    Element e0;                // e_{|0} = c1/(n+1)
    std::vector<Element> tangent_chern;  // c_i of the fiberwise tangent bundle, in chern_line
    // checks
    bool chern_recovered = false;          // substituting a_i, e0 back returns c_i
    bool top_class_is_bundle_relation = false;  // c_{n+1}(tangent) = sum c_{n+1-j} l^j
    bool fiberwise_chern_identity = false; // c_i(tangent) at l = w - e0 equals c_i^fw(a, w)
    bool a1_vanishes = false;
};

Projectivization projectivization_chern(int n);

}  // namespace taut
