#pragma once

#include "taut/algebra.hpp"
#include "taut/graded.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace taut {

struct LieBasis {
    std::string name;
    int degree = 0;    // homological
    std::string dual;  // name of the dual cochain generator; defaults to name
    std::string tag;
};

// Finite-basis dg Lie algebra given by structure constants. Elements are
// sparse coefficient vectors over the basis.
class DgLie {
public:
    DgLie() = default;
    explicit DgLie(std::vector<LieBasis> basis);

    std::size_t size() const { return basis_.size(); }
    const std::vector<LieBasis>& basis() const { return basis_; }
    const LieBasis& basis(std::size_t i) const { return basis_.at(i); }
    int degree(std::size_t i) const { return basis_.at(i).degree; }
    std::optional<std::size_t> index_of(const std::string& name) const;
    // Degree of a nonzero homogeneous element; throws otherwise.
    int degree(const SparseVec& v) const;

    void set_delta(std::size_t i, SparseVec v);
    // Sets [b_i, b_j] and, by graded antisymmetry, [b_j, b_i].
    void set_bracket(std::size_t i, std::size_t j, SparseVec v);

    const SparseVec& delta_of(std::size_t i) const { return delta_.at(i); }
    SparseVec bracket_of(std::size_t i, std::size_t j) const;
    SparseVec delta(const SparseVec& v) const;
    SparseVec bracket(const SparseVec& a, const SparseVec& b) const;
    bool is_abelian() const { return brackets_.empty(); }
    bool zero_differential() const;

    // Checks degrees, antisymmetry, Jacobi, delta^2 = 0 and the Leibniz rule
    // on all basis pairs and triples; returns the first violation.
    std::optional<std::string> validate() const;

    // Each basis element as a combination of the origin's basis, when this
    // algebra was derived (twisted, truncated) from another.
    const std::shared_ptr<const DgLie>& origin() const { return origin_; }
    const std::vector<SparseVec>& provenance() const { return provenance_; }
    void set_provenance(std::shared_ptr<const DgLie> origin, std::vector<SparseVec> prov);

    std::string element_string(const SparseVec& v) const;
    std::string describe() const;

private:
    std::vector<LieBasis> basis_;
    std::vector<SparseVec> delta_;
    std::map<std::pair<std::size_t, std::size_t>, SparseVec> brackets_;  // i <= j
    std::shared_ptr<const DgLie> origin_;
    std::vector<SparseVec> provenance_;
};

bool is_maurer_cartan(const DgLie& L, const SparseVec& tau);
// Same bracket, differential delta + [tau, -]. Throws ModelError if tau is not
// Maurer-Cartan.
DgLie twist(const DgLie& L, const SparseVec& tau);
// Degrees > n kept, degree n replaced by the cycles, lower degrees dropped.
DgLie truncate(const DgLie& L, int n);
std::vector<std::size_t> homology_dims(const DgLie& L, int max_degree);

// Coordinates of derivations of a fixed cohomological degree on the pairs
// (generator, target monomial).
class DerivationCoords {
public:
    DerivationCoords(AlgebraPtr alg, int degree);
    std::size_t size() const { return cols_; }
    SparseVec vec(const Derivation& d) const;
    Derivation from_vec(const SparseVec& v) const;

private:
    AlgebraPtr alg_;
    int degree_;
    std::vector<std::size_t> offset_;
    std::size_t cols_ = 0;
};

// A sub-dgla of derivations of a cdga with basis given by derivations.
struct DerivationLie {
    Cdga lambda;
    DgLie lie;
    std::vector<Derivation> realization;  // one per basis element
};

// Closes the given derivations into a DgLie: brackets are graded commutators,
// the differential is [d, -]. Throws ModelError if the span is not closed.
DerivationLie derivation_sub_dgla(const Cdga& lambda, const std::vector<std::pair<std::string, Derivation>>& gens);

// Der(lambda) in homological degrees 0..max_degree truncated at 1.
DerivationLie derivation_dgla(const Cdga& lambda, int max_degree);

struct QuasiIsoCheck {
    bool ok = true;
    int first_mismatch = -1;
    std::vector<std::size_t> sub_homology;
    std::vector<std::size_t> der_homology;
    std::string message;
};

// Verifies degreewise up to max_degree that the sub-dgla includes
// quasi-isomorphically into Der(lambda)<1>.
QuasiIsoCheck verify_quasi_isomorphism(const DerivationLie& sub, int max_degree);

// Finite-dimensional model M of the fiber cdga used on the Lie side: a basis
// of elements of the fiber algebra closed under product and differential.
struct LambdaModel {
    enum class Kind { Cohomology, Full };
    Kind kind = Kind::Cohomology;
    Cdga lambda;
    std::vector<Element> basis;       // images under the section into lambda
    std::vector<std::string> labels;  // display/suffix labels
    std::vector<int> degrees;

    std::size_t size() const { return basis.size(); }
    // Coordinates of a cocycle (cohomology kind) or element (full kind).
    SparseVec coords(const Element& a) const;
    int top_degree() const;

    std::shared_ptr<CohomologyAmbient> cohomology;
};

LambdaModel cohomology_model(const Cdga& lambda);
LambdaModel full_model(const Cdga& lambda);

struct PiClass {
    std::string lie_name;   // e.g. q1
    std::string dual_name;  // e.g. p1
};

enum class Naming { Suffix, Bar };

// h semidirect (M tensor Pi), untwisted and in all degrees.
struct Semidirect {
    DgLie lie;
    std::size_t h_count = 0;
    // For index h_count + l * pi.size() + b: (model index l, Pi index b).
    std::vector<std::pair<std::size_t, std::size_t>> tensor_index;
    std::size_t index(std::size_t l, std::size_t b) const;
    std::size_t pi_size = 0;
};

Semidirect semidirect(const DerivationLie& h, const LambdaModel& model, const DgLie& pi,
                      const std::vector<PiClass>& classes, Naming naming);

struct LXi {
    std::shared_ptr<const DgLie> semidirect_lie;
    Semidirect structure;
    DgLie lie;  // twisted and truncated at 0
    SparseVec tau;
};

// Builds the twisted, truncated Lie model from tau = sum_b xi_b tensor q_b.
LXi build_l_xi(const DerivationLie& h, const LambdaModel& model, const DgLie& pi, const std::vector<PiClass>& classes,
               const std::vector<Element>& xi, Naming naming);

}  // namespace taut
