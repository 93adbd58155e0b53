#pragma once

#include "taut/algebra.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace taut {

using Hilbert = std::vector<Integer>;

// Product formula for a free graded-commutative algebra on generators of the
// given degrees: prod (1 - t^d)^{-1} over even d, prod (1 + t^d) over odd d.
Hilbert free_hilbert(const std::vector<int>& degrees, int cutoff);
Hilbert free_hilbert(const Algebra& a, int cutoff);
// Multiplies a series by prod (1 - t^d).
Hilbert times_one_minus(Hilbert h, const std::vector<int>& degrees);
std::string hilbert_string(const Hilbert& h);

// Image of d on the degree-n basis, as coordinate vectors in degree n+1.
std::vector<SparseVec> differential_images(const Cdga& c, int n);

struct CohomologyDegree {
    int degree = 0;
    std::size_t dim = 0;
    std::vector<Element> representatives;
};

std::vector<CohomologyDegree> cohomology(const Cdga& c, int cutoff);

// A non-negatively graded commutative ring with finite-dimensional pieces,
// realized as a quotient of the elements of a free algebra.
class GradedAmbient {
public:
    virtual ~GradedAmbient() = default;
    virtual const AlgebraPtr& algebra() const = 0;
    virtual std::size_t dim(int n) const = 0;
    // Coordinates of a homogeneous degree-n element in the degree-n piece.
    virtual SparseVec coords(const Element& a, int n) const = 0;
    virtual Element from_coords(int n, const SparseVec& v) const = 0;
    virtual std::string describe() const = 0;

    Element normal_form(const Element& a, int n) const { return from_coords(n, coords(a, n)); }
    Hilbert hilbert(int cutoff) const;
};

class FreeAmbient : public GradedAmbient {
public:
    explicit FreeAmbient(AlgebraPtr alg) : alg_(std::move(alg)) {}
    const AlgebraPtr& algebra() const override { return alg_; }
    std::size_t dim(int n) const override { return alg_->dim(n); }
    SparseVec coords(const Element& a, int n) const override;
    Element from_coords(int n, const SparseVec& v) const override;
    std::string describe() const override { return "free"; }

private:
    AlgebraPtr alg_;
};

// Cohomology of a cdga, computed degreewise and cached.
class CohomologyAmbient : public GradedAmbient {
public:
    explicit CohomologyAmbient(Cdga c) : cdga_(std::move(c)) {}
    const AlgebraPtr& algebra() const override { return cdga_.algebra(); }
    const Cdga& cdga() const { return cdga_; }
    std::size_t dim(int n) const override;
    // Throws ModelError if a is not a cocycle.
    SparseVec coords(const Element& a, int n) const override;
    Element from_coords(int n, const SparseVec& v) const override;
    bool is_coboundary(const Element& a, int n) const;
    std::string describe() const override { return "cohomology"; }

private:
    struct Piece {
        std::unique_ptr<Echelon> basis;  // boundaries (ids < nb) then representatives
        std::size_t nb = 0;
        std::vector<SparseVec> reps;
    };
    const Piece& piece(int n) const;

    Cdga cdga_;
    mutable std::mutex mutex_;
    mutable std::map<int, std::unique_ptr<Piece>> pieces_;
};

// Quotient of a free algebra by the ideal generated by homogeneous elements.
class QuotientAmbient : public GradedAmbient {
public:
    QuotientAmbient(AlgebraPtr alg, std::vector<Element> ideal);
    const AlgebraPtr& algebra() const override { return alg_; }
    const std::vector<Element>& ideal() const { return ideal_; }
    std::size_t dim(int n) const override;
    SparseVec coords(const Element& a, int n) const override;
    Element from_coords(int n, const SparseVec& v) const override;
    bool in_ideal(const Element& a, int n) const;
    std::string describe() const override { return "quotient"; }

private:
    struct Piece {
        std::unique_ptr<Echelon> ideal;
        std::vector<std::size_t> free_cols;
        std::map<std::size_t, std::size_t> position;
    };
    const Piece& piece(int n) const;

    AlgebraPtr alg_;
    std::vector<Element> ideal_;
    mutable std::mutex mutex_;
    mutable std::map<int, std::unique_ptr<Piece>> pieces_;
};

// Span of {m * g : g in gens, m a monomial} in degree n of a free algebra.
std::vector<SparseVec> ideal_span(const Algebra& alg, const std::vector<Element>& gens, int n);

struct NamedElement {
    std::string name;
    Element value;
};

struct Relation {
    int degree = 0;
    Element poly;  // in RingPresentation::symbols
};

struct RingPresentation {
    std::vector<NamedElement> generators;  // values in the ambient algebra
    AlgebraPtr symbols;                    // free algebra on the generator names
    std::vector<Relation> relations;
    int cutoff = 0;
    Hilbert hilbert;          // image ring
    Hilbert ambient_hilbert;  // whole ambient ring
    std::string method;

    bool generates_ambient() const { return hilbert == ambient_hilbert; }
    bool is_free() const { return relations.empty(); }
    std::vector<int> generator_degrees() const;
};

struct PresentationOptions {
    // "degreewise": kernels of the evaluation map in every degree.
    // "indecomposables": for a free ambient, check that the linear parts of
    // the generators form a basis of the ambient generators; this certifies a
    // free presentation of the whole ambient in all degrees.
    std::string method = "degreewise";
};

RingPresentation subring_presentation(const GradedAmbient& ambient, const std::vector<NamedElement>& gens, int cutoff,
                                      const PresentationOptions& opts = {});

// Evaluates a polynomial in the presentation's symbols inside the ambient algebra.
Element evaluate(const RingPresentation& p, const Element& poly);

// Fixed subring of a free algebra under a diagonal sign action on generators.
RingPresentation invariant_subring(const AlgebraPtr& alg, const std::map<std::string, int>& signs, int cutoff);

struct RegularSequenceResult {
    bool regular = false;
    Hilbert quotient;
    Hilbert expected;
};

RegularSequenceResult is_regular_sequence(const GradedAmbient& ambient, const std::vector<Element>& elems, int cutoff);

// Hilbert series of symbols/(relations), computed degreewise.
Hilbert presented_hilbert(const RingPresentation& p, int cutoff);

std::string to_string(const RingPresentation& p);

}  // namespace taut
