#pragma once

#include "taut/linear.hpp"
#include "taut/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace taut {

struct GenSymbol {
    std::string name;
    int degree = 0;  // cohomological
    std::string tag;
};

struct Monomial {
    std::vector<std::uint16_t> exps;

    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool operator<(const Monomial& o) const { return exps < o.exps; }
    bool is_one() const;
    int word_length() const;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// Free graded-commutative algebra over Q: polynomial on even generators,
// exterior on odd ones. Generator order is construction order.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    explicit Algebra(std::vector<GenSymbol> gens);

    std::size_t size() const { return gens_.size(); }
    const std::vector<GenSymbol>& gens() const { return gens_; }
    const GenSymbol& gen(std::size_t i) const { return gens_.at(i); }
    int degree(std::size_t i) const { return gens_[i].degree; }
    bool odd(std::size_t i) const { return gens_[i].degree % 2 != 0; }
    std::optional<std::size_t> index_of(const std::string& name) const;
    std::size_t require(const std::string& name) const;

    Monomial one() const { return Monomial{std::vector<std::uint16_t>(gens_.size(), 0)}; }
    Monomial unit(std::size_t i) const;
    int degree(const Monomial& m) const;

    // All monomials of total degree n in ascending Monomial order (cached).
    const std::vector<Monomial>& basis(int n) const;
    std::optional<std::size_t> basis_index(int n, const Monomial& m) const;
    std::size_t dim(int n) const { return basis(n).size(); }

    // Product of two monomials with its Koszul sign; nullopt when an odd
    // generator repeats.
    std::optional<std::pair<Monomial, int>> product(const Monomial& a, const Monomial& b) const;

    std::string monomial_string(const Monomial& m) const;
    // Permutation of generator indices sorted by (degree, name).
    const std::vector<std::size_t>& print_order() const { return print_order_; }

private:
    struct DegreeCache {
        std::vector<Monomial> monomials;
        std::map<Monomial, std::size_t> index;
    };
    const DegreeCache& cache(int n) const;

    std::vector<GenSymbol> gens_;
    std::map<std::string, std::size_t> by_name_;
    std::vector<std::size_t> print_order_;
    mutable std::mutex mutex_;
    mutable std::map<int, std::unique_ptr<DegreeCache>> cache_;
};

AlgebraPtr make_algebra(std::vector<GenSymbol> gens);
std::vector<Monomial> homogeneous_basis(const Algebra& a, int n);

class Element {
public:
    using Terms = std::map<Monomial, Rational>;

    Element() = default;
    explicit Element(AlgebraPtr alg) : alg_(std::move(alg)) {}
    Element(AlgebraPtr alg, Terms terms);

    static Element constant(AlgebraPtr alg, const Rational& c);
    static Element generator(AlgebraPtr alg, std::size_t i);
    static Element generator(AlgebraPtr alg, const std::string& name);
    static Element monomial(AlgebraPtr alg, Monomial m, const Rational& c = 1);
    // Element with the given coordinates on alg->basis(n).
    static Element from_coordinates(AlgebraPtr alg, int n, const SparseVec& coords);

    const AlgebraPtr& algebra() const { return alg_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    // Degree of a nonzero homogeneous element; throws otherwise.
    int degree() const;
    std::optional<int> degree_if_homogeneous() const;
    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const;
    Element homogeneous_part(int n) const;
    // Coordinates on alg->basis(n) of the degree-n part.
    SparseVec coordinates(int n) const;

    void add_term(const Monomial& m, const Rational& c);
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Rational& c);

    bool operator==(const Element& o) const { return terms_ == o.terms_; }
    bool operator!=(const Element& o) const { return !(*this == o); }

private:
    AlgebraPtr alg_;
    Terms terms_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator-(Element a);
Element operator*(const Rational& c, Element a);
Element operator*(const Element& a, const Element& b);
Element multiply(const Element& a, const Element& b);
Element power(const Element& a, int k);

std::string to_string(const Element& e);

class Derivation {
public:
    Derivation() = default;
    // images[i] is the value on generator i; missing generators map to zero.
    Derivation(AlgebraPtr alg, int degree, std::map<std::size_t, Element> images);
    static Derivation zero(AlgebraPtr alg, int degree);

    const AlgebraPtr& algebra() const { return alg_; }
    int degree() const { return degree_; }
    Element image(std::size_t gen) const;
    const std::map<std::size_t, Element>& images() const { return images_; }
    bool is_zero() const { return images_.empty(); }
    Element apply(const Element& a) const;
    Element apply(const Monomial& m) const;

private:
    AlgebraPtr alg_;
    int degree_ = 0;
    std::map<std::size_t, Element> images_;
};

Element apply_derivation(const Derivation& theta, const Element& a);
// Graded commutator [a, b] = ab - (-1)^{|a||b|} ba.
Derivation commutator(const Derivation& a, const Derivation& b);
Derivation derivation_combination(const AlgebraPtr& alg, int degree,
                                  const std::vector<std::pair<Rational, const Derivation*>>& terms);

// Algebra homomorphism determined by generator images (degree preserving).
class AlgebraMap {
public:
    AlgebraMap() = default;
    AlgebraMap(AlgebraPtr src, AlgebraPtr dst, std::vector<Element> images);
    static AlgebraMap by_name(AlgebraPtr src, AlgebraPtr dst, const std::map<std::string, Element>& overrides);

    const AlgebraPtr& source() const { return src_; }
    const AlgebraPtr& target() const { return dst_; }
    const Element& image(std::size_t i) const { return images_.at(i); }
    Element apply(const Element& a) const;

private:
    AlgebraPtr src_;
    AlgebraPtr dst_;
    std::vector<Element> images_;
};

class Cdga {
public:
    Cdga() = default;
    // Checks degree +1 and d^2 = 0 on generators.
    Cdga(AlgebraPtr alg, Derivation d);
    static Cdga formal(AlgebraPtr alg);

    const AlgebraPtr& algebra() const { return alg_; }
    const Derivation& d() const { return d_; }
    Element differential(const Element& a) const { return d_.apply(a); }
    bool zero_differential() const { return d_.is_zero(); }

private:
    AlgebraPtr alg_;
    Derivation d_;
};

}  // namespace taut
