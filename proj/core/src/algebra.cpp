#include "taut/algebra.hpp"

#include "taut/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace taut {

bool Monomial::is_one() const
{
    return std::all_of(exps.begin(), exps.end(), [](std::uint16_t e) { return e == 0; });
}

int Monomial::word_length() const
{
    return std::accumulate(exps.begin(), exps.end(), 0);
}

Algebra::Algebra(std::vector<GenSymbol> gens) : gens_(std::move(gens))
{
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].degree < 1)
            throw InputError("generator '" + gens_[i].name + "' must have degree >= 1");
        if (gens_[i].name.empty())
            throw InputError("generator names must be nonempty");
        if (!by_name_.emplace(gens_[i].name, i).second)
            throw InputError("duplicate generator name '" + gens_[i].name + "'");
    }
    print_order_.resize(gens_.size());
    std::iota(print_order_.begin(), print_order_.end(), 0);
    std::stable_sort(print_order_.begin(), print_order_.end(), [this](std::size_t a, std::size_t b) {
        if (gens_[a].degree != gens_[b].degree)
            return gens_[a].degree < gens_[b].degree;
        return gens_[a].name < gens_[b].name;
    });
}

AlgebraPtr make_algebra(std::vector<GenSymbol> gens)
{
    return std::make_shared<const Algebra>(std::move(gens));
}

std::optional<std::size_t> Algebra::index_of(const std::string& name) const
{
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        return std::nullopt;
    return it->second;
}

std::size_t Algebra::require(const std::string& name) const
{
    auto i = index_of(name);
    if (!i)
        throw InputError("unknown generator '" + name + "'");
    return *i;
}

Monomial Algebra::unit(std::size_t i) const
{
    Monomial m = one();
    m.exps.at(i) = 1;
    return m;
}

int Algebra::degree(const Monomial& m) const
{
    int d = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        d += m.exps[i] * gens_[i].degree;
    return d;
}

namespace {

void enumerate(const std::vector<GenSymbol>& gens, std::size_t i, int remaining, Monomial& cur,
               std::vector<Monomial>& out)
{
    if (i == gens.size()) {
        if (remaining == 0)
            out.push_back(cur);
        return;
    }
    const int d = gens[i].degree;
    const int cap = gens[i].degree % 2 ? 1 : remaining / d;
    for (int e = 0; e <= cap && e * d <= remaining; ++e) {
        cur.exps[i] = static_cast<std::uint16_t>(e);
        enumerate(gens, i + 1, remaining - e * d, cur, out);
    }
    cur.exps[i] = 0;
}

}  // namespace

const Algebra::DegreeCache& Algebra::cache(int n) const
{
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(n);
    if (it != cache_.end())
        return *it->second;
    auto c = std::make_unique<DegreeCache>();
    if (n >= 0) {
        Monomial cur = one();
        enumerate(gens_, 0, n, cur, c->monomials);
        std::sort(c->monomials.begin(), c->monomials.end());
        for (std::size_t k = 0; k < c->monomials.size(); ++k)
            c->index.emplace(c->monomials[k], k);
    }
    auto& ref = *c;
    cache_.emplace(n, std::move(c));
    return ref;
}

const std::vector<Monomial>& Algebra::basis(int n) const
{
    return cache(n).monomials;
}

std::optional<std::size_t> Algebra::basis_index(int n, const Monomial& m) const
{
    const auto& c = cache(n);
    auto it = c.index.find(m);
    if (it == c.index.end())
        return std::nullopt;
    return it->second;
}

std::vector<Monomial> homogeneous_basis(const Algebra& a, int n)
{
    if (n < 0)
        throw InputError("homogeneous_basis requires n >= 0");
    return a.basis(n);
}

std::optional<std::pair<Monomial, int>> Algebra::product(const Monomial& a, const Monomial& b) const
{
    Monomial out = a;
    int swaps = 0;
    int odd_in_b_below = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (odd(i)) {
            if (a.exps[i] && b.exps[i])
                return std::nullopt;
            if (a.exps[i])
                swaps += odd_in_b_below;
            if (b.exps[i])
                ++odd_in_b_below;
        }
        out.exps[i] = static_cast<std::uint16_t>(a.exps[i] + b.exps[i]);
    }
    return std::make_pair(std::move(out), swaps % 2 ? -1 : 1);
}

std::string Algebra::monomial_string(const Monomial& m) const
{
    std::string s;
    for (std::size_t i : print_order_) {
        if (m.exps[i] == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += gens_[i].name;
        if (m.exps[i] > 1)
            s += '^' + std::to_string(m.exps[i]);
    }
    return s.empty() ? "1" : s;
}

Element::Element(AlgebraPtr alg, Terms terms) : alg_(std::move(alg))
{
    for (auto& [m, c] : terms)
        if (sgn(c) != 0)
            terms_.emplace(m, c);
}

Element Element::constant(AlgebraPtr alg, const Rational& c)
{
    Element e(alg);
    if (sgn(c) != 0)
        e.terms_.emplace(alg->one(), c);
    return e;
}

Element Element::generator(AlgebraPtr alg, std::size_t i)
{
    Element e(alg);
    e.terms_.emplace(alg->unit(i), Rational(1));
    return e;
}

Element Element::generator(AlgebraPtr alg, const std::string& name)
{
    std::size_t i = alg->require(name);
    return generator(std::move(alg), i);
}

Element Element::monomial(AlgebraPtr alg, Monomial m, const Rational& c)
{
    Element e(std::move(alg));
    if (sgn(c) != 0)
        e.terms_.emplace(std::move(m), c);
    return e;
}

Element Element::from_coordinates(AlgebraPtr alg, int n, const SparseVec& coords)
{
    Element e(alg);
    const auto& basis = alg->basis(n);
    for (const auto& [i, c] : coords)
        e.add_term(basis.at(i), c);
    return e;
}

bool Element::is_homogeneous() const
{
    return degree_if_homogeneous().has_value();
}

std::optional<int> Element::degree_if_homogeneous() const
{
    if (terms_.empty())
        return std::nullopt;
    int d = alg_->degree(terms_.begin()->first);
    for (const auto& t : terms_)
        if (alg_->degree(t.first) != d)
            return std::nullopt;
    return d;
}

int Element::degree() const
{
    auto d = degree_if_homogeneous();
    if (!d)
        throw InputError(terms_.empty() ? "degree of the zero element is undefined"
                                        : "degree of a non-homogeneous element is undefined");
    return *d;
}

Rational Element::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Element::constant_term() const
{
    if (!alg_)
        return 0;
    return coefficient(alg_->one());
}

Element Element::homogeneous_part(int n) const
{
    Element e(alg_);
    for (const auto& [m, c] : terms_)
        if (alg_->degree(m) == n)
            e.terms_.emplace(m, c);
    return e;
}

SparseVec Element::coordinates(int n) const
{
    SparseVec v;
    for (const auto& [m, c] : terms_) {
        if (alg_->degree(m) != n)
            continue;
        auto i = alg_->basis_index(n, m);
        v.emplace_back(*i, c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

void Element::add_term(const Monomial& m, const Rational& c)
{
    if (sgn(c) == 0)
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

namespace {

const AlgebraPtr& common_algebra(const Element& a, const Element& b)
{
    if (!a.algebra())
        return b.algebra();
    if (!b.algebra() || a.algebra() == b.algebra())
        return a.algebra();
    throw InputError("elements belong to different algebras");
}

}  // namespace

Element& Element::operator+=(const Element& o)
{
    alg_ = common_algebra(*this, o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Element& Element::operator-=(const Element& o)
{
    alg_ = common_algebra(*this, o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Element& Element::operator*=(const Rational& c)
{
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.second *= c;
    return *this;
}

Element operator+(Element a, const Element& b)
{
    a += b;
    return a;
}

Element operator-(Element a, const Element& b)
{
    a -= b;
    return a;
}

Element operator-(Element a)
{
    a *= Rational(-1);
    return a;
}

Element operator*(const Rational& c, Element a)
{
    a *= c;
    return a;
}

Element multiply(const Element& a, const Element& b)
{
    const AlgebraPtr& alg = common_algebra(a, b);
    Element::Terms acc;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            auto p = alg->product(ma, mb);
            if (!p)
                continue;
            Rational c = ca * cb;
            if (p->second < 0)
                c = -c;
            auto it = acc.find(p->first);
            if (it == acc.end())
                acc.emplace(std::move(p->first), std::move(c));
            else
                it->second += c;
        }
    }
    return Element(alg, std::move(acc));
}

Element operator*(const Element& a, const Element& b)
{
    return multiply(a, b);
}

Element power(const Element& a, int k)
{
    if (k < 0)
        throw InputError("negative power");
    if (!a.algebra())
        throw InputError("power of an element without algebra");
    Element result = Element::constant(a.algebra(), 1);
    Element base = a;
    while (k > 0) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k)
            base = base * base;
    }
    return result;
}

std::string to_string(const Element& e)
{
    if (e.is_zero())
        return "0";
    const Algebra& alg = *e.algebra();
    std::vector<std::pair<std::vector<std::uint16_t>, const Element::Terms::value_type*>> order;
    for (const auto& t : e.terms()) {
        std::vector<std::uint16_t> key;
        key.push_back(static_cast<std::uint16_t>(alg.degree(t.first)));
        for (std::size_t i : alg.print_order())
            key.push_back(t.first.exps[i]);
        order.emplace_back(std::move(key), &t);
    }
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, term] : order) {
        const Rational& c = term->second;
        const bool neg = sgn(c) < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first)
            out << (neg ? "-" : "");
        else
            out << (neg ? " - " : " + ");
        first = false;
        const bool one = term->first.is_one();
        if (one) {
            out << mag.get_str();
        } else {
            if (mag != 1)
                out << mag.get_str() << '*';
            out << alg.monomial_string(term->first);
        }
    }
    return out.str();
}

Derivation::Derivation(AlgebraPtr alg, int degree, std::map<std::size_t, Element> images)
    : alg_(std::move(alg)), degree_(degree)
{
    for (auto& [i, e] : images) {
        if (i >= alg_->size())
            throw InputError("derivation image for unknown generator");
        if (e.is_zero())
            continue;
        if (e.algebra() != alg_)
            throw InputError("derivation image lives in a different algebra");
        auto d = e.degree_if_homogeneous();
        if (!d || *d != alg_->degree(i) + degree_)
            throw InputError("derivation image of '" + alg_->gen(i).name + "' has the wrong degree");
        images_.emplace(i, std::move(e));
    }
}

Derivation Derivation::zero(AlgebraPtr alg, int degree)
{
    return Derivation(std::move(alg), degree, {});
}

Element Derivation::image(std::size_t gen) const
{
    auto it = images_.find(gen);
    return it == images_.end() ? Element(alg_) : it->second;
}

Element Derivation::apply(const Monomial& m) const
{
    Element out(alg_);
    int prefix_degree = 0;
    for (std::size_t i = 0; i < alg_->size(); ++i) {
        const int e = m.exps[i];
        if (e == 0)
            continue;
        auto it = images_.find(i);
        if (it != images_.end()) {
            Monomial prefix = alg_->one();
            Monomial rest = m;
            for (std::size_t j = 0; j < i; ++j) {
                prefix.exps[j] = m.exps[j];
                rest.exps[j] = 0;
            }
            rest.exps[i] = static_cast<std::uint16_t>(e - 1);
            Rational c = e;
            if ((degree_ % 2 != 0) && (prefix_degree % 2 != 0))
                c = -c;
            Element term = Element::monomial(alg_, prefix, c) * it->second * Element::monomial(alg_, rest);
            out += term;
        }
        prefix_degree += e * alg_->degree(i);
    }
    return out;
}

Element Derivation::apply(const Element& a) const
{
    if (a.is_zero())
        return Element(alg_);
    if (a.algebra() != alg_)
        throw InputError("derivation applied to an element of another algebra");
    Element out(alg_);
    for (const auto& [m, c] : a.terms()) {
        Element t = apply(m);
        t *= c;
        out += t;
    }
    return out;
}

Element apply_derivation(const Derivation& theta, const Element& a)
{
    return theta.apply(a);
}

Derivation commutator(const Derivation& a, const Derivation& b)
{
    if (a.algebra() != b.algebra())
        throw InputError("commutator of derivations on different algebras");
    const AlgebraPtr& alg = a.algebra();
    const bool sign = (a.degree() % 2 != 0) && (b.degree() % 2 != 0);
    std::map<std::size_t, Element> images;
    for (std::size_t i = 0; i < alg->size(); ++i) {
        Element g = Element::generator(alg, i);
        Element v = a.apply(b.apply(g));
        Element w = b.apply(a.apply(g));
        if (sign)
            v += w;
        else
            v -= w;
        if (!v.is_zero())
            images.emplace(i, std::move(v));
    }
    return Derivation(alg, a.degree() + b.degree(), std::move(images));
}

Derivation derivation_combination(const AlgebraPtr& alg, int degree,
                                  const std::vector<std::pair<Rational, const Derivation*>>& terms)
{
    std::map<std::size_t, Element> images;
    for (const auto& [c, d] : terms) {
        if (d->degree() != degree)
            throw InputError("combining derivations of different degrees");
        for (const auto& [i, e] : d->images()) {
            auto it = images.find(i);
            if (it == images.end())
                images.emplace(i, c * e);
            else
                it->second += c * e;
        }
    }
    return Derivation(alg, degree, std::move(images));
}

AlgebraMap::AlgebraMap(AlgebraPtr src, AlgebraPtr dst, std::vector<Element> images)
    : src_(std::move(src)), dst_(std::move(dst)), images_(std::move(images))
{
    if (images_.size() != src_->size())
        throw InputError("algebra map needs one image per generator");
    for (std::size_t i = 0; i < images_.size(); ++i) {
        Element& e = images_[i];
        if (e.is_zero()) {
            e = Element(dst_);
            continue;
        }
        if (e.algebra() != dst_)
            throw InputError("algebra map image lives in the wrong algebra");
        auto d = e.degree_if_homogeneous();
        if (!d || *d != src_->degree(i))
            throw InputError("algebra map image of '" + src_->gen(i).name + "' has the wrong degree");
    }
}

AlgebraMap AlgebraMap::by_name(AlgebraPtr src, AlgebraPtr dst, const std::map<std::string, Element>& overrides)
{
    std::vector<Element> images;
    for (const auto& g : src->gens()) {
        auto it = overrides.find(g.name);
        if (it != overrides.end())
            images.push_back(it->second);
        else if (auto j = dst->index_of(g.name))
            images.push_back(Element::generator(dst, *j));
        else
            images.push_back(Element(dst));
    }
    return AlgebraMap(std::move(src), std::move(dst), std::move(images));
}

Element AlgebraMap::apply(const Element& a) const
{
    Element out(dst_);
    if (a.is_zero())
        return out;
    if (a.algebra() != src_)
        throw InputError("algebra map applied to an element of another algebra");
    std::map<std::pair<std::size_t, int>, Element> powers;
    auto pw = [&](std::size_t i, int e) -> const Element& {
        auto key = std::make_pair(i, e);
        auto it = powers.find(key);
        if (it == powers.end())
            it = powers.emplace(key, power(images_[i], e)).first;
        return it->second;
    };
    for (const auto& [m, c] : a.terms()) {
        Element t = Element::constant(dst_, c);
        for (std::size_t i = 0; i < src_->size() && !t.is_zero(); ++i)
            if (m.exps[i])
                t = t * pw(i, m.exps[i]);
        out += t;
    }
    return out;
}

Cdga::Cdga(AlgebraPtr alg, Derivation d) : alg_(std::move(alg)), d_(std::move(d))
{
    if (!d_.algebra())
        d_ = Derivation::zero(alg_, 1);
    if (d_.algebra() != alg_)
        throw InputError("differential belongs to another algebra");
    if (d_.degree() != 1)
        throw InputError("differential must have degree +1");
    for (std::size_t i = 0; i < alg_->size(); ++i) {
        Element dd = d_.apply(d_.image(i));
        if (!dd.is_zero())
            throw ModelError("d^2 != 0 on generator '" + alg_->gen(i).name + "': d(d(" + alg_->gen(i).name +
                             ")) = " + to_string(dd));
    }
}

Cdga Cdga::formal(AlgebraPtr alg)
{
    Derivation d = Derivation::zero(alg, 1);
    return Cdga(std::move(alg), std::move(d));
}

}  // namespace taut
