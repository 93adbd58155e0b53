#include "taut/ce.hpp"

#include "taut/errors.hpp"

#include <algorithm>

namespace taut {

namespace {

bool odd(int d)
{
    return d % 2 != 0;
}

}  // namespace

CeAlgebra ce_algebra(const DgLie& L)
{
    std::vector<GenSymbol> gens;
    for (const auto& b : L.basis()) {
        if (b.degree < 0)
            throw InputError("Chevalley-Eilenberg cochains need a non-negatively graded Lie algebra ('" + b.name +
                             "' has degree " + std::to_string(b.degree) + ")");
        gens.push_back({b.dual, b.degree + 1, "dual of " + b.name});
    }
    AlgebraPtr alg = make_algebra(std::move(gens));
    const std::size_t n = L.size();
    std::vector<Element> dxi(n, Element(alg));
    auto xi = [&](std::size_t i) { return Element::generator(alg, i); };
    auto sign = [](bool neg) { return neg ? Rational(-1) : Rational(1); };
    // linear part: (d xi_k)(s a_i) = (-1)^{|xi_k|} [delta a_i]_k
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [k, c] : L.delta_of(i))
            dxi[k] += (sign(odd(alg->degree(k))) * c) * xi(i);
    // quadratic part: (d xi_k)(s a_i ^ s a_j) = -(-1)^{|xi_k| + |a_i|} c_ij^k
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            if (i == j && odd(alg->degree(i)))
                continue;
            SparseVec br = L.bracket_of(i, j);
            if (br.empty())
                continue;
            Rational pairing = i == j ? Rational(2) : sign(odd(alg->degree(j)) && odd(alg->degree(i)));
            Element word = xi(i) * xi(j);
            for (const auto& [k, c] : br) {
                Rational coeff = -sign(odd(alg->degree(k) + L.degree(i))) * c / pairing;
                dxi[k] += coeff * word;
            }
        }
    std::map<std::size_t, Element> images;
    for (std::size_t k = 0; k < n; ++k)
        if (!dxi[k].is_zero())
            images.emplace(k, dxi[k]);
    CeAlgebra out;
    out.cdga = Cdga(alg, Derivation(alg, 1, std::move(images)));
    out.lie = std::make_shared<const DgLie>(L);
    return out;
}

RelativeModel relative_model(const LXi& lxi, const DerivationLie& h, const LambdaModel& model,
                             const std::vector<PiClass>& classes, const std::vector<Element>& xi)
{
    RelativeModel m;
    m.base = ce_algebra(lxi.lie);
    m.lambda = h.lambda;
    const AlgebraPtr& base = m.base.cdga.algebra();
    const AlgebraPtr& fib = m.lambda.algebra();
    std::vector<GenSymbol> gens = base->gens();
    for (const auto& g : fib->gens()) {
        if (base->index_of(g.name))
            throw InputError("fiber generator '" + g.name + "' clashes with a base generator name");
        gens.push_back(g);
    }
    AlgebraPtr tot = make_algebra(gens);
    m.base_inclusion = AlgebraMap::by_name(base, tot, {});
    m.fiber_inclusion = AlgebraMap::by_name(fib, tot, {});
    m.fiber_restriction = AlgebraMap::by_name(tot, fib, {});

    // h-component of each Lie basis element, as a derivation of the fiber
    const DgLie& lie = lxi.lie;
    for (std::size_t j = 0; j < lie.size(); ++j) {
        std::vector<std::pair<Rational, const Derivation*>> terms;
        for (const auto& [i, c] : lie.provenance()[j])
            if (i < lxi.structure.h_count)
                terms.emplace_back(c, &h.realization[i]);
        m.theta.push_back(derivation_combination(fib, -lie.degree(j), terms));
    }

    std::map<std::size_t, Element> images;
    for (std::size_t k = 0; k < base->size(); ++k) {
        Element v = m.base_inclusion.apply(m.base.cdga.d().image(k));
        if (!v.is_zero())
            images.emplace(k, v);
    }
    for (std::size_t g = 0; g < fib->size(); ++g) {
        Element v = m.fiber_inclusion.apply(m.lambda.d().image(g));
        Element gen = Element::generator(fib, g);
        for (std::size_t j = 0; j < lie.size(); ++j) {
            Element act = m.theta[j].apply(gen);
            if (!act.is_zero())
                v += Element::generator(tot, j) * m.fiber_inclusion.apply(act);
        }
        if (!v.is_zero())
            images.emplace(base->size() + g, v);
    }
    m.total = Cdga(tot, Derivation(tot, 1, std::move(images)));

    // characteristic cochains
    for (std::size_t b = 0; b < classes.size(); ++b) {
        const std::string& name = classes[b].dual_name;
        Element p(tot);
        if (!xi[b].is_zero())
            for (const auto& [l, c] : model.coords(xi[b]))
                p += c * m.fiber_inclusion.apply(model.basis[l]);
        for (std::size_t l = 0; l < model.size(); ++l) {
            const std::size_t target = lxi.structure.index(l, b);
            Element cochain(tot);
            for (std::size_t k = 0; k < lie.size(); ++k)
                for (const auto& [i, c] : lie.provenance()[k])
                    if (i == target)
                        cochain += c * Element::generator(tot, k);
            if (!cochain.is_zero())
                p += cochain * m.fiber_inclusion.apply(model.basis[l]);
        }
        Element dp = m.total.differential(p);
        if (!dp.is_zero())
            throw ModelError("characteristic cochain for '" + name + "' is not a cocycle: d = " + to_string(dp));
        m.class_order.push_back(name);
        m.cochains.emplace(name, p);
        m.fiber_cochains.emplace(name, xi[b].is_zero() ? Element(fib) : xi[b]);
    }
    return m;
}

namespace {

using Word = std::vector<std::size_t>;  // length <= 2, ascending

struct WordTerm {
    Word word;
    Rational coeff;
};

// Canonical form of s a_i ^ s a_j; empty result when it vanishes.
std::vector<WordTerm> canonical_pair(const CeAlgebra& ce, std::size_t i, std::size_t j, const Rational& c)
{
    const Algebra& alg = *ce.cdga.algebra();
    if (i == j && odd(alg.degree(i)))
        return {};
    if (i <= j)
        return {{{i, j}, c}};
    const bool sign = odd(alg.degree(i)) && odd(alg.degree(j));
    return {{{j, i}, sign ? Rational(-c) : c}};
}

// Chain-level CE differential on a word of length 1 or 2.
std::vector<WordTerm> chain_d(const CeAlgebra& ce, const Word& w)
{
    const DgLie& L = *ce.lie;
    const Algebra& alg = *ce.cdga.algebra();
    std::vector<WordTerm> out;
    if (w.size() == 1) {
        for (const auto& [k, c] : L.delta_of(w[0]))
            out.push_back({{k}, -c});
        return out;
    }
    const std::size_t i = w[0];
    const std::size_t j = w[1];
    for (const auto& [k, c] : L.delta_of(i))
        for (auto& t : canonical_pair(ce, k, j, -c))
            out.push_back(std::move(t));
    const bool si = odd(alg.degree(i));
    for (const auto& [k, c] : L.delta_of(j))
        for (auto& t : canonical_pair(ce, i, k, si ? Rational(c) : Rational(-c)))
            out.push_back(std::move(t));
    const bool sx = odd(L.degree(i));
    for (const auto& [k, c] : L.bracket_of(i, j))
        out.push_back({{k}, sx ? Rational(-c) : c});
    return out;
}

int word_degree(const Algebra& base, const Word& w)
{
    int d = 0;
    for (std::size_t i : w)
        d += base.degree(i);
    return d;
}

// Value in lambda of a total element, read as a Hom-cochain, on a word.
Element evaluate_on(const RelativeModel& m, const Element& t, const Word& w)
{
    const Algebra& base = *m.base.cdga.algebra();
    const AlgebraPtr& fib = m.lambda.algebra();
    const std::size_t nb = base.size();
    const int wd = word_degree(base, w);
    Element out(fib);
    for (const auto& [mono, c] : t.terms()) {
        std::vector<std::size_t> bw;
        for (std::size_t i = 0; i < nb; ++i)
            for (int e = 0; e < mono.exps[i]; ++e)
                bw.push_back(i);
        if (bw != w)
            continue;
        Rational pairing = 1;
        if (w.size() == 2) {
            if (w[0] == w[1])
                pairing = 2;
            else if (odd(base.degree(w[0])) && odd(base.degree(w[1])))
                pairing = -1;
        }
        Monomial fm = fib->one();
        for (std::size_t g = 0; g < fib->size(); ++g)
            fm.exps[g] = mono.exps[nb + g];
        Rational coeff = c * pairing;
        if (odd(fib->degree(fm)) && odd(wd))
            coeff = -coeff;
        out.add_term(fm, coeff);
    }
    return out;
}

Element evaluate_on(const RelativeModel& m, const Element& t, const std::vector<WordTerm>& combo)
{
    Element out(m.lambda.algebra());
    for (const auto& wt : combo)
        out += wt.coeff * evaluate_on(m, t, wt.word);
    return out;
}

Element hom_differential(const RelativeModel& m, const Element& f, int fdeg, const Word& w)
{
    const Algebra& base = *m.base.cdga.algebra();
    Element out = m.lambda.differential(evaluate_on(m, f, w));
    if (!w.empty()) {
        Element back = evaluate_on(m, f, chain_d(m.base, w));
        out += odd(fdeg) ? back : -back;
    }
    auto sgn_of = [](int e) { return odd(e) ? Rational(-1) : Rational(1); };
    if (w.size() == 1) {
        const int s1 = base.degree(w[0]);
        out += sgn_of(s1 * fdeg) * m.theta[w[0]].apply(evaluate_on(m, f, Word{}));
    } else if (w.size() == 2) {
        const int s1 = base.degree(w[0]);
        const int s2 = base.degree(w[1]);
        out += sgn_of(s1 * fdeg) * m.theta[w[0]].apply(evaluate_on(m, f, Word{w[1]}));
        out += sgn_of(s2 * (fdeg + s1)) * m.theta[w[1]].apply(evaluate_on(m, f, Word{w[0]}));
    }
    return out;
}

}  // namespace

CrossCheck cross_validate(const RelativeModel& m, int max_degree)
{
    CrossCheck r;
    const AlgebraPtr& tot = m.total.algebra();
    const Algebra& base = *m.base.cdga.algebra();
    const std::size_t nb = base.size();
    std::vector<Element> cochains;
    for (std::size_t g = nb; g < tot->size(); ++g) {
        cochains.push_back(Element::generator(tot, g));
        for (std::size_t j = 0; j < nb; ++j)
            cochains.push_back(Element::generator(tot, j) * Element::generator(tot, g));
    }
    for (std::size_t j = 0; j < nb; ++j)
        cochains.push_back(Element::generator(tot, j));
    std::vector<Word> words{{}};
    for (std::size_t i = 0; i < nb; ++i) {
        words.push_back({i});
        for (std::size_t j = i; j < nb; ++j)
            if (!(i == j && odd(base.degree(i))))
                words.push_back({i, j});
    }
    for (const auto& f : cochains) {
        const int fdeg = f.degree();
        if (fdeg > max_degree)
            continue;
        Element df = m.total.differential(f);
        for (const auto& w : words) {
            Element lhs = evaluate_on(m, df, w);
            Element rhs = hom_differential(m, f, fdeg, w);
            ++r.evaluations;
            if (lhs != rhs) {
                std::string wname;
                for (std::size_t i : w)
                    wname += (wname.empty() ? "s" : " ^ s") + m.base.lie->basis(i).name;
                r.ok = false;
                r.message = "differentials disagree on " + to_string(f) + " at word (" + wname +
                            "): tensor gives " + to_string(lhs) + ", Hom complex gives " + to_string(rhs);
                return r;
            }
        }
    }
    return r;
}

SimplifiedTotal simplify_total(const RelativeModel& m, const std::string& y, int verify_cutoff)
{
    const AlgebraPtr& tot = m.total.algebra();
    const std::size_t yi = tot->require(y);
    if (!odd(tot->degree(yi)))
        throw InputError("contractible generator '" + y + "' must be odd");
    std::vector<GenSymbol> gens;
    for (std::size_t i = 0; i < tot->size(); ++i)
        if (i != yi)
            gens.push_back(tot->gen(i));
    SimplifiedTotal s;
    s.algebra = make_algebra(gens);
    s.eliminated = y;
    AlgebraMap drop = AlgebraMap::by_name(tot, s.algebra, {});
    for (std::size_t i = 0; i < tot->size(); ++i) {
        Element di = m.total.d().image(i);
        for (const auto& [mono, c] : di.terms())
            if (mono.exps[yi])
                throw ModelError("generator '" + y + "' appears in the differential of '" + tot->gen(i).name + "'");
        if (i != yi && !di.is_zero())
            throw ModelError("eliminating '" + y + "' needs zero differential on the other generators ('" +
                             tot->gen(i).name + "' has d = " + to_string(di) + ")");
    }
    s.relation = drop.apply(m.total.d().image(yi));
    CohomologyAmbient h(m.total);
    QuotientAmbient q(s.algebra, {s.relation});
    for (int n = 0; n <= verify_cutoff; ++n) {
        const std::size_t dh = h.dim(n);
        const std::size_t dq = q.dim(n);
        s.total_cohomology.push_back(dh);
        s.quotient_dims.push_back(dq);
        Echelon img(q.dim(n));
        for (std::size_t i = 0; i < dh; ++i)
            img.insert(q.coords(drop.apply(h.from_coords(n, {{i, Rational(1)}})), n));
        if (dh != dq || img.rank() != dq)
            throw ModelError("eliminating '" + y + "' is not a quasi-isomorphism in degree " + std::to_string(n) +
                             " (cohomology " + std::to_string(dh) + ", quotient " + std::to_string(dq) + ")");
        s.verified_through = n;
    }
    return s;
}

}  // namespace taut
