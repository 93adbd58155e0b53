#include "taut/graded.hpp"

#include "taut/errors.hpp"

#include <algorithm>
#include <sstream>

namespace taut {

Hilbert free_hilbert(const std::vector<int>& degrees, int cutoff)
{
    Hilbert h(static_cast<std::size_t>(std::max(cutoff, 0)) + 1, Integer(0));
    h[0] = 1;
    for (int d : degrees) {
        if (d < 1)
            throw InputError("free_hilbert: generator degrees must be positive");
        if (d % 2 == 0) {
            for (int n = d; n <= cutoff; ++n)
                h[n] += h[n - d];
        } else {
            for (int n = cutoff; n >= d; --n)
                h[n] += h[n - d];
        }
    }
    return h;
}

Hilbert free_hilbert(const Algebra& a, int cutoff)
{
    std::vector<int> degrees;
    for (const auto& g : a.gens())
        degrees.push_back(g.degree);
    return free_hilbert(degrees, cutoff);
}

Hilbert times_one_minus(Hilbert h, const std::vector<int>& degrees)
{
    for (int d : degrees)
        for (std::size_t n = h.size(); n-- > static_cast<std::size_t>(d);)
            h[n] -= h[n - d];
    return h;
}

std::string hilbert_string(const Hilbert& h)
{
    std::string s;
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (i)
            s += ", ";
        s += h[i].get_str();
    }
    return s;
}

std::vector<SparseVec> differential_images(const Cdga& c, int n)
{
    const auto& alg = c.algebra();
    std::vector<SparseVec> out;
    for (const auto& m : alg->basis(n))
        out.push_back(c.d().apply(m).coordinates(n + 1));
    return out;
}

std::vector<CohomologyDegree> cohomology(const Cdga& c, int cutoff)
{
    const auto& alg = c.algebra();
    std::vector<CohomologyDegree> out;
    std::vector<SparseVec> boundaries;  // images from degree n-1
    for (int n = 0; n <= cutoff; ++n) {
        std::vector<SparseVec> images = differential_images(c, n);
        std::vector<SparseVec> cycles = kernel_of_images(images, alg->dim(n + 1));
        std::vector<SparseVec> reps = complement_representatives(alg->dim(n), boundaries, cycles);
        CohomologyDegree h;
        h.degree = n;
        h.dim = reps.size();
        for (const auto& r : reps)
            h.representatives.push_back(Element::from_coordinates(alg, n, r));
        out.push_back(std::move(h));
        boundaries = std::move(images);
    }
    return out;
}

Hilbert GradedAmbient::hilbert(int cutoff) const
{
    Hilbert h;
    for (int n = 0; n <= cutoff; ++n)
        h.emplace_back(static_cast<unsigned long>(dim(n)));
    return h;
}

SparseVec FreeAmbient::coords(const Element& a, int n) const
{
    if (!a.is_zero() && a.algebra() != alg_)
        throw InputError("element does not belong to the ambient algebra");
    return a.coordinates(n);
}

Element FreeAmbient::from_coords(int n, const SparseVec& v) const
{
    return Element::from_coordinates(alg_, n, v);
}

const CohomologyAmbient::Piece& CohomologyAmbient::piece(int n) const
{
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = pieces_.find(n);
    if (it != pieces_.end())
        return *it->second;
    auto p = std::make_unique<Piece>();
    const auto& alg = cdga_.algebra();
    p->basis = std::make_unique<Echelon>(n >= 0 ? alg->dim(n) : 0, true);
    if (n >= 0) {
        std::vector<SparseVec> boundaries = n > 0 ? differential_images(cdga_, n - 1) : std::vector<SparseVec>{};
        for (const auto& b : boundaries)
            if (p->basis->insert(b, p->nb))
                ++p->nb;
        std::vector<SparseVec> cycles = kernel_of_images(differential_images(cdga_, n), alg->dim(n + 1));
        for (const auto& z : cycles)
            if (p->basis->insert(z, p->nb + p->reps.size()))
                p->reps.push_back(z);
    }
    auto& ref = *p;
    pieces_.emplace(n, std::move(p));
    return ref;
}

std::size_t CohomologyAmbient::dim(int n) const
{
    return piece(n).reps.size();
}

SparseVec CohomologyAmbient::coords(const Element& a, int n) const
{
    if (a.is_zero())
        return {};
    if (a.algebra() != cdga_.algebra())
        throw InputError("element does not belong to the ambient algebra");
    const Piece& p = piece(n);
    auto combo = p.basis->express(a.coordinates(n));
    if (!combo || a.homogeneous_part(n) != a)
        throw ModelError("element is not a cocycle of degree " + std::to_string(n) + ": " + to_string(a));
    SparseVec out;
    for (const auto& [id, c] : *combo)
        if (id >= p.nb)
            out.emplace_back(id - p.nb, c);
    return out;
}

Element CohomologyAmbient::from_coords(int n, const SparseVec& v) const
{
    const Piece& p = piece(n);
    SparseVec acc;
    for (const auto& [i, c] : v)
        acc = sparse_add(acc, p.reps.at(i), c);
    return Element::from_coordinates(cdga_.algebra(), n, acc);
}

bool CohomologyAmbient::is_coboundary(const Element& a, int n) const
{
    return coords(a, n).empty();
}

QuotientAmbient::QuotientAmbient(AlgebraPtr alg, std::vector<Element> ideal) : alg_(std::move(alg))
{
    for (auto& g : ideal) {
        if (g.is_zero())
            continue;
        if (g.algebra() != alg_)
            throw InputError("ideal generator belongs to another algebra");
        if (!g.is_homogeneous())
            throw InputError("ideal generators must be homogeneous");
        ideal_.push_back(std::move(g));
    }
}

std::vector<SparseVec> ideal_span(const Algebra& alg, const std::vector<Element>& gens, int n)
{
    std::vector<SparseVec> out;
    for (const auto& g : gens) {
        if (g.is_zero())
            continue;
        int d = g.degree();
        if (d > n)
            continue;
        for (const auto& m : alg.basis(n - d)) {
            Element t = Element::monomial(g.algebra(), m) * g;
            if (!t.is_zero())
                out.push_back(t.coordinates(n));
        }
    }
    return out;
}

const QuotientAmbient::Piece& QuotientAmbient::piece(int n) const
{
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = pieces_.find(n);
    if (it != pieces_.end())
        return *it->second;
    auto p = std::make_unique<Piece>();
    const std::size_t dim = n >= 0 ? alg_->dim(n) : 0;
    p->ideal = std::make_unique<Echelon>(dim);
    if (n >= 0)
        for (const auto& v : ideal_span(*alg_, ideal_, n))
            p->ideal->insert(v);
    for (std::size_t c = 0; c < dim; ++c) {
        if (p->ideal->is_pivot(c))
            continue;
        p->position.emplace(c, p->free_cols.size());
        p->free_cols.push_back(c);
    }
    auto& ref = *p;
    pieces_.emplace(n, std::move(p));
    return ref;
}

std::size_t QuotientAmbient::dim(int n) const
{
    return piece(n).free_cols.size();
}

SparseVec QuotientAmbient::coords(const Element& a, int n) const
{
    if (a.is_zero())
        return {};
    if (a.algebra() != alg_)
        throw InputError("element does not belong to the ambient algebra");
    const Piece& p = piece(n);
    SparseVec out;
    for (const auto& [c, x] : p.ideal->reduce(a.coordinates(n)))
        out.emplace_back(p.position.at(c), x);
    return out;
}

Element QuotientAmbient::from_coords(int n, const SparseVec& v) const
{
    const Piece& p = piece(n);
    SparseVec w;
    for (const auto& [i, x] : v)
        w.emplace_back(p.free_cols.at(i), x);
    return Element::from_coordinates(alg_, n, w);
}

bool QuotientAmbient::in_ideal(const Element& a, int n) const
{
    return coords(a, n).empty();
}

std::vector<int> RingPresentation::generator_degrees() const
{
    std::vector<int> d;
    for (const auto& g : generators)
        d.push_back(g.value.degree());
    return d;
}

namespace {

AlgebraPtr symbol_algebra(const std::vector<NamedElement>& gens)
{
    std::vector<GenSymbol> syms;
    for (const auto& g : gens) {
        if (g.value.is_zero() || !g.value.is_homogeneous())
            throw InputError("subring generator '" + g.name + "' must be nonzero and homogeneous");
        if (g.value.degree() < 1)
            throw InputError("subring generator '" + g.name + "' must have positive degree");
        syms.push_back({g.name, g.value.degree(), "subring generator"});
    }
    return make_algebra(std::move(syms));
}

void certify_indecomposables(const FreeAmbient& ambient, RingPresentation& p)
{
    const Algebra& alg = *ambient.algebra();
    std::map<int, std::vector<std::size_t>> ambient_by_degree;
    for (std::size_t i = 0; i < alg.size(); ++i)
        ambient_by_degree[alg.degree(i)].push_back(i);
    std::map<int, std::vector<SparseVec>> linear_by_degree;
    for (const auto& g : p.generators) {
        SparseVec lin;
        for (const auto& [m, c] : g.value.terms())
            if (m.word_length() == 1)
                for (std::size_t i = 0; i < alg.size(); ++i)
                    if (m.exps[i])
                        lin.emplace_back(i, c);
        std::sort(lin.begin(), lin.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        linear_by_degree[g.value.degree()].push_back(std::move(lin));
    }
    for (const auto& [d, vs] : linear_by_degree) {
        Echelon e(alg.size());
        for (const auto& v : vs)
            if (!e.insert(v))
                throw ModelError("indecomposables certificate failed: linear parts of the degree-" +
                                 std::to_string(d) + " generators are dependent");
        if (vs.size() != ambient_by_degree[d].size())
            throw ModelError("indecomposables certificate failed: degree " + std::to_string(d) + " has " +
                             std::to_string(vs.size()) + " generators but the ambient has " +
                             std::to_string(ambient_by_degree[d].size()));
    }
    for (const auto& [d, gs] : ambient_by_degree)
        if (!gs.empty() && linear_by_degree[d].size() != gs.size())
            throw ModelError("indecomposables certificate failed: ambient generators in degree " + std::to_string(d) +
                             " are not reached");
    p.hilbert = free_hilbert(p.generator_degrees(), p.cutoff);
    p.ambient_hilbert = free_hilbert(alg, p.cutoff);
}

}  // namespace

RingPresentation subring_presentation(const GradedAmbient& ambient, const std::vector<NamedElement>& gens, int cutoff,
                                      const PresentationOptions& opts)
{
    RingPresentation p;
    p.generators = gens;
    p.symbols = symbol_algebra(gens);
    p.cutoff = cutoff;
    p.method = opts.method;
    for (const auto& g : gens)
        if (g.value.algebra() != ambient.algebra())
            throw InputError("subring generator '" + g.name + "' lives outside the ambient algebra");

    if (opts.method == "indecomposables") {
        const auto* free = dynamic_cast<const FreeAmbient*>(&ambient);
        if (!free)
            throw InputError("the indecomposables certificate needs a free ambient");
        certify_indecomposables(*free, p);
        return p;
    }
    if (opts.method != "degreewise")
        throw InputError("unknown presentation method '" + opts.method + "'");

    const AlgebraPtr& S = p.symbols;
    p.ambient_hilbert = ambient.hilbert(cutoff);
    p.hilbert.assign(static_cast<std::size_t>(cutoff) + 1, Integer(0));
    p.hilbert[0] = ambient.dim(0) > 0 ? 1 : 0;

    std::map<Monomial, Element> values;
    values.emplace(S->one(), Element::constant(ambient.algebra(), 1));
    std::vector<Element> relation_polys;
    for (int n = 1; n <= cutoff; ++n) {
        const auto& basis = S->basis(n);
        if (basis.empty())
            continue;
        std::vector<SparseVec> images;
        images.reserve(basis.size());
        for (const auto& m : basis) {
            std::size_t last = S->size();
            while (m.exps[--last] == 0) {}
            Monomial prev = m;
            --prev.exps[last];
            Element v = values.at(prev) * gens[last].value;
            SparseVec c = ambient.coords(v, n);
            values.emplace(m, ambient.from_coords(n, c));
            images.push_back(std::move(c));
        }
        std::vector<SparseVec> kernel = kernel_of_images(images, ambient.dim(n));
        p.hilbert[n] = static_cast<unsigned long>(basis.size() - kernel.size());
        if (kernel.empty())
            continue;
        Echelon known(basis.size());
        for (const auto& v : ideal_span(*S, relation_polys, n))
            known.insert(v);
        for (const auto& k : kernel) {
            if (!known.insert(k))
                continue;
            Element r = Element::from_coordinates(S, n, k);
            p.relations.push_back({n, r});
            relation_polys.push_back(r);
        }
    }
    return p;
}

Element evaluate(const RingPresentation& p, const Element& poly)
{
    std::vector<Element> images;
    for (const auto& g : p.generators)
        images.push_back(g.value);
    if (images.empty())
        throw InputError("presentation has no generators");
    AlgebraMap f(p.symbols, images.front().algebra(), images);
    return f.apply(poly);
}

RingPresentation invariant_subring(const AlgebraPtr& alg, const std::map<std::string, int>& signs, int cutoff)
{
    std::vector<int> s(alg->size(), 1);
    for (const auto& [name, v] : signs) {
        if (v != 1 && v != -1)
            throw InputError("sign of '" + name + "' must be +1 or -1 for an involution");
        s[alg->require(name)] = v;
    }
    auto sign_of = [&](const Monomial& m) {
        int r = 1;
        for (std::size_t i = 0; i < m.exps.size(); ++i)
            if (m.exps[i] % 2 && s[i] < 0)
                r = -r;
        return r;
    };
    std::vector<NamedElement> gens;
    for (int n = 1; n <= cutoff; ++n) {
        for (const auto& m : alg->basis(n)) {
            if (sign_of(m) != 1)
                continue;
            // decomposable iff some proper invariant divisor of positive degree exists
            bool decomposable = false;
            Monomial d = alg->one();
            std::function<void(std::size_t)> walk = [&](std::size_t i) {
                if (decomposable)
                    return;
                if (i == m.exps.size()) {
                    int deg = alg->degree(d);
                    if (deg > 0 && deg < n && sign_of(d) == 1)
                        decomposable = true;
                    return;
                }
                for (int e = 0; e <= m.exps[i]; ++e) {
                    d.exps[i] = static_cast<std::uint16_t>(e);
                    walk(i + 1);
                }
                d.exps[i] = 0;
            };
            walk(0);
            if (decomposable)
                continue;
            std::string name = m.word_length() == 1 ? alg->monomial_string(m) : "[" + alg->monomial_string(m) + "]";
            gens.push_back({name, Element::monomial(alg, m)});
        }
    }
    FreeAmbient ambient(alg);
    RingPresentation p = subring_presentation(ambient, gens, cutoff);
    p.method = "invariant monomials";
    return p;
}

RegularSequenceResult is_regular_sequence(const GradedAmbient& ambient, const std::vector<Element>& elems, int cutoff)
{
    std::vector<int> degrees;
    for (const auto& e : elems) {
        if (e.is_zero() || !e.is_homogeneous() || e.degree() < 1)
            throw InputError("regular sequence members must be nonzero, homogeneous, of positive degree");
        degrees.push_back(e.degree());
    }
    RegularSequenceResult r;
    Hilbert amb = ambient.hilbert(cutoff);
    r.expected = times_one_minus(amb, degrees);
    for (int n = 0; n <= cutoff; ++n) {
        Echelon span(ambient.dim(n));
        for (const auto& e : elems) {
            int d = e.degree();
            if (d > n)
                continue;
            for (std::size_t b = 0; b < ambient.dim(n - d); ++b) {
                Element prod = ambient.from_coords(n - d, {{b, Rational(1)}}) * e;
                span.insert(ambient.coords(prod, n));
            }
        }
        r.quotient.emplace_back(static_cast<unsigned long>(ambient.dim(n) - span.rank()));
    }
    r.regular = r.quotient == r.expected;
    return r;
}

Hilbert presented_hilbert(const RingPresentation& p, int cutoff)
{
    std::vector<Element> rels;
    for (const auto& r : p.relations)
        rels.push_back(r.poly);
    return QuotientAmbient(p.symbols, rels).hilbert(cutoff);
}

std::string to_string(const RingPresentation& p)
{
    std::ostringstream out;
    out << "generators (" << p.generators.size() << "):\n";
    for (const auto& g : p.generators)
        out << "  " << g.name << "  [degree " << g.value.degree() << "]  = " << to_string(g.value) << "\n";
    out << "relations (" << p.relations.size() << "):\n";
    for (const auto& r : p.relations)
        out << "  [degree " << r.degree << "]  " << to_string(r.poly) << " = 0\n";
    out << "hilbert: " << hilbert_string(p.hilbert) << "\n";
    out << "ambient: " << hilbert_string(p.ambient_hilbert) << "\n";
    return out.str();
}

}  // namespace taut
