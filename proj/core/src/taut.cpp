#include "taut/taut.hpp"

#include "taut/errors.hpp"

#include <algorithm>

namespace taut {

namespace {

// Normal-form values of monomials in a growing list of generators, keyed by
// exponent vectors with trailing zeros removed.
class MonomialValues {
public:
    MonomialValues(const GradedAmbient& ambient) : ambient_(ambient) {}

    Element value(const std::vector<NamedElement>& gens, const Monomial& m, int degree)
    {
        std::vector<std::uint16_t> key = m.exps;
        while (!key.empty() && key.back() == 0)
            key.pop_back();
        auto it = cache_.find(key);
        if (it != cache_.end())
            return it->second;
        if (key.empty())
            return Element::constant(ambient_.algebra(), 1);
        const std::size_t last = key.size() - 1;
        Monomial prev = m;
        --prev.exps[last];
        const int gdeg = gens[last].value.degree();
        Element v = value(gens, prev, degree - gdeg) * gens[last].value;
        v = ambient_.normal_form(v, degree);
        cache_.emplace(std::move(key), v);
        return v;
    }

private:
    const GradedAmbient& ambient_;
    std::map<std::vector<std::uint16_t>, Element> cache_;
};

AlgebraPtr algebra_of(const std::vector<NamedElement>& gens)
{
    std::vector<GenSymbol> syms;
    for (const auto& g : gens)
        syms.push_back({g.name, g.value.degree(), ""});
    return make_algebra(std::move(syms));
}

bool starts_with(const std::string& s, const std::string& p)
{
    return s.size() >= p.size() && s.compare(0, p.size(), p) == 0;
}

}  // namespace

std::string kappa_name(const std::string& class_expr)
{
    return "kappa[" + class_expr + "]";
}

std::vector<std::string> default_kappa_classes(const FiberedModel& m, int cutoff)
{
    std::vector<GenSymbol> syms;
    for (const auto& name : m.class_order) {
        const Element& v = m.classes.at(name);
        if (v.is_zero() || !v.is_homogeneous())
            continue;
        syms.push_back({name, v.degree(), ""});
    }
    std::vector<std::string> out;
    if (syms.empty())
        return out;
    AlgebraPtr A = make_algebra(syms);
    for (int d = m.fiber_dim + 1; d <= cutoff + m.fiber_dim; ++d)
        for (const auto& mono : A->basis(d))
            out.push_back(A->monomial_string(mono));
    return out;
}

std::vector<NamedElement> minimal_generators(const GradedAmbient& ambient, const std::vector<NamedElement>& candidates,
                                             int cutoff)
{
    std::vector<NamedElement> sorted;
    for (const auto& c : candidates)
        if (!c.value.is_zero()) {
            if (!c.value.is_homogeneous() || c.value.degree() < 1)
                throw InputError("generator candidate '" + c.name + "' must be homogeneous of positive degree");
            sorted.push_back(c);
        }
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const NamedElement& a, const NamedElement& b) { return a.value.degree() < b.value.degree(); });
    std::vector<NamedElement> kept;
    MonomialValues values(ambient);
    std::size_t next = 0;
    for (int n = 1; n <= cutoff && next < sorted.size(); ++n) {
        Echelon span(ambient.dim(n));
        if (!kept.empty()) {
            AlgebraPtr S = algebra_of(kept);
            for (const auto& mono : S->basis(n))
                span.insert(ambient.coords(values.value(kept, mono, n), n));
        }
        while (next < sorted.size() && sorted[next].value.degree() == n) {
            if (span.insert(ambient.coords(sorted[next].value, n)))
                kept.push_back(sorted[next]);
            ++next;
        }
    }
    return kept;
}

RingPresentation kappa_ring(const FiberedModel& m, const std::vector<std::string>& classes, const KappaRingOptions& opts)
{
    const bool defaulted = classes.empty();
    std::vector<std::string> list = defaulted ? default_kappa_classes(m, opts.cutoff) : classes;
    std::vector<NamedElement> gens;
    for (const auto& c : list) {
        Element v = kappa(m, parse_expr(c), opts.fiberwise);
        if (v.is_zero()) {
            if (!defaulted)
                throw ModelError(kappa_name(c) + " vanishes and cannot be a ring generator");
            continue;
        }
        if (!v.is_homogeneous() || v.degree() < 1 || v.degree() > opts.cutoff) {
            if (!defaulted)
                throw InputError(kappa_name(c) + " must have degree between 1 and the cutoff");
            continue;
        }
        gens.push_back({kappa_name(c), v});
    }
    if (defaulted)
        gens = minimal_generators(*m.base_ring, gens, opts.cutoff);
    return subring_presentation(*m.base_ring, gens, opts.cutoff, opts.presentation);
}

Element KahlerRing::d(const Element& c) const
{
    return D.apply(AlgebraMap::by_name(classes, omega, {}).apply(c));
}

std::size_t KahlerRing::exact_dim(int n) const
{
    return n >= 0 && n <= cutoff ? exact_basis[static_cast<std::size_t>(n)].size() : 0;
}

KahlerRing kahler_exact_forms(int m, int cutoff)
{
    if (m < 3 || m % 2 == 0)
        throw InputError("Kahler model needs an odd m >= 3");
    KahlerRing K;
    K.m = m;
    K.k = (m - 1) / 2;
    K.r = m / 4 + 1;
    K.cutoff = cutoff;
    std::vector<GenSymbol> cls;
    for (int i = 1; i <= K.k; ++i)
        cls.push_back({"p" + std::to_string(i), 4 * i, ""});
    K.classes = make_algebra(cls);
    std::vector<GenSymbol> gens = cls;
    for (int i = K.r; i <= K.k; ++i)
        gens.push_back({"dp" + std::to_string(i), 4 * i - m, ""});
    K.omega = make_algebra(gens);
    std::map<std::size_t, Element> images;
    for (int i = K.r; i <= K.k; ++i)
        images.emplace(static_cast<std::size_t>(i - 1), Element::generator(K.omega, "dp" + std::to_string(i)));
    K.D = Derivation(K.omega, -m, images);
    K.d_squared_zero = true;
    for (int n = 0; n <= cutoff; ++n) {
        Echelon e(K.omega->dim(n));
        for (const auto& mono : K.omega->basis(n + m)) {
            Element dm = K.D.apply(mono);
            if (!K.D.apply(dm).is_zero())
                K.d_squared_zero = false;
            e.insert(dm.coordinates(n));
        }
        std::vector<Element> basis;
        for (const auto& row : e.reduced_rows())
            basis.push_back(Element::from_coordinates(K.omega, n, row));
        K.exact_basis.push_back(std::move(basis));
    }
    K.products_vanish = true;
    for (int a = 0; a <= cutoff; ++a)
        for (int b = a; a + b <= cutoff; ++b)
            for (const auto& x : K.exact_basis[static_cast<std::size_t>(a)])
                for (const auto& y : K.exact_basis[static_cast<std::size_t>(b)])
                    if (!(x * y).is_zero())
                        K.products_vanish = false;
    return K;
}

AlgebraMap kahler_to_base(const KahlerRing& K, const AlgebraPtr& base, const std::string& suffix)
{
    std::vector<Element> images;
    for (std::size_t i = 0; i < K.omega->size(); ++i) {
        const std::string& name = K.omega->gen(i).name;
        std::string target = starts_with(name, "dp") ? name.substr(1) + suffix : name;
        images.push_back(Element::generator(base, target));
    }
    return AlgebraMap(K.omega, base, images);
}

KillResult kill_cocycles(const Cdga& c, const std::vector<NamedElement>& classes)
{
    KillResult r;
    r.model = c;
    r.from_original = AlgebraMap::by_name(c.algebra(), c.algebra(), {});
    for (const auto& cls : classes) {
        const AlgebraPtr& A = r.model.algebra();
        Element v = r.from_original.apply(cls.value);
        if (v.is_zero())
            throw InputError("class killed by '" + cls.name + "' is zero");
        if (!v.is_homogeneous() || v.degree() < 1)
            throw InputError("class killed by '" + cls.name + "' must be homogeneous of positive degree");
        if (!r.model.differential(v).is_zero())
            throw ModelError("class killed by '" + cls.name + "' is not a cocycle");
        if (v.degree() >= 2) {
            std::vector<GenSymbol> gens = A->gens();
            if (A->index_of(cls.name))
                throw InputError("generator name '" + cls.name + "' is already in use");
            gens.push_back({cls.name, v.degree() - 1, "kills a class"});
            AlgebraPtr B = make_algebra(gens);
            AlgebraMap inc = AlgebraMap::by_name(A, B, {});
            std::map<std::size_t, Element> d;
            for (std::size_t i = 0; i < A->size(); ++i) {
                Element di = inc.apply(r.model.d().image(i));
                if (!di.is_zero())
                    d.emplace(i, di);
            }
            d.emplace(A->size(), inc.apply(v));
            r.model = Cdga(B, Derivation(B, 1, d));
            r.from_original = AlgebraMap(r.from_original.source(), B, [&] {
                std::vector<Element> im;
                for (std::size_t i = 0; i < r.from_original.source()->size(); ++i)
                    im.push_back(inc.apply(r.from_original.image(i)));
                return im;
            }());
            r.adjoined.push_back(cls.name);
            continue;
        }
        // degree 1: solve the class for one of its generators
        std::optional<std::size_t> g;
        Rational coeff;
        for (const auto& [mono, cf] : v.terms())
            for (std::size_t i = 0; i < A->size(); ++i)
                if (mono.exps[i] && !g) {
                    g = i;
                    coeff = cf;
                }
        const std::string gname = A->gen(*g).name;
        Element rest = v - coeff * Element::generator(A, *g);
        std::vector<GenSymbol> gens;
        for (std::size_t i = 0; i < A->size(); ++i)
            if (i != *g)
                gens.push_back(A->gen(i));
        AlgebraPtr B = make_algebra(gens);
        AlgebraMap to_b = AlgebraMap::by_name(A, B, {});
        Element solved = (Rational(-1) / coeff) * to_b.apply(rest);
        AlgebraMap phi = AlgebraMap::by_name(A, B, {{gname, solved}});
        std::map<std::size_t, Element> d;
        for (std::size_t i = 0; i < B->size(); ++i) {
            Element di = phi.apply(r.model.d().image(A->require(B->gen(i).name)));
            if (!di.is_zero())
                d.emplace(i, di);
        }
        Cdga next(B, Derivation(B, 1, d));
        if (next.differential(solved) != phi.apply(r.model.d().image(*g)))
            throw ModelError("quotient by the degree-1 class '" + cls.name + "' is not compatible with the differential");
        std::vector<Element> im;
        for (std::size_t i = 0; i < r.from_original.source()->size(); ++i)
            im.push_back(phi.apply(r.from_original.image(i)));
        r.from_original = AlgebraMap(r.from_original.source(), B, im);
        r.model = std::move(next);
        r.quotiented.push_back(gname);
    }
    return r;
}

const Element& DifferenceData::coefficient(const std::string& name) const
{
    for (const auto& c : coefficients)
        if (c.name == name)
            return c.value;
    throw InputError("no difference coefficient named '" + name + "'");
}

namespace {

struct DifferenceClass {
    std::string cls;
    std::string fw;
    std::string prefix;
};

std::vector<DifferenceClass> difference_classes(const FiberedModel& m, const std::map<std::string, Element>& fw)
{
    std::vector<DifferenceClass> out;
    for (const auto& name : m.class_order) {
        auto it = fw.find(name + "_fw");
        if (it == fw.end())
            continue;
        std::string prefix = name == "e" ? "ed" : name.substr(0, 1) + "d" + name.substr(1);
        out.push_back({name, it->first, prefix});
    }
    return out;
}

}  // namespace

DifferenceData difference_ideal(const FiberedModel& m)
{
    const auto fw = fiberwise_classes(m);
    DifferenceData out;
    for (const auto& dc : difference_classes(m, fw)) {
        std::vector<Element> coeffs = decompose(m, fw.at(dc.fw) - m.classes.at(dc.cls));
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            out.coefficients.push_back({dc.prefix + "|" + std::to_string(j), coeffs[j]});
            if (!coeffs[j].is_zero())
                out.ideal.push_back(coeffs[j]);
        }
    }
    return out;
}

std::map<std::string, Element> trivialization(const FiberedModel& m, const std::string& class_name)
{
    const auto fw = fiberwise_classes(m);
    auto it = fw.find(class_name + "_fw");
    if (it == fw.end() || !m.classes.count(class_name))
        throw InputError("class '" + class_name + "' has no fiberwise counterpart to trivialize against");
    std::vector<Element> coeffs = decompose(m, it->second - m.classes.at(class_name));
    const AlgebraPtr& B = m.base_algebra();
    std::map<std::string, Element> out;
    for (const auto& c : coeffs) {
        if (c.is_zero())
            continue;
        std::optional<std::size_t> pick;
        Rational coeff;
        for (const auto& [mono, cf] : c.terms()) {
            if (mono.word_length() != 1)
                continue;
            std::size_t g = 0;
            while (!mono.exps[g])
                ++g;
            const std::string& name = B->gen(g).name;
            if (!(starts_with(name, class_name + "|") || starts_with(name, class_name + "_")) || out.count(name))
                continue;
            bool elsewhere = false;
            for (const auto& [m2, unused] : c.terms())
                if (!(m2 == mono) && m2.exps[g])
                    elsewhere = true;
            if (!elsewhere) {
                pick = g;
                coeff = cf;
                break;
            }
        }
        if (!pick)
            throw ModelError("difference coefficient " + to_string(c) + " cannot be solved for a generator of '" +
                             class_name + "'");
        Element rest = c - coeff * Element::generator(B, *pick);
        out.emplace(B->gen(*pick).name, (Rational(-1) / coeff) * rest);
    }
    // resolve chains between the solved generators
    for (int pass = 0; pass < static_cast<int>(out.size()); ++pass) {
        AlgebraMap sub = AlgebraMap::by_name(B, B, out);
        bool changed = false;
        for (auto& [name, v] : out) {
            Element w = sub.apply(v);
            if (w != v) {
                v = w;
                changed = true;
            }
        }
        if (!changed)
            break;
    }
    return out;
}

KernelResult ring_map_kernel(const AlgebraMap& f, const GradedAmbient& target, int cutoff)
{
    if (f.target() != target.algebra())
        throw InputError("ring map target does not match the ambient");
    const AlgebraPtr& S = f.source();
    for (std::size_t i = 0; i < S->size(); ++i) {
        const Element& im = f.image(i);
        if (!im.is_zero() && im.degree() != S->degree(i))
            throw InputError("image of '" + S->gen(i).name + "' has the wrong degree");
    }
    KernelResult k;
    k.source = S;
    k.cutoff = cutoff;
    k.kernel_dims.push_back(0);
    std::vector<NamedElement> gens;
    for (std::size_t i = 0; i < S->size(); ++i)
        gens.push_back({S->gen(i).name, f.image(i)});
    std::map<Monomial, Element> values;
    values.emplace(S->one(), Element::constant(target.algebra(), 1));
    std::vector<Element> found;
    for (int n = 1; n <= cutoff; ++n) {
        const auto& basis = S->basis(n);
        std::vector<SparseVec> images;
        Echelon img(target.dim(n));
        for (const auto& m : basis) {
            std::size_t last = S->size();
            while (m.exps[--last] == 0) {}
            Monomial prev = m;
            --prev.exps[last];
            Element v = values.at(prev) * f.image(last);
            SparseVec c = v.is_zero() ? SparseVec{} : target.coords(v, n);
            values.emplace(m, target.from_coords(n, c));
            img.insert(c);
            images.push_back(std::move(c));
        }
        const std::size_t dim_k = basis.size() - img.rank();
        k.kernel_dims.push_back(dim_k);
        Echelon known(basis.size());
        for (const auto& v : ideal_span(*S, found, n))
            known.insert(v);
        if (known.rank() == dim_k)
            continue;
        for (const auto& v : kernel_of_images(images, target.dim(n))) {
            if (!known.insert(v))
                continue;
            Element r = Element::from_coordinates(S, n, v);
            k.generators.push_back({n, r});
            found.push_back(r);
        }
    }
    return k;
}

IdealComparison compare_with(const KernelResult& k, const std::vector<Element>& ideal)
{
    IdealComparison out;
    std::vector<Element> gens;
    for (const auto& r : k.generators)
        gens.push_back(r.poly);
    for (const auto& g : ideal)
        if (g.algebra() != k.source)
            throw InputError("candidate ideal lives in a different algebra");
    for (int n = 1; n <= k.cutoff; ++n) {
        const std::size_t dim = k.source->dim(n);
        Echelon a(dim), both(dim);
        for (const auto& v : ideal_span(*k.source, gens, n)) {
            a.insert(v);
            both.insert(v);
        }
        Echelon b(dim);
        for (const auto& v : ideal_span(*k.source, ideal, n)) {
            b.insert(v);
            both.insert(v);
        }
        if (a.rank() != b.rank() || both.rank() != a.rank()) {
            out.equal = false;
            out.first_mismatch = n;
            out.detail = "degree " + std::to_string(n) + ": kernel has dimension " + std::to_string(a.rank()) +
                         ", candidate ideal " + std::to_string(b.rank()) + ", sum " + std::to_string(both.rank());
            return out;
        }
    }
    return out;
}

ProjectiveKernelData projective_bundle_map(int n)
{
    Projectivization P = projectivization_chern(n);
    std::vector<GenSymbol> gens;
    for (int i = 2; i <= n + 1; ++i)
        gens.push_back({"a" + std::to_string(i), 2 * i, ""});
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j < i; ++j)
            gens.push_back({"c" + std::to_string(i) + "|" + std::to_string(j), 2 * (i - j), ""});
    AlgebraPtr S = make_algebra(gens);
    std::vector<Element> images;
    for (int i = 2; i <= n + 1; ++i)
        images.push_back(P.a[static_cast<std::size_t>(i)]);
    ProjectiveKernelData out;
    auto a_src = [&](int i) {
        return i == 1 ? Element(S) : Element::generator(S, "a" + std::to_string(i));
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j < i; ++j) {
            const Rational b(binomial(n + 1 - i + j, j));
            images.push_back(b * P.a[static_cast<std::size_t>(i - j)]);
            out.ideal.push_back(Element::generator(S, "c" + std::to_string(i) + "|" + std::to_string(j)) -
                                b * a_src(i - j));
        }
    out.q = AlgebraMap(S, P.chern, images);
    return out;
}

bool in_ideal_square(const Algebra& alg, const std::vector<Element>& gens, const Element& a)
{
    if (a.is_zero())
        return true;
    const int n = a.degree();
    std::vector<Element> products;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i; j < gens.size(); ++j)
            products.push_back(gens[i] * gens[j]);
    Echelon span(alg.dim(n));
    for (const auto& v : ideal_span(alg, products, n))
        span.insert(v);
    return span.contains(a.coordinates(n));
}

std::optional<Element> express_in_generators(const GradedAmbient& ambient, const RingPresentation& p,
                                             const Element& a)
{
    if (a.is_zero())
        return Element(p.symbols);
    const int n = a.degree();
    const auto& basis = p.symbols->basis(n);
    Echelon e(ambient.dim(n), true);
    for (std::size_t i = 0; i < basis.size(); ++i)
        e.insert(ambient.coords(evaluate(p, Element::monomial(p.symbols, basis[i])), n), i);
    auto combo = e.express(ambient.coords(a, n));
    if (!combo)
        return std::nullopt;
    return Element::from_coordinates(p.symbols, n, *combo);
}

Cp2Report cp2_report(const FiberedModel& real_model, const std::map<std::string, int>& base_signs, int cutoff)
{
    Cp2Report R;
    R.model = substitute_base(real_model, trivialization(real_model, "e"));
    const FiberedModel& T = R.model;
    const AlgebraPtr& B = T.base_algebra();
    for (const char* c : {"p1^2", "e*p1", "L2", "L3", "p1^4"})
        R.kappas.emplace(c, kappa(T, parse_expr(c)));
    for (const char* c : {"p1^2", "p1^4", "e*p1", "e"})
        R.fiberwise_kappas.emplace(c, kappa(real_model, parse_expr(c), true));
    R.differences = difference_ideal(T);
    const Element pd0 = R.differences.coefficient("pd1|0");
    const Element pd1 = R.differences.coefficient("pd1|1");
    auto K = [&](const char* c) { return R.kappas.at(c); };
    auto check = [&](const std::string& lhs, const std::string& rhs, const Element& l, const Element& r) {
        R.identities.push_back({lhs + " = " + rhs, lhs + " = " + to_string(l), rhs + " = " + to_string(r), l == r});
    };
    check("21*pd1|0", "4*kappa[p1^2] - 7*kappa[e*p1] + 180*kappa[L2]", Rational(21) * pd0,
          Rational(4) * K("p1^2") - Rational(7) * K("e*p1") + Rational(180) * K("L2"));
    check("45*kappa[L2]", "6*pd1|0 - pd1|1^2", Rational(45) * K("L2"),
          Rational(6) * pd0 - pd1 * pd1);

    const Element lambda = power(Element::generator(B, "p1|1"), 2);
    std::vector<NamedElement> gens{{kappa_name("p1^2"), K("p1^2")},
                                   {kappa_name("p1^4"), K("p1^4")},
                                   {kappa_name("L2"), K("L2")},
                                   {kappa_name("L3"), K("L3")},
                                   {"lambda", lambda}};
    FreeAmbient amb(B);
    R.ring = subring_presentation(amb, gens, cutoff);
    std::map<std::string, int> signs;
    for (const auto& [name, s] : base_signs)
        if (B->index_of(name))
            signs.emplace(name, s);
    R.invariant_ring = invariant_subring(B, signs, cutoff);
    R.generates_invariants = R.ring.hilbert == R.invariant_ring.hilbert;

    std::vector<Element> rels;
    for (const auto& r : R.ring.relations)
        rels.push_back(r.poly);
    QuotientAmbient presented(R.ring.symbols, rels);
    const Element kL2 = Element::generator(R.ring.symbols, kappa_name("L2"));
    const Element kL3 = Element::generator(R.ring.symbols, kappa_name("L3"));
    R.l_classes_regular = is_regular_sequence(presented, {kL2, kL3}, cutoff);

    R.quartic_symbols = make_algebra({{kappa_name("p1^2"), K("p1^2").degree(), ""},
                                      {kappa_name("p1^4"), K("p1^4").degree(), ""},
                                      {"lambda", 4, ""}});
    R.quartic = Element(R.quartic_symbols);
    if (R.ring.relations.size() == 1) {
        AlgebraMap drop = AlgebraMap::by_name(R.ring.symbols, R.quartic_symbols, {});
        Element q = drop.apply(R.ring.relations.front().poly);
        Monomial l4 = R.quartic_symbols->one();
        l4.exps[2] = 4;
        const Rational lead = q.coefficient(l4);
        if (lead != 0)
            R.quartic = (Rational(1) / lead) * q;
    }
    auto pd = express_in_generators(amb, R.ring, pd0);
    if (pd) {
        R.pd10_in_generators = *pd;
        std::vector<Element> ideal = rels;
        ideal.push_back(kL2);
        ideal.push_back(kL3);
        QuotientAmbient final_ring(R.ring.symbols, ideal);
        R.pd10_survives = !final_ring.in_ideal(*pd, pd->degree());
    }
    return R;
}

}  // namespace taut
