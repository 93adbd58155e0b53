#include "taut/fiber.hpp"

#include "taut/errors.hpp"

#include <cctype>
#include <mutex>

namespace taut {

namespace {

std::size_t base_size(const FiberedModel& m)
{
    return m.base_algebra()->size();
}

// Splits a total element by x-exponent into base elements.
std::map<int, Element> split_by_x(const FiberedModel& m, const Element& a)
{
    const AlgebraPtr& base = m.base_algebra();
    const std::size_t nb = base_size(m);
    std::map<int, Element> out;
    for (const auto& [mono, c] : a.terms()) {
        Monomial bm = base->one();
        for (std::size_t i = 0; i < nb; ++i)
            bm.exps[i] = mono.exps[i];
        auto it = out.try_emplace(mono.exps[m.x], Element(base)).first;
        it->second.add_term(bm, c);
    }
    return out;
}

void setup_maps(FiberedModel& m)
{
    m.base_to_total = AlgebraMap::by_name(m.base_algebra(), m.total, {});
    m.total_to_base = AlgebraMap::by_name(m.total, m.base_algebra(), {});
    if (m.base.zero_differential())
        m.base_ring = std::make_shared<FreeAmbient>(m.base_algebra());
    else
        m.base_ring = std::make_shared<CohomologyAmbient>(m.base);
}

bool parse_indexed(const std::string& s, const std::string& prefix, int& index)
{
    if (s.size() <= prefix.size() || s.compare(0, prefix.size(), prefix) != 0)
        return false;
    int v = 0;
    for (std::size_t i = prefix.size(); i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])) || v > 100000)
            return false;
        v = 10 * v + (s[i] - '0');
    }
    if (v < 1)
        return false;
    index = v;
    return true;
}

}  // namespace

Element FiberedModel::reduce(const Element& a) const
{
    if (strategy != PushforwardStrategy::FreeModule)
        return a;
    const int deg = top + 1;
    Element tail = Element::generator(total, x);
    tail = power(tail, deg) - relation;  // x^{deg} = tail modulo the relation
    Element cur = a;
    for (;;) {
        Element low(total);
        Element high(total);
        for (const auto& [mono, c] : cur.terms()) {
            if (mono.exps[x] >= deg) {
                Monomial r = mono;
                r.exps[x] = static_cast<std::uint16_t>(r.exps[x] - deg);
                high += Element::monomial(total, r, c) * tail;
            } else {
                low.add_term(mono, c);
            }
        }
        if (high.is_zero() && low == cur)
            return cur;
        cur = low + high;
    }
}

std::vector<Element> FiberedModel::x_coefficients(const Element& a) const
{
    const int n = strategy == PushforwardStrategy::FreeModule ? top : 1;
    std::vector<Element> out(static_cast<std::size_t>(n) + 1, Element(base_algebra()));
    for (auto& [e, c] : split_by_x(*this, reduce(a))) {
        if (e > n)
            throw ModelError("element has x-degree " + std::to_string(e) + " beyond the fiber basis");
        out[static_cast<std::size_t>(e)] = std::move(c);
    }
    return out;
}

Element FiberedModel::pushforward(const Element& a) const
{
    if (a.algebra() != total)
        throw InputError("pushforward needs an element of the total algebra");
    return x_coefficients(a).back();
}

bool FiberedModel::base_equal(const Element& a, const Element& b) const
{
    Element d = a - b;
    if (d.is_zero())
        return true;
    if (dynamic_cast<const FreeAmbient*>(base_ring.get()))
        return false;
    if (!d.is_homogeneous())
        return false;
    return base_ring->coords(d, d.degree()).empty();
}

FiberedModel free_module_model(const RelativeModel& m, const SimplifiedTotal& s, std::optional<int> rank)
{
    FiberedModel f;
    f.strategy = PushforwardStrategy::FreeModule;
    f.base = m.base.cdga;
    f.total = s.algebra;
    const std::size_t nb = f.base_algebra()->size();
    if (f.total->size() != nb + 1)
        throw ModelError("the free-module pushforward needs exactly one fiber generator besides '" + s.eliminated + "'");
    f.x = nb;
    const int xd = f.total->degree(f.x);
    if (xd % 2 != 0 || xd <= 0)
        throw ModelError("the free-module pushforward needs an even fiber generator");
    const Element& rel = s.relation;
    if (rel.is_zero() || !rel.is_homogeneous() || rel.degree() % xd != 0)
        throw ModelError("the eliminated relation " + to_string(rel) + " is not monic in the fiber generator");
    f.top = rel.degree() / xd - 1;
    Monomial lead = f.total->one();
    lead.exps[f.x] = static_cast<std::uint16_t>(f.top + 1);
    const Rational lc = rel.coefficient(lead);
    if (lc == 0)
        throw ModelError("the eliminated relation " + to_string(rel) + " is not monic in the fiber generator");
    f.relation = (Rational(1) / lc) * rel;
    f.fiber_dim = f.top * xd;
    setup_maps(f);
    AlgebraMap drop = AlgebraMap::by_name(m.total.algebra(), s.algebra, {});
    const std::size_t yi = m.total.algebra()->require(s.eliminated);
    for (const auto& name : m.class_order) {
        const Element& c = m.cochains.at(name);
        for (const auto& [mono, coeff] : c.terms())
            if (mono.exps[yi])
                throw ModelError("characteristic cochain '" + name + "' involves the eliminated generator");
        f.class_order.push_back(name);
        f.classes.emplace(name, f.reduce(drop.apply(c)));
    }
    f.rank = rank;
    return f;
}

FiberedModel contractible_model(const RelativeModel& m, std::optional<int> rank)
{
    FiberedModel f;
    f.strategy = PushforwardStrategy::ContractiblePair;
    f.base = m.base.cdga;
    f.total = m.total.algebra();
    const std::size_t nb = f.base_algebra()->size();
    if (f.total->size() != nb + 1)
        throw ModelError("the contractible-pair pushforward needs exactly one fiber generator");
    f.x = nb;
    if (f.total->degree(f.x) % 2 == 0)
        throw ModelError("the contractible-pair pushforward needs an odd fiber generator");
    Element dx = m.total.d().image(f.x);
    for (const auto& [mono, c] : dx.terms())
        if (mono.exps[f.x])
            throw ModelError("the differential of the fiber generator must lie in the base");
    f.total_d = m.total.d();
    f.fiber_dim = f.total->degree(f.x);
    setup_maps(f);
    for (const auto& name : m.class_order) {
        f.class_order.push_back(name);
        f.classes.emplace(name, m.cochains.at(name));
    }
    f.rank = rank;
    return f;
}

FiberedModel substitute_base(const FiberedModel& m, const std::map<std::string, Element>& values)
{
    const AlgebraPtr& old_base = m.base_algebra();
    std::vector<GenSymbol> gens;
    for (const auto& g : old_base->gens())
        if (!values.count(g.name))
            gens.push_back(g);
    for (const auto& [name, v] : values) {
        const std::size_t i = old_base->require(name);
        if (v.algebra() != old_base)
            throw InputError("substituted value for '" + name + "' must be a base element");
        if (!v.is_zero() && v.degree() != old_base->degree(i))
            throw InputError("substituted value for '" + name + "' has the wrong degree");
        for (const auto& [mono, c] : v.terms())
            for (const auto& [other, unused] : values)
                if (mono.exps[old_base->require(other)])
                    throw InputError("substituted value for '" + name + "' involves the replaced generator '" +
                                     other + "'");
    }
    AlgebraPtr new_base = make_algebra(gens);
    std::vector<GenSymbol> tgens = gens;
    tgens.push_back(m.total->gen(m.x));
    AlgebraPtr new_total = make_algebra(tgens);

    AlgebraMap into_base = AlgebraMap::by_name(old_base, new_base, {});
    std::map<std::string, Element> base_over;
    for (const auto& [name, v] : values)
        base_over.emplace(name, into_base.apply(v));
    AlgebraMap phi_base = AlgebraMap::by_name(old_base, new_base, base_over);
    AlgebraMap base_lift = AlgebraMap::by_name(new_base, new_total, {});
    std::map<std::string, Element> total_over;
    for (const auto& [name, v] : base_over)
        total_over.emplace(name, base_lift.apply(v));
    AlgebraMap phi = AlgebraMap::by_name(m.total, new_total, total_over);

    std::map<std::size_t, Element> d_images;
    for (std::size_t i = 0; i < new_base->size(); ++i) {
        Element di = phi_base.apply(m.base.d().image(old_base->require(new_base->gen(i).name)));
        if (!di.is_zero())
            d_images.emplace(i, di);
    }
    FiberedModel f;
    f.strategy = m.strategy;
    f.base = Cdga(new_base, Derivation(new_base, 1, d_images));
    for (const auto& [name, v] : values) {
        Element lhs = phi_base.apply(m.base.d().image(old_base->require(name)));
        Element rhs = f.base.differential(base_over.at(name));
        if (lhs != rhs)
            throw ModelError("substitution for '" + name + "' does not commute with the differential");
    }
    f.total = new_total;
    f.x = new_base->size();
    f.fiber_dim = m.fiber_dim;
    f.top = m.top;
    f.rank = m.rank;
    setup_maps(f);
    if (m.strategy == PushforwardStrategy::FreeModule) {
        f.relation = phi.apply(m.relation);
    } else {
        std::map<std::size_t, Element> td;
        for (std::size_t i = 0; i < new_total->size(); ++i) {
            Element di = phi.apply(m.total_d.image(m.total->require(new_total->gen(i).name)));
            if (!di.is_zero())
                td.emplace(i, di);
        }
        f.total_d = Derivation(new_total, 1, td);
    }
    f.class_order = m.class_order;
    for (const auto& [name, c] : m.classes)
        f.classes.emplace(name, f.reduce(phi.apply(c)));
    return f;
}

Element coupling_class(const FiberedModel& m)
{
    if (m.strategy != PushforwardStrategy::FreeModule)
        throw ModelError("the coupling class needs a free-module fiber model");
    Element x = m.x_element();
    Element beta = m.pushforward(power(x, m.top + 1));
    return x - (make_rational(1, m.top + 1) * m.lift(beta));
}

std::vector<Element> decompose(const FiberedModel& m, const Element& a)
{
    if (m.strategy != PushforwardStrategy::FreeModule)
        throw ModelError("decomposition needs a free-module fiber model");
    const Element w = coupling_class(m);
    std::vector<Element> powers{Element::constant(m.total, 1)};
    for (int j = 1; j <= m.top; ++j)
        powers.push_back(m.reduce(powers.back() * w));
    std::vector<Element> out(static_cast<std::size_t>(m.top) + 1, Element(m.base_algebra()));
    Element r = m.reduce(a);
    for (int j = m.top; j >= 0; --j) {
        Element c = m.x_coefficients(r)[static_cast<std::size_t>(j)];
        if (c.is_zero())
            continue;
        r = m.reduce(r - m.lift(c) * powers[static_cast<std::size_t>(j)]);
        out[static_cast<std::size_t>(j)] = std::move(c);
    }
    if (!r.is_zero())
        throw ModelError("decomposition left the remainder " + to_string(r));
    return out;
}

Element reassemble(const FiberedModel& m, const std::vector<Element>& coeffs)
{
    const Element w = coupling_class(m);
    Element out(m.total);
    Element wp = Element::constant(m.total, 1);
    for (const auto& c : coeffs) {
        out += m.lift(c) * wp;
        wp = m.reduce(wp * w);
    }
    return m.reduce(out);
}

std::vector<Element> a_classes(const FiberedModel& m)
{
    const Element w = coupling_class(m);
    std::vector<Element> d = decompose(m, power(w, m.top + 1));
    const int N = m.top;
    std::vector<Element> a(static_cast<std::size_t>(N) + 2, Element(m.base_algebra()));
    a[0] = Element::constant(m.base_algebra(), 1);
    for (int k = 0; k <= N; ++k)
        a[static_cast<std::size_t>(N + 1 - k)] = -d[static_cast<std::size_t>(k)];
    if (!a[1].is_zero())
        throw ModelError("coupling class has a nonzero a_1 = " + to_string(a[1]));
    return a;
}

std::map<std::string, Element> fiberwise_classes(const FiberedModel& m)
{
    if (m.strategy != PushforwardStrategy::FreeModule || m.total->degree(m.x) != 2)
        throw ModelError("fiberwise classes need a CP^n-type model with a degree-2 fiber generator");
    const int n = m.top;
    const Element w = coupling_class(m);
    const std::vector<Element> a = a_classes(m);
    std::vector<Element> wp{Element::constant(m.total, 1)};
    for (int j = 1; j <= n; ++j)
        wp.push_back(wp.back() * w);
    std::vector<Element> c;
    for (int i = 0; i <= n; ++i) {
        Element ci(m.total);
        for (int j = 0; j <= i; ++j)
            ci += Rational(binomial(n + 1 - j, i - j)) * m.lift(a[static_cast<std::size_t>(j)]) *
                  wp[static_cast<std::size_t>(i - j)];
        c.push_back(m.reduce(ci));
    }
    auto cj = [&](int j) { return j >= 0 && j <= n ? c[static_cast<std::size_t>(j)] : Element(m.total); };
    std::map<std::string, Element> out;
    for (int i = 1; i <= n; ++i)
        out.emplace("c" + std::to_string(i) + "_fw", c[static_cast<std::size_t>(i)]);
    for (int i = 1; i <= n; ++i) {
        Element p(m.total);
        for (int j = 0; j <= 2 * i; ++j) {
            Element t = cj(j) * cj(2 * i - j);
            p += (j - i) % 2 != 0 ? -t : t;
        }
        out.emplace("p" + std::to_string(i) + "_fw", m.reduce(p));
    }
    out.emplace("e_fw", c[static_cast<std::size_t>(n)]);
    return out;
}

Rational l_series_coefficient(int k)
{
    static std::mutex mutex;
    static std::vector<Rational> bernoulli{Rational(1)};
    const int need = 2 * k;
    std::vector<Rational> b;
    {
        std::lock_guard<std::mutex> lock(mutex);
        while (static_cast<int>(bernoulli.size()) <= need) {
            const int mm = static_cast<int>(bernoulli.size());
            Rational s = 0;
            for (int j = 0; j < mm; ++j)
                s += Rational(binomial(mm + 1, j)) * bernoulli[static_cast<std::size_t>(j)];
            Rational v = -s / Rational(mm + 1);
            v.canonicalize();
            bernoulli.push_back(v);
        }
        b = bernoulli;
    }
    Integer fact = 1;
    for (int i = 2; i <= need; ++i)
        fact *= i;
    Integer two = 1;
    two <<= static_cast<mp_bitcnt_t>(need);
    Rational out = Rational(two) * b[static_cast<std::size_t>(need)] / Rational(fact);
    out.canonicalize();
    return out;
}

AlgebraPtr pontryagin_algebra(int n)
{
    static std::mutex mutex;
    static std::map<int, AlgebraPtr> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    std::vector<GenSymbol> gens;
    for (int j = 1; j <= n; ++j)
        gens.push_back({"p" + std::to_string(j), 4 * j, "Pontryagin class"});
    AlgebraPtr a = make_algebra(gens);
    cache.emplace(n, a);
    return a;
}

Element l_polynomial(int i)
{
    if (i < 1)
        throw InputError("L-polynomial index must be positive");
    AlgebraPtr A = pontryagin_algebra(i);
    // log of sum b_k y^k: n lambda_n = n b_n - sum_{k<n} k lambda_k b_{n-k}
    std::vector<Rational> b(static_cast<std::size_t>(i) + 1), lambda(static_cast<std::size_t>(i) + 1);
    for (int k = 1; k <= i; ++k)
        b[static_cast<std::size_t>(k)] = l_series_coefficient(k);
    for (int n = 1; n <= i; ++n) {
        Rational s = Rational(n) * b[static_cast<std::size_t>(n)];
        for (int k = 1; k < n; ++k)
            s -= Rational(k) * lambda[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(n - k)];
        lambda[static_cast<std::size_t>(n)] = s / Rational(n);
        lambda[static_cast<std::size_t>(n)].canonicalize();
    }
    // power sums of the formal roots via Newton's identities
    std::vector<Element> s(static_cast<std::size_t>(i) + 1, Element(A));
    for (int n = 1; n <= i; ++n) {
        Element v = Rational(n % 2 ? n : -n) * Element::generator(A, static_cast<std::size_t>(n - 1));
        for (int j = 1; j < n; ++j) {
            Element t = Element::generator(A, static_cast<std::size_t>(j - 1)) * s[static_cast<std::size_t>(n - j)];
            v += j % 2 ? t : -t;
        }
        s[static_cast<std::size_t>(n)] = v;
    }
    Element logL(A);
    for (int n = 1; n <= i; ++n)
        logL += lambda[static_cast<std::size_t>(n)] * s[static_cast<std::size_t>(n)];
    // exp, keeping only degrees <= 4i
    Element result = Element::constant(A, 1);
    Element term = Element::constant(A, 1);
    for (int mth = 1; mth <= i; ++mth) {
        Element next(A);
        const Element prod = term * logL;
        for (const auto& [mono, c] : prod.terms())
            if (A->degree(mono) <= 4 * i)
                next.add_term(mono, c);
        term = make_rational(1, mth) * next;
        result += term;
    }
    return result.homogeneous_part(4 * i);
}

ClassResolver::ClassResolver(const FiberedModel& m, bool fiberwise) : m_(m), fiberwise_(fiberwise) {}

const std::map<std::string, Element>& ClassResolver::fw() const
{
    if (!fw_)
        fw_ = fiberwise_classes(m_);
    return *fw_;
}

std::optional<Element> ClassResolver::lookup(const std::string& symbol, SourcePos pos) const
{
    const std::string suffix = "_fw";
    if (symbol.size() > suffix.size() && symbol.compare(symbol.size() - suffix.size(), suffix.size(), suffix) == 0) {
        auto it = fw().find(symbol);
        if (it != fw().end())
            return it->second;
        const std::string bare = symbol.substr(0, symbol.size() - suffix.size());
        int idx = 0;
        if (parse_indexed(bare, "L", idx) || (parse_indexed(bare, "p", idx) && m_.rank))
            return ClassResolver(m_, true).resolve(bare, pos);
        return std::nullopt;
    }
    int idx = 0;
    if (fiberwise_ && (symbol == "e" || parse_indexed(symbol, "p", idx) || parse_indexed(symbol, "c", idx))) {
        auto it = fw().find(symbol + suffix);
        if (it != fw().end())
            return it->second;
    } else {
        auto it = m_.classes.find(symbol);
        if (it != m_.classes.end())
            return it->second;
    }
    if (symbol == "w")
        return coupling_class(m_);
    const bool has_chern = m_.classes.count("c1") > 0 || (fiberwise_ && m_.total->degree(m_.x) == 2);
    if (parse_indexed(symbol, "L", idx)) {
        Element L = l_polynomial(idx);
        const AlgebraPtr& A = L.algebra();
        std::vector<Element> images;
        for (std::size_t j = 0; j < A->size(); ++j)
            images.push_back(resolve(A->gen(j).name, pos));
        return AlgebraMap(A, m_.total, images).apply(L);
    }
    if (parse_indexed(symbol, "c", idx)) {
        if (m_.rank && 2 * idx > *m_.rank)
            return Element(m_.total);
        return std::nullopt;
    }
    if (parse_indexed(symbol, "p", idx)) {
        if (has_chern) {
            Element p(m_.total);
            for (int j = 0; j <= 2 * idx; ++j) {
                auto cj = [&](int k) {
                    return k == 0 ? Element::constant(m_.total, 1) : resolve("c" + std::to_string(k), pos);
                };
                Element t = cj(j) * cj(2 * idx - j);
                p += (j - idx) % 2 != 0 ? -t : t;
            }
            return m_.reduce(p);
        }
        if (m_.rank) {
            const int r = *m_.rank / 2;
            if (idx > r)
                return Element(m_.total);
            if (*m_.rank % 2 == 0 && idx == r)
                return m_.reduce(power(resolve("e", pos), 2));
        }
        return std::nullopt;
    }
    if (symbol == "e" && has_chern && m_.rank && *m_.rank % 2 == 0)
        return resolve("c" + std::to_string(*m_.rank / 2), pos);
    return std::nullopt;
}

Element ClassResolver::resolve(const std::string& symbol, SourcePos pos) const
{
    auto it = cache_.find(symbol);
    if (it != cache_.end())
        return it->second;
    std::optional<Element> v = lookup(symbol, pos);
    if (!v)
        throw ParseError(pos, "unknown characteristic class '" + symbol + "'");
    cache_.emplace(symbol, *v);
    return *v;
}

Element ClassResolver::evaluate(const ExprPtr& e) const
{
    return m_.reduce(taut::evaluate(e, m_.total, [this](const std::string& s, SourcePos pos) { return resolve(s, pos); }));
}

Element kappa(const FiberedModel& m, const ExprPtr& c, bool fiberwise)
{
    ClassResolver r(m, fiberwise);
    return m.pushforward(r.evaluate(c));
}

KappaValue kappa(const FiberedModel& m, const std::string& class_expr, bool fiberwise)
{
    return {class_expr, kappa(m, parse_expr(class_expr), fiberwise)};
}

Projectivization projectivization_chern(int n)
{
    if (n < 1)
        throw InputError("projectivization needs n >= 1");
    Projectivization P;
    P.n = n;
    std::vector<GenSymbol> cs;
    for (int i = 1; i <= n + 1; ++i)
        cs.push_back({"c" + std::to_string(i), 2 * i, "Chern class of E"});
    P.chern = make_algebra(cs);
    auto with = [&](const std::string& name) {
        std::vector<GenSymbol> g = cs;
        g.push_back({name, 2, ""});
        return make_algebra(g);
    };
    P.chern_line = with("l");
    P.chern_coupling = with("w");
    auto c = [&](const AlgebraPtr& A, int i) {
        return i == 0 ? Element::constant(A, 1) : Element::generator(A, static_cast<std::size_t>(i - 1));
    };
    P.e0 = make_rational(1, n + 1) * c(P.chern, 1);
    for (int i = 0; i <= n + 1; ++i) {
        Element a(P.chern);
        for (int j = 0; j <= i; ++j) {
            Element t = Rational(binomial(n + 1 - i + j, j)) * c(P.chern, i - j) * power(P.e0, j);
            a += j % 2 ? -t : t;
        }
        P.a.push_back(a);
    }
    P.a1_vanishes = P.a[1].is_zero();
    P.chern_recovered = true;
    for (int i = 1; i <= n + 1; ++i) {
        Element s(P.chern);
        for (int j = 0; j <= i; ++j)
            s += Rational(binomial(n + 1 - i + j, j)) * P.a[static_cast<std::size_t>(i - j)] * power(P.e0, j);
        if (s != c(P.chern, i))
            P.chern_recovered = false;
    }
    const Element l = Element::generator(P.chern_line, "l");
    for (int i = 0; i <= n + 1; ++i) {
        Element t(P.chern_line);
        for (int j = 0; j <= i; ++j)
            t += Rational(binomial(n + 1 - i + j, j)) * c(P.chern_line, i - j) * power(l, j);
        P.tangent_chern.push_back(t);
    }
    Element bundle(P.chern_line);
    for (int j = 0; j <= n + 1; ++j)
        bundle += c(P.chern_line, n + 1 - j) * power(l, j);
    P.top_class_is_bundle_relation = P.tangent_chern.back() == bundle;

    AlgebraMap lift = AlgebraMap::by_name(P.chern, P.chern_coupling, {});
    const Element w = Element::generator(P.chern_coupling, "w");
    AlgebraMap sub = AlgebraMap::by_name(P.chern_line, P.chern_coupling, {{"l", w - lift.apply(P.e0)}});
    P.fiberwise_chern_identity = true;
    for (int i = 0; i <= n + 1; ++i) {
        Element fw(P.chern_coupling);
        for (int k = 0; k <= i; ++k)
            fw += Rational(binomial(n + 1 - i + k, k)) * lift.apply(P.a[static_cast<std::size_t>(i - k)]) * power(w, k);
        if (sub.apply(P.tangent_chern[static_cast<std::size_t>(i)]) != fw)
            P.fiberwise_chern_identity = false;
    }
    return P;
}

}  // namespace taut
