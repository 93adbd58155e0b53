#include "taut/suites.hpp"

#include "taut/commands.hpp"
#include "taut/errors.hpp"
#include "taut/pipeline.hpp"
#include "taut/presets.hpp"
#include "taut/taut.hpp"

#include <random>

namespace taut {

namespace {

Pipeline preset_pipeline(const std::string& name, int parameter)
{
    return build_pipeline(preset_setup(name, parameter));
}

Report start(const std::string& name, const Pipeline* p)
{
    Report r;
    r.command = "check " + name;
    if (p) {
        r.setup_hash = setup_hash(p->setup);
        for (const auto& c : p->checks)
            r.expect(c.name, c.pass, c.detail);
    }
    return r;
}

std::optional<int> degree_of(const Element& e)
{
    return e.is_zero() ? std::nullopt : e.degree_if_homogeneous();
}

void expect_equal(Report& r, const std::string& name, const Element& actual, const Element& expected)
{
    const bool ok = actual == expected;
    r.expect(name, ok, ok ? to_string(actual) : to_string(actual) + "  (expected " + to_string(expected) + ")",
             degree_of(actual));
}

Element base_element(const FiberedModel& m, const std::string& text)
{
    return parse_element(text, m.base_algebra());
}

std::string pname(const std::string& base, int i)
{
    return base + std::to_string(i);
}

// L_i as a polynomial in the base generators p1..pk (p_j = 0 for j > k).
Element l_class_in(const AlgebraPtr& B, int i, int k)
{
    Element L = l_polynomial(i);
    std::map<std::string, Element> values;
    for (int j = 1; j <= i; ++j)
        values.emplace(pname("p", j), j <= k ? Element::generator(B, pname("p", j)) : Element(B));
    std::vector<Element> images;
    for (std::size_t g = 0; g < L.algebra()->size(); ++g)
        images.push_back(values.at(L.algebra()->gen(g).name));
    return AlgebraMap(L.algebra(), B, images).apply(L);
}

int param(const std::optional<int>& v, int fallback, const std::vector<int>& allowed, const std::string& what)
{
    const int x = v.value_or(fallback);
    if (!allowed.empty() && std::find(allowed.begin(), allowed.end(), x) == allowed.end()) {
        std::string list;
        for (int a : allowed)
            list += (list.empty() ? "" : ", ") + std::to_string(a);
        throw InputError("this suite supports " + what + " in {" + list + "}");
    }
    return x;
}

void ring_checks(Report& r, const RingPresentation& ring, const std::string& label)
{
    r.expect(label + ": no relations through degree " + std::to_string(ring.cutoff), ring.is_free(),
             std::to_string(ring.relations.size()) + " relations");
    r.expect(label + ": Hilbert series equals the base ring's through degree " + std::to_string(ring.cutoff),
             ring.generates_ambient(), hilbert_string(ring.hilbert));
}

Report even_sphere(const SuiteParams& sp)
{
    const int m = param(sp.m, 4, {}, "m");
    if (m < 2 || m % 2)
        throw InputError("even-sphere needs an even m >= 2");
    const int k = m / 2;
    const int r0 = k / 2 + 1;
    const int cutoff = sp.cutoff.value_or(40);
    Pipeline p = preset_pipeline("s-even", m);
    Report r = start("even-sphere", &p);
    const FiberedModel& fm = p.model;
    const AlgebraPtr& B = fm.base_algebra();
    expect_equal(r, "d y = x^2 + a", fm.relation, parse_element("x^2 + a", fm.total));
    auto px = [&](int i) {
        auto g = B->index_of(pname("p", i) + "_x");
        return g ? Element::generator(B, *g) : Element(B);
    };
    for (int i = 1; i < k; ++i) {
        expect_equal(r, "kappa[p" + std::to_string(i) + "] = p" + std::to_string(i) + "^x",
                     kappa(fm, pname("p", i)).value, px(i));
        expect_equal(r, "kappa[e*p" + std::to_string(i) + "] = 2*p" + std::to_string(i) + " + e*p" + std::to_string(i) + "^x",
                     kappa(fm, "e*" + pname("p", i)).value,
                     Rational(2) * Element::generator(B, pname("p", i)) + Element::generator(B, "e") * px(i));
    }
    expect_equal(r, "kappa[e^2] = 4*e", kappa(fm, "e^2").value, base_element(fm, "4*e"));
    expect_equal(r, "kappa[e^3] = -8*a + 6*e^2", kappa(fm, "e^3").value, base_element(fm, "-8*a + 6*e^2"));

    std::vector<std::string> classes;
    for (int i = 1; i < k; ++i)
        classes.push_back("e*" + pname("p", i));
    classes.push_back("e^3");  // e*p_k
    for (int i = r0; i < k; ++i)
        classes.push_back(pname("p", i));
    classes.push_back("e^2");  // p_k
    KappaRingOptions opts;
    opts.cutoff = cutoff;
    RingPresentation ring = kappa_ring(fm, classes, opts);
    add_presentation(r, ring);
    ring_checks(r, ring, "kappa[e*p_i], kappa[p_i] (i >= " + std::to_string(r0) + ")");
    r.expect("Hilbert series equals the product formula for the base generators",
             ring.hilbert == free_hilbert(*B, cutoff), hilbert_string(free_hilbert(*B, cutoff)));
    opts.presentation.method = "indecomposables";
    RingPresentation cert = kappa_ring(fm, classes, opts);
    r.expect("indecomposables certificate: free and generating in all degrees", cert.is_free() && cert.generates_ambient(),
             cert.method);
    r.hilbert = ring.hilbert;
    return r;
}

Report odd_sphere(const SuiteParams& sp)
{
    const int m = param(sp.m, 5, {}, "m");
    if (m < 3 || m % 2 == 0)
        throw InputError("odd-sphere needs an odd m >= 3");
    const int k = (m - 1) / 2;
    const int r0 = m / 4 + 1;
    const int cutoff = sp.cutoff.value_or(40);
    Pipeline p = preset_pipeline("s-odd", m);
    Report r = start("odd-sphere", &p);
    const FiberedModel& fm = p.model;
    const AlgebraPtr& B = fm.base_algebra();
    const Element z = Element::generator(B, "z");
    for (int i = 1; i <= k; ++i) {
        const Element dp = fm.base.d().image(B->require(pname("p", i)));
        const Element expected =
            i >= r0 ? Element::generator(B, pname("p", i) + "_x") * z : Element(B);
        expect_equal(r, "d p" + std::to_string(i) + (i >= r0 ? " = p" + std::to_string(i) + "^x*z" : " = 0"), dp,
                     expected);
    }

    KahlerRing K = kahler_exact_forms(m, 0);
    AlgebraMap to_base = kahler_to_base(K, B);
    std::mt19937 rng(static_cast<unsigned>(20240 + m));
    std::uniform_int_distribution<int> exp(0, 3);
    for (int t = 0; t < 20; ++t) {
        std::string c;
        while (c.empty())
            for (int i = 1; i <= k; ++i) {
                const int e = exp(rng);
                if (e)
                    c += (c.empty() ? "" : "*") + pname("p", i) + (e > 1 ? "^" + std::to_string(e) : "");
            }
        const Element D = to_base.apply(K.d(parse_element(c, K.classes)));
        expect_equal(r, "kappa[" + c + "] = D(" + c + ")", kappa(fm, c).value, D);
    }

    if (m == 3) {
        KahlerRing K3 = kahler_exact_forms(3, cutoff);
        const Element p1 = Element::generator(B, "p1");
        const Element p1x = Element::generator(B, "p1_x");
        bool dims = true;
        for (int n = 0; n <= cutoff; ++n)
            dims = dims && K3.exact_dim(n) == ((n + 3) % 4 == 0 ? 1u : 0u);
        r.expect("d(Omega) is spanned by p1^(i-1)*dp1, one in each degree 4i - 3", dims, "");
        std::vector<Element> kap;
        for (int i = 1; 4 * i - 3 <= cutoff; ++i) {
            const std::string c = i == 1 ? "p1" : "p1^" + std::to_string(i);
            kap.push_back(kappa(fm, c).value);
            expect_equal(r, "kappa[" + c + "] = " + std::to_string(i) + "*p1^" + std::to_string(i - 1) + "*p1^x",
                         kap.back(), Rational(i) * power(p1, i - 1) * p1x);
            const Rational b = l_series_coefficient(i);
            expect_equal(r, "kappa[L" + std::to_string(i) + "] = i*b_i*p1^(i-1)*dp1 with b_i = " + b.get_str(),
                         kappa(fm, "L" + std::to_string(i)).value, Rational(i) * b * power(p1, i - 1) * p1x);
        }
        bool zero = true;
        for (std::size_t i = 0; i < kap.size(); ++i)
            for (std::size_t j = i; j < kap.size(); ++j)
                zero = zero && (kap[i] * kap[j]).is_zero();
        r.expect("all products of kappa-classes vanish", zero && K3.products_vanish, "");
    }

    std::vector<NamedElement> kill;
    for (int i = r0; i <= k; ++i)
        kill.push_back({pname("M", i), kappa(fm, "L" + std::to_string(i)).value});
    KillResult kr = kill_cocycles(fm.base, kill);
    auto& sec = r.section("kill-cocycles model");
    for (const auto& a : kr.adjoined)
        sec.lines.push_back("adjoined " + a + " with d" + a + " = " +
                            to_string(kr.model.d().image(kr.model.algebra()->require(a))));
    for (const auto& q : kr.quotiented)
        sec.lines.push_back("quotient by a degree-1 class, solving for " + q);
    const AlgebraPtr& C = kr.model.algebra();
    std::vector<NamedElement> gens;
    const Element zc = kr.from_original.apply(z);
    for (int i = 1; i <= k; ++i) {
        Element L = kr.from_original.apply(l_class_in(B, i, k));
        const std::string M = pname("M", i);
        if (C->index_of(M)) {
            gens.push_back({"L" + std::to_string(i) + " - " + M + "*z", L - Element::generator(C, M) * zc});
        } else {
            gens.push_back({"L" + std::to_string(i), L});
        }
    }
    gens.push_back({"z", zc});
    CohomologyAmbient H(kr.model);
    RingPresentation ring = subring_presentation(H, gens, cutoff);
    add_presentation(r, ring);
    ring_checks(r, ring, "cohomology after killing kappa[L_i], i >= " + std::to_string(r0));
    std::vector<int> degrees;
    for (int i = 1; i <= k; ++i)
        degrees.push_back(4 * i);
    degrees.push_back(m + 1);
    r.expect("cohomology is polynomial on classes of degrees 4, ..., 4k and m + 1",
             ring.ambient_hilbert == free_hilbert(degrees, cutoff), hilbert_string(ring.ambient_hilbert));
    r.hilbert = ring.ambient_hilbert;
    return r;
}

Report cpn_fiber_integration(const SuiteParams& sp)
{
    const int n = param(sp.n, 2, {}, "n");
    Pipeline p = preset_pipeline("cpn", n);
    Report r = start("cpn-fiber-integration", &p);
    const FiberedModel& fm = p.model;
    const AlgebraPtr& B = fm.base_algebra();
    const Element w = coupling_class(fm);
    const std::vector<Element> a = a_classes(fm);
    std::vector<Element> ideal(a.begin() + 2, a.end());
    for (std::size_t k = 2; k < a.size(); ++k)
        r.add("a" + std::to_string(k), degree_of(a[k]), to_string(a[k]));
    expect_equal(r, "pi_!(w^" + std::to_string(n) + ") = 1", fm.pushforward(power(w, n)), Element::constant(B, 1));
    for (int k = 1; k <= 2 * n + 2; ++k) {
        Element v = fm.pushforward(power(w, n + k));
        const bool low = k <= n + 1;
        Element test = low ? v + a[static_cast<std::size_t>(k)] : v;
        const std::string name = "pi_!(w^" + std::to_string(n + k) + ")" + (low ? " + a" + std::to_string(k) : "") +
                                 " lies in the square of the ideal of a-classes";
        r.expect(name, in_ideal_square(*B, ideal, test), to_string(v), degree_of(v));
    }
    Projectivization P = projectivization_chern(n);
    r.expect("c_i are recovered from a_i and e_|0", P.chern_recovered, "");
    r.expect("top Chern class of the fiberwise tangent bundle is the bundle relation", P.top_class_is_bundle_relation, "");
    r.expect("fiberwise Chern classes agree with the a-class formula", P.fiberwise_chern_identity, "");
    r.expect("a_1 = 0", P.a1_vanishes, "");
    return r;
}

Report cpn_kappa_congruences(const SuiteParams& sp)
{
    const int n = param(sp.n, 3, {}, "n");
    if (n < 2)
        throw InputError("cpn-kappa-congruences needs n >= 2");
    Pipeline p = preset_pipeline("cpn-real", n);
    Report r = start("cpn-kappa-congruences", &p);
    const FiberedModel& fm = p.untrivialized;
    const AlgebraPtr& B = fm.base_algebra();
    const std::vector<Element> a = a_classes(fm);
    std::vector<Element> ideal(a.begin() + 2, a.end());
    auto A = [&](int i) { return a.at(static_cast<std::size_t>(i)); };
    auto kfw = [&](const std::string& c) { return kappa(fm, c, true).value; };
    const Integer N(n + 1);
    expect_equal(r, "kappa_fw[e] = n + 1", kfw("e"), Element::constant(B, Rational(N)));
    expect_equal(r, "kappa_fw[e*p1] = -4(n+1)*a2", kfw("e*p1"), Rational(-4 * (n + 1)) * A(2));
    auto pw = [&](int l) {
        Integer x = 1;
        for (int i = 0; i < l; ++i)
            x *= N;
        return Rational(x);
    };
    for (int l = 2; 2 * l <= n + 1; ++l) {
        const std::string c = "e*p1^" + std::to_string(l);
        Element v = kfw(c);
        const Rational coeff = Rational(-2 * l) * pw(l);
        r.expect("kappa_fw[" + c + "] = " + to_string(coeff) + "*a" + std::to_string(2 * l) +
                     " mod squares of a-classes",
                 in_ideal_square(*B, ideal, v - coeff * A(2 * l)), to_string(v), degree_of(v));
    }
    for (int l = 1; 2 * l - n <= n + 1; ++l) {
        const int j = 2 * l - n;
        if (j < 2)
            continue;
        const std::string c = "p1^" + std::to_string(l);
        Element v = kfw(c);
        if (j == 2) {
            expect_equal(r, "kappa_fw[" + c + "] = -(2n+3)(n+1)^" + std::to_string(l - 1) + "*a2", v,
                         Rational(-(2 * n + 3)) * pw(l - 1) * A(2));
        } else {
            r.expect("kappa_fw[" + c + "] = " + to_string(-pw(l)) + "*a" + std::to_string(j) +
                         " mod squares of a-classes",
                     in_ideal_square(*B, ideal, v + pw(l) * A(j)), to_string(v), degree_of(v));
        }
    }
    return r;
}

Report cpn_generators(const SuiteParams& sp)
{
    const int n = param(sp.n, 2, {}, "n");
    const int cutoff = sp.cutoff.value_or(36);
    Pipeline p = preset_pipeline("cpn", n);
    Report r = start("cpn-generators", &p);
    r.section("scope").lines.push_back(
        "ring-level consequence: the kappa-classes freely generate the characteristic class ring; the rational "
        "equivalence of classifying spaces behind it is not a ring statement and is not checked");
    const FiberedModel& fm = p.model;
    std::vector<std::string> classes;
    for (int l = n + 2; l <= 2 * n + 1; ++l)
        classes.push_back("w^" + std::to_string(l));
    for (int i = 1; i <= n; ++i)
        for (int l = n - i + 1; l <= n; ++l)
            classes.push_back((l == 1 ? std::string("w") : "w^" + std::to_string(l)) + "*c" + std::to_string(i));
    r.expect("generator count n + n(n+1)/2", static_cast<int>(classes.size()) == n + n * (n + 1) / 2,
             std::to_string(classes.size()));
    KappaRingOptions opts;
    opts.cutoff = cutoff;
    opts.presentation.method = "indecomposables";
    RingPresentation cert = kappa_ring(fm, classes, opts);
    add_presentation(r, cert);
    r.expect("indecomposables certificate: free and generating in all degrees", cert.is_free() && cert.generates_ambient(),
             "");
    // the degreewise check gets expensive with many degree-2 generators (n = 4
    // takes about 50 s at 36); the certificate above covers all degrees
    opts.presentation.method = "degreewise";
    opts.cutoff = n <= 3 ? cutoff : std::min(cutoff, 28);
    RingPresentation ring = kappa_ring(fm, classes, opts);
    ring_checks(r, ring, "degreewise");
    r.hilbert = ring.hilbert;
    return r;
}

Report projective_kernel(const SuiteParams& sp)
{
    const int n = param(sp.n, 2, {}, "n");
    const int cutoff = sp.cutoff.value_or(24);
    Report r = start("projective-kernel", nullptr);
    ProjectiveKernelData d = projective_bundle_map(n);
    const AlgebraPtr& C = d.q.target();
    const Element c1 = Element::generator(C, "c1");
    auto c = [&](int i) {
        return i == 0 ? Element::constant(C, 1) : Element::generator(C, "c" + std::to_string(i));
    };
    for (int i = 2; i <= n + 1; ++i) {
        Element expected(C);
        for (int j = 0; j <= i; ++j) {
            Rational coeff(binomial(n + 1 - i + j, j));
            if (j % 2)
                coeff = -coeff;
            expected += coeff * c(i - j) * power(make_rational(1, n + 1) * c1, j);
        }
        expect_equal(r, "q*(a" + std::to_string(i) + ")", d.q.image(d.q.source()->require("a" + std::to_string(i))),
                     expected);
    }
    FreeAmbient target(C);
    KernelResult k = ring_map_kernel(d.q, target, cutoff);
    for (const auto& g : k.generators)
        r.add("kernel generator", g.degree, to_string(g.poly));
    IdealComparison cmp = compare_with(k, d.ideal);
    r.expect("ker(q*) equals the ideal of c_{i|j} - binom(n+1-i+j, j)*a_{i-j} through degree " + std::to_string(cutoff),
             cmp.equal, cmp.detail);
    for (std::size_t i = 0; i < k.kernel_dims.size(); ++i)
        r.hilbert.push_back(Integer(static_cast<unsigned long>(k.kernel_dims[i])));
    return r;
}

Report cpn_real_generators(const SuiteParams& sp)
{
    const int n = param(sp.n, 2, {}, "n");
    if (n < 2)
        throw InputError("cpn-real-generators needs n >= 2");
    const int cutoff = sp.cutoff.value_or(40);
    Pipeline p = preset_pipeline("cpn-real", n);
    Report r = start("cpn-real-generators", &p);
    r.section("scope").lines.push_back(
        "ring-level consequence: the fiberwise kappa-classes generate the ring of a-classes (or its invariants); "
        "the rational equivalence with the isometry group's classifying space is not checked");
    const FiberedModel& fm = p.untrivialized;
    const AlgebraPtr& B = fm.base_algebra();
    std::vector<GenSymbol> asyms;
    std::map<std::string, int> signs;
    for (int i = 2; i <= n + 1; ++i) {
        asyms.push_back({"a" + std::to_string(i), 2 * i, ""});
        signs.emplace("a" + std::to_string(i), i % 2 ? -1 : 1);
    }
    AlgebraPtr Aa = make_algebra(asyms);
    std::map<std::string, Element> kill;
    for (std::size_t g = 0; g < B->size(); ++g)
        if (!Aa->index_of(B->gen(g).name))
            kill.emplace(B->gen(g).name, Element(Aa));
    AlgebraMap restrict = AlgebraMap::by_name(B, Aa, kill);
    const std::vector<Element> a = a_classes(fm);
    bool a_are_generators = true;
    for (int i = 2; i <= n + 1; ++i)
        a_are_generators = a_are_generators && a[static_cast<std::size_t>(i)] == Element::generator(B, "a" + std::to_string(i));
    r.expect("the a-classes are the holonomy generators a2..a" + std::to_string(n + 1), a_are_generators, "");

    std::vector<std::string> classes;
    const int k = n / 2;
    auto p1 = [](int l) { return l == 1 ? std::string("p1") : "p1^" + std::to_string(l); };
    if (n % 2 == 0) {
        for (int l = k + 1; l <= 2 * k; ++l)
            classes.push_back(p1(l));
        classes.push_back(p1(3 * k + 1));
        for (int s = 2; s <= k; ++s) {
            Integer lead = 1;
            for (int i = 0; i < s; ++i)
                lead *= n + 1;
            const std::string beta =
                "(" + lead.get_str() + "*p" + std::to_string(s) + " - " + binomial(n + 1, s).get_str() + "*" + p1(s) + ")";
            for (int l = k + s - 1; l <= 2 * k; ++l)
                classes.push_back(p1(l) + "*" + beta);
        }
    } else {
        for (int j = 1; j <= k + 1; ++j)
            classes.push_back("e*" + p1(j));
        for (int l = k + 2; l <= 2 * k + 1; ++l)
            classes.push_back(p1(l));
    }
    std::vector<NamedElement> gens;
    bool only_a = true;
    for (const auto& c : classes) {
        Element v = kappa(fm, parse_expr(c), true);
        Element rv = restrict.apply(v);
        only_a = only_a && AlgebraMap::by_name(Aa, B, {}).apply(rv) == v;
        gens.push_back({"kappa_fw[" + c + "]", rv});
    }
    r.expect("fiberwise kappa-classes lie in the ring of a-classes", only_a, "");
    FreeAmbient amb(Aa);
    RingPresentation ring = subring_presentation(amb, gens, cutoff);
    add_presentation(r, ring);
    if (n % 2 == 0) {
        const int expected = n + k * (k - 1) / 2;
        r.expect("generator count n + binom(k,2) = " + std::to_string(expected),
                 static_cast<int>(gens.size()) == expected, std::to_string(gens.size()));
        RingPresentation inv = invariant_subring(Aa, signs, cutoff);
        r.expect("the classes generate the invariants of a_k -> (-1)^k a_k through degree " + std::to_string(cutoff),
                 ring.hilbert == inv.hilbert, hilbert_string(inv.hilbert));
        r.expect("relation count binom(k,2) (complete intersection of Krull dimension n)",
                 static_cast<int>(ring.relations.size()) == k * (k - 1) / 2,
                 std::to_string(ring.relations.size()) + " relations");
    } else {
        r.expect("generator count n", static_cast<int>(gens.size()) == n, std::to_string(gens.size()));
        ring_checks(r, ring, "fiberwise kappa-classes");
    }
    r.hilbert = ring.hilbert;
    return r;
}

Report cp2_invariants(const SuiteParams& sp)
{
    const int cutoff = sp.cutoff.value_or(24);
    Pipeline p = preset_pipeline("cpn-real", 2);
    Report r = start("cp2-invariants", &p);
    const AlgebraPtr& B = p.untrivialized.base_algebra();
    std::map<std::string, int> signs;
    for (const auto& [name, s] : p.base_signs)
        if (B->index_of(name))
            signs.emplace(name, s);
    for (const auto& [name, s] : signs)
        r.add("sign " + name, std::nullopt, std::to_string(s));
    RingPresentation inv = invariant_subring(B, signs, cutoff);
    add_presentation(r, inv, "invariant ");
    r.expect("nine invariant generators", inv.generators.size() == 9, std::to_string(inv.generators.size()));

    // the stated presentation: u, v, w = a2, p1|0, e|0 and a..f
    const std::vector<std::pair<std::string, std::string>> named{
        {"u", "a2"},          {"v", "p1|0"},        {"w", "e|0"},       {"a", "p1|1^2"}, {"b", "p1|1*e|1"},
        {"c", "e|1^2"},       {"d", "p1|1*a3"},     {"e", "e|1*a3"},    {"f", "a3^2"}};
    std::vector<NamedElement> gens;
    for (const auto& [sym, value] : named)
        gens.push_back({sym, parse_element(value, B)});
    RingPresentation stated;
    stated.generators = gens;
    {
        std::vector<GenSymbol> syms;
        for (const auto& g : gens)
            syms.push_back({g.name, g.value.degree(), ""});
        stated.symbols = make_algebra(syms);
    }
    for (const char* rel : {"a*c - b^2", "a*f - d^2", "c*f - e^2"}) {
        Element poly = parse_element(rel, stated.symbols);
        stated.relations.push_back({poly.degree(), poly});
        r.expect("stated relation " + std::string(rel) + " holds", evaluate(stated, poly).is_zero(), "");
    }
    stated.cutoff = cutoff;
    const Hilbert h3 = presented_hilbert(stated, cutoff);
    std::string detail = "presented " + hilbert_string(h3) + " vs invariants " + hilbert_string(inv.hilbert);
    for (std::size_t i = 0; i < h3.size() && i < inv.hilbert.size(); ++i)
        if (h3[i] != inv.hilbert[i]) {
            detail = "first difference in degree " + std::to_string(i) + ": presented ring has dimension " +
                     h3[i].get_str() + ", invariant ring " + inv.hilbert[i].get_str() + "; minimal presentation needs " +
                     std::to_string(inv.relations.size()) + " relations";
            break;
        }
    r.expect("the three stated relations present the invariant ring (Hilbert series)", h3 == inv.hilbert, detail);
    std::vector<int> gdeg, rdeg;
    for (const auto& g : gens)
        gdeg.push_back(g.value.degree());
    for (const auto& rel : stated.relations)
        rdeg.push_back(rel.degree);
    const Hilbert ci = times_one_minus(free_hilbert(gdeg, cutoff), rdeg);
    r.expect("complete intersection: Hilbert series is prod(1 - t^relation degree) / prod(1 - t^generator degree)",
             ci == inv.hilbert, "formula " + hilbert_string(ci) + " vs invariant ring " + hilbert_string(inv.hilbert));
    r.hilbert = inv.hilbert;
    return r;
}

Report cp2_ledger(const SuiteParams& sp)
{
    const int cutoff = sp.cutoff.value_or(24);
    Pipeline p = preset_pipeline("cpn-real", 2);
    Report r = start("cp2-ledger", &p);
    r.section("scope").lines.push_back(
        "ring-level consequence: presentations and identities in the cohomology rings; statements about homotopy "
        "fibers and rational equivalences of spaces are not checked");
    Cp2Report c = cp2_report(p.untrivialized, p.base_signs, cutoff);
    const FiberedModel& T = c.model;
    auto el = [&](const std::string& s) { return base_element(T, s); };
    auto K = [&](const char* s) { return c.kappas.at(s); };
    const FiberedModel& U = p.untrivialized;

    expect_equal(r, "trivialized e|0", c.model.base_algebra()->index_of("e|0") ? el("e|0") : el("a2"), el("a2"));
    const auto fw = fiberwise_classes(T);
    auto coeffs = [&](const Element& v) {
        std::string s;
        for (const auto& x : decompose(T, v))
            s += (s.empty() ? "" : ", ") + to_string(x);
        return s;
    };
    auto expect_coeffs = [&](const std::string& name, const Element& v, const std::vector<std::string>& expected) {
        std::vector<Element> d = decompose(T, v);
        bool ok = d.size() == expected.size();
        for (std::size_t i = 0; ok && i < d.size(); ++i)
            ok = d[i] == el(expected[i]);
        r.expect(name, ok, coeffs(v));
    };
    expect_coeffs("p1(zeta) = 3w^2 + p1|1*w + p1|0", T.classes.at("p1"), {"p1|0", "p1|1", "3"});
    expect_coeffs("p1_fw = 3w^2 - 2*a2", fw.at("p1_fw"), {"-2*a2", "0", "3"});
    expect_coeffs("e(zeta) = 3w^2 + a2", T.classes.at("e"), {"a2", "0", "3"});
    expect_coeffs("e_fw = 3w^2 + a2", fw.at("e_fw"), {"a2", "0", "3"});

    expect_equal(r, "kappa[p1^2]", K("p1^2"), el("-9*a2 + 6*p1|0 + p1|1^2"));
    expect_equal(r, "kappa[L2]", K("L2"), el("-4/15*a2 - 2/15*p1|0 - 1/45*p1|1^2"));
    expect_equal(r, "kappa[L3]", K("L3"),
                 el("1/15*a3*p1|1 - 34/315*a2^2 - 1/63*a2*p1|0 + 2/105*p1|0^2 - 2/105*a2*p1|1^2 + "
                    "2/315*p1|0*p1|1^2"));
    expect_equal(r, "kappa[p1^4]", K("p1^4"),
                 el("81*a3^2 - 81*a2^3 + 108*a2^2*p1|0 - 54*a2*p1|0^2 + 12*p1|0^3 + 216*a2*a3*p1|1 - "
                    "108*a3*p1|0*p1|1 + 54*a2^2*p1|1^2 - 36*a2*p1|0*p1|1^2 + 6*p1|0^2*p1|1^2 - 12*a3*p1|1^3 - "
                    "a2*p1|1^4"));
    expect_equal(r, "pd1|1 = -p1|1", c.differences.coefficient("pd1|1"), el("-p1|1"));
    expect_equal(r, "pd1|0 = -2*a2 - p1|0", c.differences.coefficient("pd1|0"), el("-2*a2 - p1|0"));
    for (const auto& id : c.identities)
        r.expect(id.name, id.pass, id.lhs + "; " + id.rhs);

    add_presentation(r, c.ring);
    r.expect("one relation among kappa[p1^2], kappa[p1^4], kappa[L2], kappa[L3], lambda",
             c.ring.relations.size() == 1, std::to_string(c.ring.relations.size()) + " relations");
    r.expect("these generate the invariant ring a2, p1|0, p1|1^2, a3*p1|1, a3^2", c.generates_invariants,
             hilbert_string(c.invariant_ring.hilbert));
    if (c.ring.relations.size() == 1) {
        const AlgebraPtr& S = c.ring.symbols;
        const Element a3p = express_in_generators(FreeAmbient(T.base_algebra()), c.ring, el("a3*p1|1")).value_or(Element(S));
        const Element a3s = express_in_generators(FreeAmbient(T.base_algebra()), c.ring, el("a3^2")).value_or(Element(S));
        const Element lam = Element::generator(S, "lambda");
        const Element J = a3p * a3p - a3s * lam;
        const Element rel = c.ring.relations.front().poly;
        bool proportional = false;
        for (const auto& [m, coeff] : rel.terms()) {
            proportional = !J.is_zero() && (J.coefficient(m) / coeff) * rel == J;
            break;
        }
        r.expect("the relation is (a3*p1|1)^2 - (a3^2)*(p1|1^2) in the new generators", proportional, to_string(J));
    }
    r.expect("kappa[L2], kappa[L3] is a regular sequence", c.l_classes_regular.regular,
             hilbert_string(c.l_classes_regular.quotient));
    {
        const AlgebraPtr& Q = c.quartic_symbols;
        Element expected = evaluate(
            parse_expr("lambda^4 - 6304/2023*K2*lambda^3 + 35905/14161*K2^2*lambda^2 + (116/289*K2^3 - "
                       "1764/289*K4)*lambda"),
            Q, [&](const std::string& s, SourcePos pos) {
                if (s == "K2")
                    return Element::generator(Q, kappa_name("p1^2"));
                if (s == "K4")
                    return Element::generator(Q, kappa_name("p1^4"));
                if (s == "lambda")
                    return Element::generator(Q, "lambda");
                throw ParseError(pos, "unknown symbol");
            });
        expect_equal(r, "quartic relation modulo kappa[L2], kappa[L3]", c.quartic, expected);
    }
    r.expect("pd1|0 is nonzero modulo kappa[L2], kappa[L3] and the relation", c.pd10_survives,
             to_string(c.pd10_in_generators));
    {
        const AlgebraPtr& S = c.ring.symbols;
        AlgebraMap drop = AlgebraMap::by_name(S, S, {{kappa_name("L2"), Element(S)}});
        expect_equal(r, "lambda = 6*pd1|0 when kappa[L2] = 0", Rational(6) * drop.apply(c.pd10_in_generators),
                     Element::generator(S, "lambda"));
    }
    expect_equal(r, "kappa_fw[p1^2] = -21*a2", c.fiberwise_kappas.at("p1^2"), parse_element("-21*a2", U.base_algebra()));
    expect_equal(r, "kappa_fw[p1^4] = 81*a3^2 - 609*a2^3", c.fiberwise_kappas.at("p1^4"),
                 parse_element("81*a3^2 - 609*a2^3", U.base_algebra()));
    r.hilbert = c.ring.hilbert;
    return r;
}

}  // namespace

std::vector<SuiteInfo> suite_catalog()
{
    return {
        {"even-sphere", "even sphere kappa-classes and the free kappa-ring", "m", 4},
        {"odd-sphere", "odd sphere base differential, kappa = Kahler d, kill-cocycles cohomology", "m", 5},
        {"cpn-fiber-integration", "pushforwards of coupling class powers modulo squares of a-classes", "n", 2},
        {"cpn-kappa-congruences", "fiberwise kappa-classes of CP^n modulo squares of a-classes", "n", 3},
        {"cpn-generators", "kappa-classes freely generating the CP^n characteristic class ring", "n", 2},
        {"projective-kernel", "kernel of the projective bundle map to Q[c1..c_{n+1}]", "n", 2},
        {"cpn-real-generators", "fiberwise kappa-classes of CP^n with real tangent data", "n", 2},
        {"cp2-invariants", "involution-fixed ring of CP^2 real tangent data and its stated presentation", "", 0},
        {"cp2-ledger", "CP^2 with trivialized Euler difference: kappa values, identities, quartic relation", "", 0},
    };
}

Report run_suite(const std::string& name, const SuiteParams& params)
{
    if (name == "even-sphere")
        return even_sphere(params);
    if (name == "odd-sphere")
        return odd_sphere(params);
    if (name == "cpn-fiber-integration")
        return cpn_fiber_integration(params);
    if (name == "cpn-kappa-congruences")
        return cpn_kappa_congruences(params);
    if (name == "cpn-generators")
        return cpn_generators(params);
    if (name == "projective-kernel")
        return projective_kernel(params);
    if (name == "cpn-real-generators")
        return cpn_real_generators(params);
    if (name == "cp2-invariants")
        return cp2_invariants(params);
    if (name == "cp2-ledger")
        return cp2_ledger(params);
    throw InputError("unknown suite '" + name + "'");
}

std::vector<std::string> scope_disclosure()
{
    return {
        "The claims that certain maps of classifying spaces are rational homotopy equivalences are statements about "
        "spaces and are not reproducible by ring computations.",
        "The suites check their ring-level consequences instead: cpn-generators (free generation of the CP^n "
        "characteristic class ring), cpn-real-generators (generation of the a-class invariants) and cp2-ledger "
        "(presentation, regular sequence and nonvanishing of pd1|0).",
    };
}

}  // namespace taut
