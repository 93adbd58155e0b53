#include "taut/commands.hpp"

#include "taut/errors.hpp"
#include "taut/setup.hpp"
#include "taut/taut.hpp"

#include <sstream>

namespace taut {

namespace {

Report start(const std::string& command, const Pipeline& p)
{
    Report r;
    r.command = command;
    r.setup_hash = setup_hash(p.setup);
    for (const auto& c : p.checks)
        r.expect(c.name, c.pass, c.detail);
    return r;
}

std::vector<std::string> split_lines(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);)
        if (!line.empty())
            out.push_back(line);
    return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep)
{
    std::string out;
    for (const auto& s : v)
        out += (out.empty() ? "" : sep) + s;
    return out;
}

void describe_cdga(ReportSection& s, const Cdga& c)
{
    const AlgebraPtr& A = c.algebra();
    for (std::size_t i : A->print_order()) {
        Element d = c.d().image(i);
        s.lines.push_back(A->gen(i).name + " (" + std::to_string(A->degree(i)) + ")" +
                          (d.is_zero() ? "" : "  d = " + to_string(d)));
    }
}

std::optional<int> degree_of(const Element& e)
{
    return e.is_zero() ? std::nullopt : e.degree_if_homogeneous();
}

}  // namespace

void add_presentation(Report& r, const RingPresentation& p, const std::string& prefix)
{
    for (const auto& g : p.generators)
        r.add(prefix + g.name, degree_of(g.value), to_string(g.value));
    for (std::size_t i = 0; i < p.relations.size(); ++i)
        r.add(prefix + "relation " + std::to_string(i + 1), p.relations[i].degree, to_string(p.relations[i].poly));
}

Report model_report(const Pipeline& p)
{
    Report r = start("model", p);
    r.section("Lie model of the base").lines = split_lines(p.lxi.lie.describe());
    describe_cdga(r.section("Chevalley-Eilenberg cochains"), p.relative.base.cdga);
    describe_cdga(r.section("relative model"), p.relative.total);
    auto& cochains = r.section("characteristic cochains");
    for (const auto& name : p.relative.class_order)
        cochains.lines.push_back(name + " = " + to_string(p.relative.cochains.at(name)));
    const FiberedModel& m = p.model;
    const AlgebraPtr& B = m.base_algebra();
    for (std::size_t i : B->print_order()) {
        Element d = m.base.d().image(i);
        r.add("d " + B->gen(i).name, B->degree(i) + 1, to_string(d));
    }
    if (m.strategy == PushforwardStrategy::FreeModule)
        r.add("relation", degree_of(m.relation), to_string(m.relation));
    else
        r.add("d " + m.total->gen(m.x).name, m.total->degree(m.x) + 1, to_string(m.total_d.image(m.x)));
    for (const auto& [name, v] : p.trivialization)
        r.add("trivialize " + name, degree_of(v), to_string(v));
    for (const auto& name : m.class_order)
        r.add(name, degree_of(m.classes.at(name)), to_string(m.classes.at(name)));
    for (const auto& [name, s] : p.base_signs)
        r.add("sign " + name, std::nullopt, std::to_string(s));
    return r;
}

Report cohomology_report(const Pipeline& p, int max_degree)
{
    if (max_degree < 0)
        throw InputError("--max-degree must be non-negative");
    Report r = start("cohomology", p);
    for (const auto& h : cohomology(p.model.base, max_degree)) {
        std::vector<std::string> reps;
        for (const auto& v : h.representatives)
            reps.push_back(to_string(v));
        r.add("H^" + std::to_string(h.degree), h.degree, reps.empty() ? "0" : join(reps, ", "));
        r.hilbert.push_back(Integer(static_cast<unsigned long>(h.dim)));
    }
    return r;
}

Report kappa_report(const Pipeline& p, const std::string& class_expr, bool fiberwise)
{
    Report r = start("kappa", p);
    ExprPtr e = parse_expr(class_expr);
    Element v = kappa(p.model, e, fiberwise);
    r.add((fiberwise ? "kappa_fw[" : "kappa[") + to_string(e) + "]", degree_of(v), to_string(v));
    return r;
}

Report taut_ring_report(const Pipeline& p, const std::vector<std::string>& classes, const std::string& method,
                        bool fiberwise)
{
    Report r = start("taut-ring", p);
    KappaRingOptions opts;
    opts.cutoff = p.cutoff;
    opts.fiberwise = fiberwise;
    opts.presentation.method = method;
    const std::vector<std::string>& list = classes.empty() ? p.setup.options.classes : classes;
    RingPresentation ring = kappa_ring(p.model, list, opts);
    add_presentation(r, ring);
    r.add("generators", std::nullopt, std::to_string(ring.generators.size()));
    r.add("relations", std::nullopt, std::to_string(ring.relations.size()) + " through degree " +
                                         std::to_string(ring.cutoff));
    r.add("generates the base ring", std::nullopt, ring.generates_ambient() ? "yes" : "no");
    r.add("method", std::nullopt, ring.method);
    r.hilbert = ring.hilbert;
    return r;
}

Report invariants_report(const Pipeline& p)
{
    Report r = start("invariants", p);
    if (!p.model.base.zero_differential())
        throw InputError("invariants needs a base ring with zero differential");
    const AlgebraPtr& B = p.model.base_algebra();
    std::map<std::string, int> signs;
    for (const auto& [name, s] : p.base_signs)
        if (B->index_of(name))
            signs.emplace(name, s);
    RingPresentation ring = invariant_subring(B, signs, p.cutoff);
    add_presentation(r, ring);
    r.hilbert = ring.hilbert;
    return r;
}

Report kahler_report(int m, int cutoff)
{
    Report r;
    r.command = "kahler";
    KahlerRing K = kahler_exact_forms(m, cutoff);
    auto& s = r.section("Kahler differentials");
    s.lines.push_back("Omega = Q[p1..p" + std::to_string(K.k) + "] with dp" + std::to_string(K.r) + "..dp" +
                      std::to_string(K.k) + ", |dp_i| = 4i - " + std::to_string(m));
    r.expect("d^2 = 0", K.d_squared_zero, "");
    for (int n = 0; n <= cutoff; ++n) {
        const auto& basis = K.exact_basis[static_cast<std::size_t>(n)];
        if (basis.empty())
            continue;
        std::vector<std::string> items;
        for (const auto& b : basis)
            items.push_back(to_string(b));
        r.add("d(Omega) in degree " + std::to_string(n), n, join(items, ", "));
    }
    r.hilbert.assign(static_cast<std::size_t>(cutoff) + 1, Integer(0));
    for (int n = 0; n <= cutoff; ++n)
        r.hilbert[static_cast<std::size_t>(n)] = Integer(static_cast<unsigned long>(K.exact_dim(n)));
    for (int i = (m + 3) / 4; 4 * i - m <= cutoff; ++i) {
        Element Li = l_polynomial(i);
        AlgebraMap trunc = AlgebraMap::by_name(Li.algebra(), K.classes, [&] {
            std::map<std::string, Element> zero;
            for (int j = K.k + 1; j <= i; ++j)
                zero.emplace("p" + std::to_string(j), Element(K.classes));
            return zero;
        }());
        Element d = K.d(trunc.apply(Li));
        r.add("d(L" + std::to_string(i) + ")", degree_of(d), to_string(d));
    }
    r.add("products of exact forms vanish", std::nullopt, K.products_vanish ? "yes" : "no");
    return r;
}

Report cp2_ring_report(const Pipeline& p)
{
    Report r = start("cp2-report", p);
    Cp2Report c = cp2_report(p.untrivialized, p.base_signs, std::max(p.cutoff, 16));
    for (const auto& [name, v] : c.model.classes)
        r.add(name, degree_of(v), to_string(v));
    for (const auto& name : {"p1^2", "e*p1", "L2", "L3", "p1^4"})
        r.add(kappa_name(name), degree_of(c.kappas.at(name)), to_string(c.kappas.at(name)));
    for (const auto& name : {"e", "e*p1", "p1^2", "p1^4"})
        r.add("kappa_fw[" + std::string(name) + "]", degree_of(c.fiberwise_kappas.at(name)),
              to_string(c.fiberwise_kappas.at(name)));
    for (const auto& d : c.differences.coefficients)
        r.add(d.name, degree_of(d.value), to_string(d.value));
    for (const auto& id : c.identities)
        r.expect(id.name, id.pass, id.lhs + "; " + id.rhs);
    add_presentation(r, c.ring);
    r.expect("kappa[p1^2], kappa[p1^4], kappa[L2], kappa[L3], lambda generate the invariant ring",
             c.generates_invariants, hilbert_string(c.invariant_ring.hilbert));
    r.expect("kappa[L2], kappa[L3] is a regular sequence", c.l_classes_regular.regular,
             hilbert_string(c.l_classes_regular.quotient));
    r.add("quartic relation", degree_of(c.quartic), to_string(c.quartic));
    r.add("pd1|0 in generators", degree_of(c.pd10_in_generators), to_string(c.pd10_in_generators));
    r.expect("pd1|0 is nonzero modulo kappa[L2], kappa[L3]", c.pd10_survives, "");
    r.hilbert = c.ring.hilbert;
    return r;
}

Report hilbert_report(const Pipeline& p)
{
    Report r = start("hilbert", p);
    std::unique_ptr<GradedAmbient> amb;
    if (p.model.base.zero_differential())
        amb = std::make_unique<FreeAmbient>(p.model.base_algebra());
    else
        amb = std::make_unique<CohomologyAmbient>(p.model.base);
    r.hilbert = amb->hilbert(p.cutoff);
    r.add("base ring", std::nullopt, hilbert_string(r.hilbert));
    return r;
}

}  // namespace taut
