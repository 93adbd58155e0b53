#include "taut/pipeline.hpp"

#include "taut/errors.hpp"
#include "taut/taut.hpp"

#include <algorithm>

namespace taut {

namespace {

int eigen_sign(const Element& image, const Element& v, const std::string& what)
{
    if (image == v)
        return 1;
    if (image == -v)
        return -1;
    throw ModelError("the involution does not act by a sign on " + what);
}

AlgebraMap sign_map(const AlgebraPtr& A, const std::map<std::string, int>& signs)
{
    std::vector<Element> images;
    for (std::size_t i = 0; i < A->size(); ++i) {
        auto it = signs.find(A->gen(i).name);
        const int s = it == signs.end() ? 1 : it->second;
        images.push_back(Rational(s) * Element::generator(A, i));
    }
    return AlgebraMap(A, A, images);
}

std::map<std::string, int> compute_base_signs(const Pipeline& p)
{
    const AlgebraPtr& A = p.lambda.algebra();
    const auto fs = fiber_signs(p.lambda, p.setup.options.signs);
    AlgebraMap sigma = sign_map(A, fs);
    const DgLie& semi = *p.lxi.semidirect_lie;
    const Semidirect& st = p.lxi.structure;
    std::vector<int> semi_sign(semi.size(), 1);
    for (std::size_t i = 0; i < st.h_count; ++i) {
        const Derivation& theta = p.holonomy.realization[i];
        std::optional<int> s;
        for (std::size_t g = 0; g < A->size(); ++g) {
            Element t = theta.image(g);
            if (t.is_zero())
                continue;
            Element conj = Rational(fs.at(A->gen(g).name)) * sigma.apply(t);
            const int e = eigen_sign(conj, t, "the holonomy element " + p.holonomy.lie.basis(i).name);
            if (s && *s != e)
                throw ModelError("the involution does not act by a sign on the holonomy element " +
                                 p.holonomy.lie.basis(i).name);
            s = e;
        }
        semi_sign[i] = s.value_or(1);
    }
    std::vector<int> model_sign;
    for (std::size_t l = 0; l < p.lambda_model.size(); ++l)
        model_sign.push_back(eigen_sign(sigma.apply(p.lambda_model.basis[l]), p.lambda_model.basis[l],
                                        "the fiber class " + p.lambda_model.labels[l]));
    std::vector<int> pi_sign;
    for (const auto& x : p.xi)
        pi_sign.push_back(x.is_zero() ? 1 : eigen_sign(sigma.apply(x), x, "a characteristic cochain"));
    for (std::size_t i = st.h_count; i < semi.size(); ++i) {
        auto [l, b] = st.tensor_index[i - st.h_count];
        semi_sign[i] = model_sign[l] * pi_sign[b];
    }
    std::map<std::string, int> out;
    const DgLie& L = p.lxi.lie;
    for (std::size_t j = 0; j < L.size(); ++j) {
        std::optional<int> s;
        for (const auto& [i, c] : L.provenance()[j]) {
            if (s && *s != semi_sign[i])
                throw ModelError("the involution does not act by a sign on " + L.basis(j).name);
            s = semi_sign[i];
        }
        const std::string& dual = L.basis(j).dual.empty() ? L.basis(j).name : L.basis(j).dual;
        out.emplace(dual, s.value_or(1));
    }
    return out;
}

std::string contract_generator(const SetupSpec& s, const Cdga& lambda)
{
    if (!s.options.contract.empty())
        return s.options.contract;
    std::vector<std::string> found;
    const AlgebraPtr& A = lambda.algebra();
    for (std::size_t i = 0; i < A->size(); ++i)
        if (!lambda.d().image(i).is_zero())
            found.push_back(A->gen(i).name);
    if (found.size() != 1)
        throw InputError("cannot choose the generator to contract: set the option 'contract'");
    return found.front();
}

}  // namespace

bool Pipeline::checks_pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const PipelineCheck& c) { return c.pass; });
}

std::map<std::string, int> fiber_signs(const Cdga& lambda, const std::map<std::string, int>& given)
{
    const AlgebraPtr& A = lambda.algebra();
    std::map<std::string, int> signs = given;
    for (const auto& [name, s] : given)
        if (!A->index_of(name))
            throw InputError("sign given for unknown generator '" + name + "'");
    // generators whose differential only involves signed generators get the
    // sign of their differential
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < A->size(); ++i) {
            const std::string& name = A->gen(i).name;
            const Element dg = lambda.d().image(i);
            if (dg.is_zero())
                continue;
            bool ready = true;
            for (const auto& [m, c] : dg.terms())
                for (std::size_t j = 0; j < A->size(); ++j)
                    if (m.exps[j] && !signs.count(A->gen(j).name) && !lambda.d().image(j).is_zero())
                        ready = false;
            if (!ready)
                continue;
            std::map<std::string, int> current = signs;
            for (std::size_t j = 0; j < A->size(); ++j)
                current.emplace(A->gen(j).name, 1);
            const int s = eigen_sign(sign_map(A, current).apply(dg), dg, "d " + name);
            auto it = signs.find(name);
            if (it == signs.end()) {
                signs.emplace(name, s);
                changed = true;
            } else if (it->second != s) {
                throw ModelError("sign of '" + name + "' is not compatible with its differential");
            }
        }
    }
    for (std::size_t i = 0; i < A->size(); ++i)
        signs.emplace(A->gen(i).name, 1);
    return signs;
}

Pipeline build_pipeline(const SetupSpec& s, const PipelineOptions& opts)
{
    Pipeline p;
    p.setup = s;
    p.cutoff = s.options.cutoff;
    p.lambda = s.fiber_cdga();
    const AlgebraPtr& A = p.lambda.algebra();
    int top = 0;
    for (const auto& g : A->gens())
        top = std::max(top, g.degree);
    p.verify = s.options.verify.value_or(top + 2);

    std::vector<std::pair<std::string, Derivation>> hs;
    for (std::size_t i = 0; i < s.holonomy.size(); ++i)
        hs.emplace_back(s.holonomy_dual(i), s.holonomy_derivation(i));
    p.holonomy = derivation_sub_dgla(p.lambda, hs);
    if (!opts.skip_verification) {
        QuasiIsoCheck q = verify_quasi_isomorphism(p.holonomy, p.verify);
        p.checks.push_back({"holonomy is quasi-isomorphic to Der<1> through degree " + std::to_string(p.verify), q.ok,
                            q.message});
    }

    p.lambda_model = s.options.lambda_model == "full" ? full_model(p.lambda) : cohomology_model(p.lambda);
    std::vector<LieBasis> basis;
    for (const auto& l : s.lie_model) {
        basis.push_back({l.name, l.degree, l.dual, ""});
        p.classes.push_back({l.name, l.dual});
        p.xi.push_back(s.xi_value(l.dual));
    }
    p.pi = DgLie(basis);
    const Naming naming = s.options.naming == "bar" ? Naming::Bar : Naming::Suffix;
    p.lxi = build_l_xi(p.holonomy, p.lambda_model, p.pi, p.classes, p.xi, naming);
    p.relative = relative_model(p.lxi, p.holonomy, p.lambda_model, p.classes, p.xi);
    if (!opts.skip_verification) {
        CrossCheck c = cross_validate(p.relative, p.verify);
        p.checks.push_back({"tensor and Hom differentials agree through degree " + std::to_string(p.verify), c.ok,
                            c.message});
    }

    std::string strategy = s.options.pushforward;
    if (strategy == "auto")
        strategy = A->size() == 1 && A->odd(0) ? "contractible" : "free";
    if (strategy == "contractible") {
        p.untrivialized = contractible_model(p.relative, s.options.rank);
    } else {
        const std::string y = contract_generator(s, p.lambda);
        p.simplified = simplify_total(p.relative, y, opts.skip_verification ? -1 : p.verify);
        if (!opts.skip_verification)
            p.checks.push_back({"eliminating " + y + " preserves cohomology through degree " + std::to_string(p.verify),
                                p.simplified->verified_through >= p.verify, ""});
        p.untrivialized = free_module_model(p.relative, *p.simplified, s.options.rank);
    }
    p.model = p.untrivialized;
    if (!s.options.trivialize.empty()) {
        p.trivialization = trivialization(p.untrivialized, s.options.trivialize);
        p.model = substitute_base(p.untrivialized, p.trivialization);
    }
    if (!s.options.signs.empty())
        p.base_signs = compute_base_signs(p);
    return p;
}

}  // namespace taut
