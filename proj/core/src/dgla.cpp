#include "taut/dgla.hpp"

#include "taut/errors.hpp"

#include <algorithm>
#include <sstream>

namespace taut {

namespace {

bool odd(int d)
{
    return d % 2 != 0;
}

SparseVec unit(std::size_t i)
{
    return {{i, Rational(1)}};
}

}  // namespace

DgLie::DgLie(std::vector<LieBasis> basis) : basis_(std::move(basis)), delta_(basis_.size())
{
    for (auto& b : basis_)
        if (b.dual.empty())
            b.dual = b.name;
}

std::optional<std::size_t> DgLie::index_of(const std::string& name) const
{
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].name == name)
            return i;
    return std::nullopt;
}

int DgLie::degree(const SparseVec& v) const
{
    if (v.empty())
        throw InputError("degree of the zero Lie element is undefined");
    int d = degree(v.front().first);
    for (const auto& e : v)
        if (degree(e.first) != d)
            throw InputError("Lie element is not homogeneous");
    return d;
}

void DgLie::set_delta(std::size_t i, SparseVec v)
{
    delta_.at(i) = std::move(v);
}

void DgLie::set_bracket(std::size_t i, std::size_t j, SparseVec v)
{
    if (i > j) {
        if (!(odd(degree(i)) && odd(degree(j))))
            v = sparse_scale(v, -1);
        std::swap(i, j);
    }
    if (v.empty())
        brackets_.erase({i, j});
    else
        brackets_[{i, j}] = std::move(v);
}

SparseVec DgLie::bracket_of(std::size_t i, std::size_t j) const
{
    const bool swapped = i > j;
    auto it = brackets_.find(swapped ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == brackets_.end())
        return {};
    if (swapped && !(odd(degree(i)) && odd(degree(j))))
        return sparse_scale(it->second, -1);
    return it->second;
}

bool DgLie::zero_differential() const
{
    return std::all_of(delta_.begin(), delta_.end(), [](const SparseVec& v) { return v.empty(); });
}

SparseVec DgLie::delta(const SparseVec& v) const
{
    SparseVec out;
    for (const auto& [i, c] : v)
        out = sparse_add(out, delta_.at(i), c);
    return out;
}

SparseVec DgLie::bracket(const SparseVec& a, const SparseVec& b) const
{
    SparseVec out;
    if (brackets_.empty())
        return out;
    for (const auto& [i, ci] : a)
        for (const auto& [j, cj] : b) {
            SparseVec br = bracket_of(i, j);
            if (!br.empty())
                out = sparse_add(out, br, ci * cj);
        }
    return out;
}

std::string DgLie::element_string(const SparseVec& v) const
{
    if (v.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [i, c] : v) {
        const bool neg = sgn(c) < 0;
        Rational mag = neg ? Rational(-c) : c;
        s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;
        if (mag != 1)
            s += mag.get_str() + "*";
        s += basis_[i].name;
    }
    return s;
}

std::optional<std::string> DgLie::validate() const
{
    const std::size_t n = basis_.size();
    auto name = [&](std::size_t i) { return basis_[i].name; };
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [k, c] : delta_[i])
            if (degree(k) != degree(i) - 1)
                return "differential of " + name(i) + " has the wrong degree";
    for (const auto& [ij, v] : brackets_)
        for (const auto& [k, c] : v)
            if (degree(k) != degree(ij.first) + degree(ij.second))
                return "bracket [" + name(ij.first) + ", " + name(ij.second) + "] has the wrong degree";
    for (std::size_t i = 0; i < n; ++i)
        if (!odd(degree(i)) && !bracket_of(i, i).empty())
            return "antisymmetry fails: [" + name(i) + ", " + name(i) + "] != 0 in even degree";
    for (std::size_t i = 0; i < n; ++i)
        if (!delta(delta_[i]).empty())
            return "delta^2 != 0 on " + name(i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            SparseVec lhs = delta(bracket_of(i, j));
            SparseVec rhs = bracket(delta_[i], unit(j));
            rhs = sparse_add(rhs, bracket(unit(i), delta_[j]), odd(degree(i)) ? -1 : 1);
            if (lhs != rhs)
                return "Leibniz rule fails on (" + name(i) + ", " + name(j) + ")";
        }
    if (brackets_.empty())
        return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            SparseVec xy = bracket_of(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                SparseVec lhs = bracket(unit(i), bracket_of(j, k));
                SparseVec rhs = bracket(xy, unit(k));
                rhs = sparse_add(rhs, bracket(unit(j), bracket_of(i, k)),
                                 odd(degree(i)) && odd(degree(j)) ? -1 : 1);
                if (lhs != rhs)
                    return "Jacobi identity fails on (" + name(i) + ", " + name(j) + ", " + name(k) + ")";
            }
        }
    return std::nullopt;
}

void DgLie::set_provenance(std::shared_ptr<const DgLie> origin, std::vector<SparseVec> prov)
{
    if (prov.size() != basis_.size())
        throw InputError("provenance needs one entry per basis element");
    origin_ = std::move(origin);
    provenance_ = std::move(prov);
}

std::string DgLie::describe() const
{
    std::ostringstream out;
    out << "basis (" << basis_.size() << "):\n";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        out << "  " << basis_[i].name << "  [degree " << basis_[i].degree << ", dual " << basis_[i].dual << "]";
        if (!delta_[i].empty())
            out << "  delta = " << element_string(delta_[i]);
        out << "\n";
    }
    if (!brackets_.empty()) {
        out << "brackets:\n";
        for (const auto& [ij, v] : brackets_)
            out << "  [" << basis_[ij.first].name << ", " << basis_[ij.second].name << "] = " << element_string(v)
                << "\n";
    }
    return out.str();
}

bool is_maurer_cartan(const DgLie& L, const SparseVec& tau)
{
    if (tau.empty())
        return true;
    if (L.degree(tau) != -1)
        return false;
    SparseVec lhs = sparse_add(L.delta(tau), L.bracket(tau, tau), Rational(1, 2));
    return lhs.empty();
}

DgLie twist(const DgLie& L, const SparseVec& tau)
{
    if (!is_maurer_cartan(L, tau))
        throw ModelError("twisting element is not Maurer-Cartan: delta(tau) + [tau,tau]/2 != 0 in degree -2");
    DgLie out = L;
    for (std::size_t i = 0; i < L.size(); ++i)
        out.set_delta(i, sparse_add(L.delta_of(i), L.bracket(tau, unit(i))));
    if (L.origin())
        out.set_provenance(L.origin(), L.provenance());
    return out;
}

DgLie truncate(const DgLie& L, int n)
{
    std::vector<SparseVec> combos;
    std::vector<LieBasis> basis;
    bool done_n = false;
    for (std::size_t i = 0; i < L.size(); ++i) {
        const int d = L.degree(i);
        if (d > n) {
            combos.push_back(unit(i));
            basis.push_back(L.basis(i));
        } else if (d == n && !done_n) {
            done_n = true;
            std::vector<std::size_t> idx;
            for (std::size_t j = 0; j < L.size(); ++j)
                if (L.degree(j) == n)
                    idx.push_back(j);
            std::vector<SparseVec> images;
            for (std::size_t j : idx)
                images.push_back(L.delta_of(j));
            for (const auto& k : kernel_of_images(images, L.size())) {
                SparseVec v;
                for (const auto& [local, c] : k)
                    v.emplace_back(idx[local], c);
                std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                LieBasis b;
                if (v.size() == 1 && v.front().second == 1) {
                    b = L.basis(v.front().first);
                } else {
                    const LieBasis& lead = L.basis(v.back().first);
                    b = {lead.name + "'", n, lead.dual + "'", "cycle " + L.element_string(v)};
                }
                combos.push_back(std::move(v));
                basis.push_back(std::move(b));
            }
        }
    }
    DgLie out(basis);
    Echelon span(L.size(), true);
    for (std::size_t k = 0; k < combos.size(); ++k)
        span.insert(combos[k], k);
    auto express = [&](const SparseVec& v, const std::string& what) {
        auto e = span.express(v);
        if (!e)
            throw ModelError("truncation is not closed under " + what);
        return *e;
    };
    for (std::size_t a = 0; a < combos.size(); ++a) {
        out.set_delta(a, express(L.delta(combos[a]), "the differential"));
        if (!L.is_abelian())
            for (std::size_t b = a; b < combos.size(); ++b)
                out.set_bracket(a, b, express(L.bracket(combos[a], combos[b]), "the bracket"));
    }
    if (L.origin()) {
        std::vector<SparseVec> prov;
        for (const auto& c : combos) {
            SparseVec p;
            for (const auto& [i, x] : c)
                p = sparse_add(p, L.provenance()[i], x);
            prov.push_back(std::move(p));
        }
        out.set_provenance(L.origin(), std::move(prov));
    } else {
        out.set_provenance(std::make_shared<const DgLie>(L), combos);
    }
    return out;
}

std::vector<std::size_t> homology_dims(const DgLie& L, int max_degree)
{
    std::vector<std::size_t> out;
    for (int d = 0; d <= max_degree; ++d) {
        std::vector<SparseVec> cyc_images;
        for (std::size_t i = 0; i < L.size(); ++i)
            if (L.degree(i) == d)
                cyc_images.push_back(L.delta_of(i));
        std::size_t cycles = kernel_of_images(cyc_images, L.size()).size();
        Echelon b(L.size());
        for (std::size_t i = 0; i < L.size(); ++i)
            if (L.degree(i) == d + 1)
                b.insert(L.delta_of(i));
        out.push_back(cycles - b.rank());
    }
    return out;
}

DerivationCoords::DerivationCoords(AlgebraPtr alg, int degree) : alg_(std::move(alg)), degree_(degree)
{
    for (std::size_t g = 0; g < alg_->size(); ++g) {
        offset_.push_back(cols_);
        const int target = alg_->degree(g) + degree_;
        if (target >= 0)
            cols_ += alg_->dim(target);
    }
}

SparseVec DerivationCoords::vec(const Derivation& d) const
{
    if (d.degree() != degree_)
        throw InputError("derivation has the wrong degree for these coordinates");
    SparseVec v;
    for (const auto& [g, img] : d.images()) {
        const int target = alg_->degree(g) + degree_;
        for (const auto& [m, c] : img.terms())
            v.emplace_back(offset_[g] + *alg_->basis_index(target, m), c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

Derivation DerivationCoords::from_vec(const SparseVec& v) const
{
    std::map<std::size_t, Element> images;
    for (const auto& [col, c] : v) {
        std::size_t g = static_cast<std::size_t>(std::upper_bound(offset_.begin(), offset_.end(), col) - offset_.begin()) - 1;
        const int target = alg_->degree(g) + degree_;
        const Monomial& m = alg_->basis(target).at(col - offset_[g]);
        auto it = images.find(g);
        if (it == images.end())
            images.emplace(g, Element::monomial(alg_, m, c));
        else
            it->second.add_term(m, c);
    }
    return Derivation(alg_, degree_, std::move(images));
}

namespace {

std::string derivation_name(const Algebra& alg, std::size_t g, const Monomial& m)
{
    std::string s = m.is_one() ? "" : alg.monomial_string(m) + "*";
    return s + "d/d" + alg.gen(g).name;
}

}  // namespace

DerivationLie derivation_sub_dgla(const Cdga& lambda, const std::vector<std::pair<std::string, Derivation>>& gens)
{
    const AlgebraPtr& alg = lambda.algebra();
    std::vector<LieBasis> basis;
    std::vector<Derivation> real;
    for (const auto& [name, d] : gens) {
        if (d.algebra() != alg)
            throw InputError("holonomy derivation '" + name + "' acts on another algebra");
        basis.push_back({name, -d.degree(), name, "derivation"});
        real.push_back(d);
    }
    std::map<int, std::pair<std::unique_ptr<DerivationCoords>, std::unique_ptr<Echelon>>> spans;
    auto span_for = [&](int t) -> auto& {
        auto it = spans.find(t);
        if (it == spans.end()) {
            auto coords = std::make_unique<DerivationCoords>(alg, t);
            auto ech = std::make_unique<Echelon>(coords->size(), true);
            for (std::size_t i = 0; i < real.size(); ++i)
                if (real[i].degree() == t && !ech->insert(coords->vec(real[i]), i))
                    throw InputError("holonomy derivation '" + basis[i].name + "' is linearly dependent on the others");
            it = spans.emplace(t, std::make_pair(std::move(coords), std::move(ech))).first;
        }
        return it->second;
    };
    auto express = [&](const Derivation& d, const std::string& what) -> SparseVec {
        if (d.is_zero())
            return {};
        auto& [coords, ech] = span_for(d.degree());
        auto e = ech->express(coords->vec(d));
        if (!e)
            throw ModelError("holonomy is not closed: " + what + " leaves the span");
        return *e;
    };
    for (std::size_t i = 0; i < real.size(); ++i)
        span_for(real[i].degree());
    DgLie lie(basis);
    for (std::size_t i = 0; i < real.size(); ++i) {
        lie.set_delta(i, express(commutator(lambda.d(), real[i]), "[d, " + basis[i].name + "]"));
        for (std::size_t j = i; j < real.size(); ++j)
            lie.set_bracket(i, j, express(commutator(real[i], real[j]),
                                          "[" + basis[i].name + ", " + basis[j].name + "]"));
    }
    if (auto v = lie.validate())
        throw ModelError("holonomy dg Lie algebra is invalid: " + *v);
    return {lambda, std::move(lie), std::move(real)};
}

DerivationLie derivation_dgla(const Cdga& lambda, int max_degree)
{
    const AlgebraPtr& alg = lambda.algebra();
    std::map<int, std::unique_ptr<DerivationCoords>> coords;
    std::vector<LieBasis> basis;
    std::vector<Derivation> real;
    for (int h = 0; h <= max_degree; ++h) {
        auto c = std::make_unique<DerivationCoords>(alg, -h);
        for (std::size_t g = 0; g < alg->size(); ++g) {
            const int target = alg->degree(g) - h;
            if (target < 0)
                continue;
            for (const auto& m : alg->basis(target)) {
                std::map<std::size_t, Element> img{{g, Element::monomial(alg, m)}};
                Derivation d(alg, -h, std::move(img));
                std::string name = derivation_name(*alg, g, m);
                basis.push_back({name, h, name, "derivation"});
                real.push_back(std::move(d));
            }
        }
        coords.emplace(-h, std::move(c));
    }
    DgLie lie(basis);
    std::map<int, std::size_t> first_index;
    for (std::size_t i = 0; i < real.size(); ++i)
        first_index.emplace(real[i].degree(), i);
    auto to_basis = [&](const Derivation& d) -> SparseVec {
        if (d.is_zero())
            return {};
        SparseVec v;
        for (const auto& [col, c] : coords.at(d.degree())->vec(d))
            v.emplace_back(first_index.at(d.degree()) + col, c);
        return v;
    };
    for (std::size_t i = 0; i < real.size(); ++i) {
        if (lie.degree(i) >= 1)
            lie.set_delta(i, to_basis(commutator(lambda.d(), real[i])));
        for (std::size_t j = i; j < real.size(); ++j)
            if (lie.degree(i) + lie.degree(j) <= max_degree)
                lie.set_bracket(i, j, to_basis(commutator(real[i], real[j])));
    }
    DgLie truncated = truncate(lie, 1);
    std::vector<Derivation> trunc_real;
    for (const auto& p : truncated.provenance()) {
        std::vector<std::pair<Rational, const Derivation*>> terms;
        for (const auto& [i, c] : p)
            terms.emplace_back(c, &real[i]);
        trunc_real.push_back(derivation_combination(alg, real[p.front().first].degree(), terms));
    }
    return {lambda, std::move(truncated), std::move(trunc_real)};
}

QuasiIsoCheck verify_quasi_isomorphism(const DerivationLie& sub, int max_degree)
{
    QuasiIsoCheck r;
    const AlgebraPtr& alg = sub.lambda.algebra();
    for (std::size_t i = 0; i < sub.lie.size(); ++i)
        if (sub.lie.degree(i) < 1) {
            r.ok = false;
            r.message = "sub-dgla element " + sub.lie.basis(i).name + " has degree < 1";
            return r;
        }
    for (int h = 1; h <= max_degree; ++h) {
        DerivationCoords here(alg, -h);
        DerivationCoords above(alg, -h - 1);
        DerivationCoords below(alg, -h + 1);
        // cycles of Der in degree h
        std::vector<SparseVec> der_images;
        std::vector<Derivation> der_basis;
        for (std::size_t c = 0; c < here.size(); ++c) {
            der_basis.push_back(here.from_vec({{c, Rational(1)}}));
            der_images.push_back(below.vec(commutator(sub.lambda.d(), der_basis.back())));
        }
        std::size_t der_cycles = kernel_of_images(der_images, below.size()).size();
        Echelon bnd(here.size());
        for (std::size_t c = 0; c < above.size(); ++c)
            bnd.insert(here.vec(commutator(sub.lambda.d(), above.from_vec({{c, Rational(1)}}))));
        std::size_t der_h = der_cycles - bnd.rank();
        // sub-dgla homology and its image
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < sub.lie.size(); ++i)
            if (sub.lie.degree(i) == h)
                idx.push_back(i);
        std::vector<SparseVec> sub_images;
        for (std::size_t i : idx)
            sub_images.push_back(sub.lie.delta_of(i));
        auto sub_cycles = kernel_of_images(sub_images, sub.lie.size());
        Echelon sub_bnd(sub.lie.size());
        for (std::size_t i = 0; i < sub.lie.size(); ++i)
            if (sub.lie.degree(i) == h + 1)
                sub_bnd.insert(sub.lie.delta_of(i));
        std::size_t sub_h = sub_cycles.size() - sub_bnd.rank();
        const std::size_t base = bnd.rank();
        for (const auto& z : sub_cycles) {
            std::vector<std::pair<Rational, const Derivation*>> terms;
            for (const auto& [local, c] : z)
                terms.emplace_back(c, &sub.realization[idx[local]]);
            bnd.insert(here.vec(derivation_combination(alg, -h, terms)));
        }
        const std::size_t image = bnd.rank() - base;
        r.sub_homology.push_back(sub_h);
        r.der_homology.push_back(der_h);
        if (r.ok && (image != sub_h || image != der_h)) {
            r.ok = false;
            r.first_mismatch = h;
            r.message = "degree " + std::to_string(h) + ": sub homology " + std::to_string(sub_h) + ", Der homology " +
                        std::to_string(der_h) + ", image rank " + std::to_string(image);
        }
    }
    return r;
}

SparseVec LambdaModel::coords(const Element& a) const
{
    SparseVec out;
    if (a.is_zero())
        return out;
    std::map<int, std::size_t> offset;
    for (std::size_t i = basis.size(); i-- > 0;)
        offset[degrees[i]] = i;
    for (int n = 0; n <= top_degree(); ++n) {
        Element part = a.homogeneous_part(n);
        if (part.is_zero())
            continue;
        SparseVec local = kind == Kind::Cohomology ? cohomology->coords(part, n) : part.coordinates(n);
        for (const auto& [i, c] : local)
            out.emplace_back(offset.at(n) + i, c);
    }
    Element rest = a;
    for (int n = 0; n <= top_degree(); ++n)
        rest -= a.homogeneous_part(n);
    if (!rest.is_zero())
        throw ModelError("element has components beyond the model's top degree: " + to_string(a));
    return out;
}

int LambdaModel::top_degree() const
{
    return degrees.empty() ? 0 : degrees.back();
}

namespace {

std::string sanitize_label(const std::string& s)
{
    std::string out;
    for (char ch : s)
        if (ch != '*' && ch != '^')
            out += ch;
    return out;
}

}  // namespace

LambdaModel cohomology_model(const Cdga& lambda)
{
    const Algebra& alg = *lambda.algebra();
    int fd = 0;
    for (const auto& g : alg.gens())
        fd += g.degree % 2 ? g.degree : -(g.degree - 1);
    if (fd < 0)
        throw ModelError("fiber model has negative formal dimension");
    LambdaModel m;
    m.kind = LambdaModel::Kind::Cohomology;
    m.lambda = lambda;
    m.cohomology = std::make_shared<CohomologyAmbient>(lambda);
    for (int n = 0; n <= fd; ++n) {
        std::size_t dim = m.cohomology->dim(n);
        for (std::size_t i = 0; i < dim; ++i) {
            Element rep = m.cohomology->from_coords(n, {{i, Rational(1)}});
            m.basis.push_back(rep);
            m.degrees.push_back(n);
            std::string label;
            if (rep.terms().size() == 1 && rep.terms().begin()->second == 1)
                label = sanitize_label(alg.monomial_string(rep.terms().begin()->first));
            else
                label = "h" + std::to_string(n) + "_" + std::to_string(i);
            m.labels.push_back(label);
        }
    }
    if (m.cohomology->dim(fd) == 0)
        throw ModelError("fiber cohomology vanishes in the formal dimension " + std::to_string(fd) +
                         "; the cohomology model needs an elliptic fiber");
    return m;
}

LambdaModel full_model(const Cdga& lambda)
{
    const Algebra& alg = *lambda.algebra();
    int top = 0;
    for (const auto& g : alg.gens()) {
        if (g.degree % 2 == 0)
            throw InputError("the full fiber model needs all fiber generators odd ('" + g.name + "' is even)");
        top += g.degree;
    }
    LambdaModel m;
    m.kind = LambdaModel::Kind::Full;
    m.lambda = lambda;
    for (int n = 0; n <= top; ++n)
        for (const auto& mono : alg.basis(n)) {
            m.basis.push_back(Element::monomial(lambda.algebra(), mono));
            m.degrees.push_back(n);
            m.labels.push_back(sanitize_label(alg.monomial_string(mono)));
        }
    return m;
}

std::size_t Semidirect::index(std::size_t l, std::size_t b) const
{
    return h_count + l * pi_size + b;
}

Semidirect semidirect(const DerivationLie& h, const LambdaModel& model, const DgLie& pi,
                      const std::vector<PiClass>& classes, Naming naming)
{
    if (classes.size() != pi.size())
        throw InputError("every Lie model basis element needs a dual class name");
    Semidirect s;
    s.h_count = h.lie.size();
    s.pi_size = pi.size();
    std::vector<LieBasis> basis = h.lie.basis();
    for (std::size_t l = 0; l < model.size(); ++l)
        for (std::size_t b = 0; b < pi.size(); ++b) {
            const std::string& label = model.labels[l];
            std::string dual;
            if (naming == Naming::Bar)
                dual = classes[b].dual_name + "|" + std::to_string(l);
            else
                dual = label == "1" ? classes[b].dual_name : classes[b].dual_name + "_" + label;
            std::string name = label == "1" ? classes[b].lie_name : label + "*" + classes[b].lie_name;
            basis.push_back({name, pi.degree(b) - model.degrees[l], dual, "tensor"});
            s.tensor_index.emplace_back(l, b);
        }
    DgLie lie(basis);
    auto tensor = [&](const SparseVec& mcoords, const SparseVec& picoords) {
        SparseVec out;
        for (const auto& [l, c] : mcoords)
            for (const auto& [b, x] : picoords)
                out.emplace_back(s.index(l, b), c * x);
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    };
    // h part
    for (std::size_t a = 0; a < s.h_count; ++a) {
        lie.set_delta(a, h.lie.delta_of(a));
        for (std::size_t b = a; b < s.h_count; ++b)
            lie.set_bracket(a, b, h.lie.bracket_of(a, b));
    }
    // action of h on the model
    for (std::size_t a = 0; a < s.h_count; ++a)
        for (std::size_t l = 0; l < model.size(); ++l) {
            Element img = h.realization[a].apply(model.basis[l]);
            SparseVec mc = model.coords(img);
            for (std::size_t b = 0; b < pi.size(); ++b)
                lie.set_bracket(a, s.index(l, b), tensor(mc, unit(b)));
        }
    // tensor part
    for (std::size_t l = 0; l < model.size(); ++l) {
        SparseVec dm = model.kind == LambdaModel::Kind::Full ? model.coords(model.lambda.differential(model.basis[l]))
                                                             : SparseVec{};
        for (std::size_t b = 0; b < pi.size(); ++b) {
            SparseVec d = tensor(dm, unit(b));
            d = sparse_add(d, tensor(unit(l), pi.delta_of(b)), odd(model.degrees[l]) ? -1 : 1);
            lie.set_delta(s.index(l, b), d);
        }
    }
    if (!pi.is_abelian())
        for (std::size_t l = 0; l < model.size(); ++l)
            for (std::size_t l2 = 0; l2 < model.size(); ++l2) {
                SparseVec prod = model.coords(model.basis[l] * model.basis[l2]);
                for (std::size_t b = 0; b < pi.size(); ++b)
                    for (std::size_t b2 = 0; b2 < pi.size(); ++b2) {
                        if (s.index(l, b) > s.index(l2, b2))
                            continue;
                        SparseVec v = tensor(prod, pi.bracket_of(b, b2));
                        if (odd(pi.degree(b)) && odd(model.degrees[l2]))
                            v = sparse_scale(v, -1);
                        lie.set_bracket(s.index(l, b), s.index(l2, b2), v);
                    }
            }
    if (auto v = lie.validate())
        throw ModelError("semidirect product is not a dg Lie algebra: " + *v);
    s.lie = std::move(lie);
    return s;
}

LXi build_l_xi(const DerivationLie& h, const LambdaModel& model, const DgLie& pi, const std::vector<PiClass>& classes,
               const std::vector<Element>& xi, Naming naming)
{
    if (xi.size() != classes.size())
        throw InputError("one characteristic cochain per Lie model class is required");
    LXi out;
    out.structure = semidirect(h, model, pi, classes, naming);
    for (std::size_t b = 0; b < xi.size(); ++b) {
        if (xi[b].is_zero())
            continue;
        for (const auto& [l, c] : model.coords(xi[b])) {
            const std::size_t i = out.structure.index(l, b);
            if (out.structure.lie.degree(i) != -1)
                throw InputError("cochain for '" + classes[b].dual_name + "' has the wrong degree");
            out.tau.emplace_back(i, c);
        }
    }
    std::sort(out.tau.begin(), out.tau.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.semidirect_lie = std::make_shared<const DgLie>(out.structure.lie);
    DgLie tw = twist(*out.semidirect_lie, out.tau);
    std::vector<SparseVec> ident;
    for (std::size_t i = 0; i < tw.size(); ++i)
        ident.push_back(unit(i));
    tw.set_provenance(out.semidirect_lie, std::move(ident));
    out.lie = truncate(tw, 0);
    if (auto v = out.lie.validate())
        throw ModelError("truncated Lie model is invalid: " + *v);
    return out;
}

}  // namespace taut
