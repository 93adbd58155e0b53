#include "properties.hpp"

#include "oracles.hpp"

#include "taut/ce.hpp"
#include "taut/fiber.hpp"
#include "taut/graded.hpp"
#include "taut/linear.hpp"
#include "taut/pipeline.hpp"
#include "taut/presets.hpp"

#include <map>

namespace props {

using namespace taut;

namespace {

int uniform(std::mt19937& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Rational small_rational(std::mt19937& rng)
{
    int num = 0;
    while (num == 0)
        num = uniform(rng, -4, 4);
    return make_rational(num, uniform(rng, 1, 3));
}

int sign(int exponent)
{
    return exponent % 2 ? -1 : 1;
}

bool same_derivation(const Derivation& a, const Derivation& b)
{
    for (std::size_t i = 0; i < a.algebra()->size(); ++i)
        if (a.image(i) != b.image(i))
            return false;
    return true;
}

Rational evaluate_at(const Element& e, const std::map<std::string, Rational>& values)
{
    const AlgebraPtr& A = e.algebra();
    Rational total = 0;
    for (const auto& [m, c] : e.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < A->size(); ++i)
            for (int k = 0; k < m.exps[i]; ++k)
                t *= values.at(A->gen(i).name);
        total += t;
    }
    return total;
}

const Pipeline& bundled(const std::string& preset, int param)
{
    static std::map<std::pair<std::string, int>, Pipeline> cache;
    auto key = std::make_pair(preset, param);
    auto it = cache.find(key);
    if (it == cache.end()) {
        PipelineOptions opts;
        opts.skip_verification = true;
        it = cache.emplace(key, build_pipeline(preset_setup(preset, param), opts)).first;
    }
    return it->second;
}

}  // namespace

Element random_element(const AlgebraPtr& alg, int n, std::mt19937& rng, int terms)
{
    Element out(alg);
    if (n < 0)
        return out;
    const auto& basis = alg->basis(n);
    if (basis.empty())
        return out;
    for (int t = 0; t < terms; ++t)
        out += Element::monomial(alg, basis[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(basis.size()) - 1))],
                                 small_rational(rng));
    return out;
}

AlgebraPtr random_algebra(std::mt19937& rng, int count, int max_degree)
{
    std::vector<GenSymbol> gens;
    for (int i = 0; i < count; ++i)
        gens.push_back({"g" + std::to_string(i), uniform(rng, 1, max_degree), ""});
    return make_algebra(gens);
}

Derivation random_derivation(const AlgebraPtr& alg, int degree, std::mt19937& rng)
{
    std::map<std::size_t, Element> images;
    for (std::size_t i = 0; i < alg->size(); ++i)
        if (uniform(rng, 0, 3) > 0)
            images.emplace(i, random_element(alg, alg->degree(i) + degree, rng, 2));
    return Derivation(alg, degree, images);
}

Outcome koszul_signs(std::size_t instances, std::uint32_t seed)
{
    Outcome out{"graded commutativity and associativity with Koszul signs", 0, true, ""};
    std::mt19937 rng(seed);
    while (out.instances < instances) {
        AlgebraPtr A = random_algebra(rng, uniform(rng, 2, 5), 4);
        const int da = uniform(rng, 0, 6), db = uniform(rng, 0, 6), dc = uniform(rng, 0, 6);
        Element a = random_element(A, da, rng), b = random_element(A, db, rng), c = random_element(A, dc, rng);
        ++out.instances;
        if ((a * b) * c != a * (b * c))
            out.fail("associativity fails for " + to_string(a) + ", " + to_string(b) + ", " + to_string(c));
        if (a * b != Rational(sign(da * db)) * (b * a))
            out.fail("graded commutativity fails for " + to_string(a) + ", " + to_string(b));
        if (da % 2 && !(a * a).is_zero())
            out.fail("odd element with nonzero square: " + to_string(a));
    }
    return out;
}

Outcome leibniz_rule(std::size_t instances, std::uint32_t seed)
{
    Outcome out{"Leibniz rule for derivations", 0, true, ""};
    std::mt19937 rng(seed);
    while (out.instances < instances) {
        AlgebraPtr A = random_algebra(rng, uniform(rng, 2, 5), 4);
        const int k = uniform(rng, -2, 2);
        Derivation theta = random_derivation(A, k, rng);
        const int da = uniform(rng, 0, 6), db = uniform(rng, 0, 6);
        Element a = random_element(A, da, rng), b = random_element(A, db, rng);
        ++out.instances;
        Element lhs = theta.apply(a * b);
        Element rhs = theta.apply(a) * b + Rational(sign(k * da)) * (a * theta.apply(b));
        if (lhs != rhs)
            out.fail("theta(ab) differs for a = " + to_string(a) + ", b = " + to_string(b));
    }
    return out;
}

Outcome jacobi_identity(std::size_t instances, std::uint32_t seed)
{
    Outcome out{"graded antisymmetry and Jacobi for commutators of derivations", 0, true, ""};
    std::mt19937 rng(seed);
    while (out.instances < instances) {
        AlgebraPtr A = random_algebra(rng, uniform(rng, 2, 4), 4);
        const int k1 = uniform(rng, -2, 2), k2 = uniform(rng, -2, 2), k3 = uniform(rng, -2, 2);
        Derivation t1 = random_derivation(A, k1, rng), t2 = random_derivation(A, k2, rng),
                   t3 = random_derivation(A, k3, rng);
        ++out.instances;
        Derivation ab = commutator(t1, t2);
        Derivation ba = commutator(t2, t1);
        Derivation minus_ba = derivation_combination(A, k1 + k2, {{Rational(-sign(k1 * k2)), &ba}});
        if (!same_derivation(ab, minus_ba))
            out.fail("antisymmetry fails");
        Derivation lhs = commutator(t1, commutator(t2, t3));
        Derivation r1 = commutator(commutator(t1, t2), t3);
        Derivation r2 = commutator(t2, commutator(t1, t3));
        Derivation rhs = derivation_combination(A, k1 + k2 + k3, {{Rational(1), &r1}, {Rational(sign(k1 * k2)), &r2}});
        if (!same_derivation(lhs, rhs))
            out.fail("Jacobi fails for derivations of degrees " + std::to_string(k1) + ", " + std::to_string(k2) +
                     ", " + std::to_string(k3));
    }
    return out;
}

Outcome d_squared(std::size_t instances, std::uint32_t seed)
{
    Outcome out{"d^2 = 0 on Chevalley-Eilenberg and relative models", 0, true, ""};
    std::mt19937 rng(seed);
    const std::vector<std::pair<std::string, int>> setups{{"s-even", 4}, {"s-odd", 5}, {"cpn", 2}, {"cpn-real", 2}};
    std::vector<Cdga> algebras;
    for (const auto& [name, param] : setups) {
        const Pipeline& p = bundled(name, param);
        if (auto bad = p.lxi.lie.validate())
            out.fail(name + ": " + *bad);
        if (auto bad = p.holonomy.lie.validate())
            out.fail(name + " holonomy: " + *bad);
        algebras.push_back(ce_algebra(p.lxi.lie).cdga);
        algebras.push_back(p.relative.total);
    }
    while (out.instances < instances) {
        const Cdga& c = algebras[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(algebras.size()) - 1))];
        Element a = random_element(c.algebra(), uniform(rng, 1, 12), rng);
        ++out.instances;
        if (!c.differential(c.differential(a)).is_zero())
            out.fail("d^2 a is nonzero for a = " + to_string(a));
    }
    return out;
}

Outcome linear_oracle(std::size_t matrices, std::uint32_t seed)
{
    Outcome out{"rank, kernel and solve against dense fraction-free elimination", 0, true, ""};
    std::mt19937 rng(seed);
    auto entry = [&]() -> Rational {
        if (uniform(rng, 0, 2) == 0)
            return 0;
        return small_rational(rng);
    };
    while (out.instances < matrices) {
        const std::size_t rows = static_cast<std::size_t>(uniform(rng, 1, 9));
        const std::size_t cols = static_cast<std::size_t>(uniform(rng, 1, 9));
        oracle::DenseMatrix m(rows, std::vector<Rational>(cols));
        if (uniform(rng, 0, 1)) {
            for (auto& row : m)
                for (auto& v : row)
                    v = entry();
        } else {
            // low rank: product of rows x k and k x cols
            const std::size_t k = static_cast<std::size_t>(uniform(rng, 1, 3));
            oracle::DenseMatrix l(rows, std::vector<Rational>(k)), r(k, std::vector<Rational>(cols));
            for (auto& row : l)
                for (auto& v : row)
                    v = entry();
            for (auto& row : r)
                for (auto& v : row)
                    v = entry();
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    for (std::size_t t = 0; t < k; ++t)
                        m[i][j] += l[i][t] * r[t][j];
        }
        ++out.instances;
        const std::string where = "matrix " + std::to_string(out.instances) + ": ";
        SparseMatrix sm = SparseMatrix::from_dense(m, cols);
        const std::size_t expected = oracle::bareiss_rank(m);
        if (rank(sm) != expected)
            out.fail(where + "rank " + std::to_string(rank(sm)) + " vs oracle " + std::to_string(expected));
        Echelon e(cols);
        for (const auto& row : m)
            e.insert(to_sparse(row));
        if (e.rank() != expected)
            out.fail(where + "echelon rank differs");

        const auto kernel = kernel_basis(sm);
        if (kernel.size() != cols - expected)
            out.fail(where + "kernel dimension differs");
        for (const auto& v : kernel)
            for (const auto& x : sm.apply(v))
                if (x != 0)
                    out.fail(where + "kernel vector not annihilated");
        if (!kernel.empty() && oracle::bareiss_rank(kernel) != kernel.size())
            out.fail(where + "kernel vectors dependent");

        Vector x0(cols);
        for (auto& v : x0)
            v = entry();
        const Vector b = sm.apply(x0);
        auto x = solve(sm, b);
        if (!x || sm.apply(*x) != b)
            out.fail(where + "consistent system not solved");
        Vector b2(rows);
        for (auto& v : b2)
            v = entry();
        oracle::DenseMatrix aug = m;
        for (std::size_t i = 0; i < rows; ++i)
            aug[i].push_back(b2[i]);
        const bool solvable = oracle::bareiss_rank(aug) == expected;
        auto x2 = solve(sm, b2);
        if (x2.has_value() != solvable || (x2 && sm.apply(*x2) != b2))
            out.fail(where + "solvability differs from the oracle");
    }
    return out;
}

Outcome hilbert_oracle(std::size_t algebras, std::uint32_t seed)
{
    Outcome out{"graded dimensions against monomial counting", 0, true, ""};
    std::mt19937 rng(seed);
    const int cutoff = 20;
    while (out.instances < algebras) {
        AlgebraPtr A = random_algebra(rng, uniform(rng, 1, 6), 6);
        std::vector<int> degrees;
        for (const auto& g : A->gens())
            degrees.push_back(g.degree);
        const Hilbert h = free_hilbert(degrees, cutoff);
        ++out.instances;
        for (int n = 0; n <= cutoff; ++n) {
            const Integer expected = oracle::monomial_count(degrees, n);
            if (h[static_cast<std::size_t>(n)] != expected || Integer(static_cast<unsigned long>(A->dim(n))) != expected)
                out.fail("degree " + std::to_string(n) + " dimension differs from the count " + expected.get_str());
        }
    }
    return out;
}

Outcome l_polynomial_oracle(int max_k, std::uint32_t seed)
{
    Outcome out{"L-polynomials against the multiplicative sequence of x/tanh(x)", 0, true, ""};
    std::mt19937 rng(seed);
    const std::vector<Rational> c = oracle::x_over_tanh(max_k);
    for (int k = 1; k <= max_k; ++k) {
        if (l_series_coefficient(k) != c[static_cast<std::size_t>(k)])
            out.fail("series coefficient " + std::to_string(k) + " differs");
        const Element L = l_polynomial(k);
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<Rational> y;
            for (int i = 0; i < k; ++i)
                y.push_back(small_rational(rng));
            const auto e = oracle::elementary_symmetric(y);
            std::map<std::string, Rational> values;
            for (int j = 1; j <= k; ++j)
                values["p" + std::to_string(j)] = e[static_cast<std::size_t>(j)];
            ++out.instances;
            if (evaluate_at(L, values) != oracle::multiplicative_sequence_at(c, y))
                out.fail("L" + std::to_string(k) + " differs from the oracle");
        }
    }
    return out;
}

Outcome signature(int max_k)
{
    Outcome out{"signature of CP^{2k} is 1", 0, true, ""};
    for (int k = 1; k <= max_k; ++k) {
        // p(CP^{2k}) = (1 + h^2)^{2k+1}, evaluated at h = 1
        std::map<std::string, Rational> values;
        for (int j = 1; j <= k; ++j)
            values["p" + std::to_string(j)] = Rational(binomial(2 * k + 1, j));
        ++out.instances;
        const Rational s = evaluate_at(l_polynomial(k), values);
        if (s != 1)
            out.fail("<L" + std::to_string(k) + ", [CP^" + std::to_string(2 * k) + "]> = " + to_string(s));
    }
    return out;
}

Outcome decompose_reassemble(std::size_t instances, std::uint32_t seed)
{
    Outcome out{"reassemble(decompose(a)) = a in the fibered models", 0, true, ""};
    std::mt19937 rng(seed);
    const std::vector<std::pair<std::string, int>> setups{{"cpn", 2}, {"cpn", 3}, {"cpn-real", 2}, {"s-even", 4}};
    while (out.instances < instances) {
        const auto& [name, param] = setups[static_cast<std::size_t>(uniform(rng, 0, 3))];
        const FiberedModel& m = bundled(name, param).untrivialized;
        Element a = random_element(m.total, 2 * uniform(rng, 0, 6), rng, 4);
        ++out.instances;
        const auto coeffs = decompose(m, a);
        if (coeffs.size() != static_cast<std::size_t>(m.top) + 1 || reassemble(m, coeffs) != m.reduce(a))
            out.fail(name + " " + std::to_string(param) + ": reassembly differs for " + to_string(a));
    }
    return out;
}

}  // namespace props
