#include "properties.hpp"

#include "taut/ce.hpp"
#include "taut/dgla.hpp"
#include "taut/errors.hpp"
#include "taut/pipeline.hpp"
#include "taut/presets.hpp"

#include <gtest/gtest.h>

using namespace taut;

namespace {

// Heisenberg Lie algebra in degree 0: [u, v] = w.
DgLie heisenberg()
{
    DgLie L({{"u", 0, "", ""}, {"v", 0, "", ""}, {"w", 0, "", ""}});
    L.set_bracket(0, 1, {{2, 1}});
    return L;
}

Cdga even_sphere_fiber()
{
    AlgebraPtr A = make_algebra({{"x", 4, ""}, {"y", 7, ""}});
    return Cdga(A, Derivation(A, 1, {{1, power(Element::generator(A, "x"), 2)}}));
}

}  // namespace

TEST(DgLie, BracketIsGradedAntisymmetric)
{
    DgLie L = heisenberg();
    EXPECT_EQ(L.bracket_of(1, 0), (SparseVec{{2, -1}}));
    EXPECT_FALSE(L.validate().has_value());
}

TEST(DgLie, ValidateCatchesJacobiFailure)
{
    DgLie L({{"u", 0, "", ""}, {"v", 0, "", ""}, {"w", 0, "", ""}});
    L.set_bracket(0, 1, {{2, 1}});
    L.set_bracket(0, 2, {{0, 1}});
    EXPECT_TRUE(L.validate().has_value());
}

TEST(DgLie, ChevalleyEilenbergOfHeisenberg)
{
    CeAlgebra ce = ce_algebra(heisenberg());
    const Cdga& c = ce.cdga;
    EXPECT_EQ(c.algebra()->degree(0), 1);
    // d of the dual of w is, up to sign, the product of the duals of u and v
    const Element dw = c.d().image(2);
    const Element uv = Element::generator(c.algebra(), 0) * Element::generator(c.algebra(), 1);
    EXPECT_TRUE(dw == uv || dw == -uv) << to_string(dw);
    const auto h = cohomology(c, 3);
    EXPECT_EQ(h[1].dim, 2u);
    EXPECT_EQ(h[2].dim, 2u);
    EXPECT_EQ(h[3].dim, 1u);
}

TEST(DgLie, DSquaredFuzzOnBundledModels)
{
    const props::Outcome r = props::d_squared(1200, 21);
    EXPECT_GE(r.instances, 1000u);
    EXPECT_TRUE(r.ok) << r.detail;
}

TEST(DgLie, MaurerCartanTwistAndTruncation)
{
    PipelineOptions opts;
    opts.skip_verification = true;
    const Pipeline p = build_pipeline(preset_setup("s-even", 4), opts);
    const DgLie& semi = *p.lxi.semidirect_lie;
    EXPECT_TRUE(is_maurer_cartan(semi, p.lxi.tau));
    const DgLie twisted = twist(semi, p.lxi.tau);
    EXPECT_FALSE(twisted.validate().has_value());
    const DgLie t = truncate(twisted, 0);
    for (std::size_t i = 0; i < t.size(); ++i)
        EXPECT_GE(t.degree(i), 0);
    EXPECT_FALSE(t.validate().has_value());
}

TEST(DgLie, TwistRejectsNonMaurerCartan)
{
    DgLie L({{"a", -1, "", ""}, {"b", -2, "", ""}});
    L.set_bracket(0, 0, {{1, 1}});
    EXPECT_FALSE(is_maurer_cartan(L, {{0, 1}}));
    EXPECT_THROW(twist(L, {{0, 1}}), ModelError);
}

TEST(Derivations, HolonomyIsQuasiIsomorphicToAllDerivations)
{
    const Cdga lambda = even_sphere_fiber();
    const AlgebraPtr& A = lambda.algebra();
    DerivationLie h = derivation_sub_dgla(lambda, {{"a", Derivation(A, -7, {{1, Element::constant(A, 1)}})}});
    const QuasiIsoCheck q = verify_quasi_isomorphism(h, 9);
    EXPECT_TRUE(q.ok) << q.message;
}

TEST(Derivations, MissingHolonomyGeneratorIsDetected)
{
    // without d/dy the sub-dgla misses a homology class of the derivations
    const Cdga lambda = even_sphere_fiber();
    DerivationLie h = derivation_sub_dgla(lambda, {});
    EXPECT_FALSE(verify_quasi_isomorphism(h, 9).ok);
}

TEST(RelativeModel, CrossValidationOfTensorAndHomDifferentials)
{
    PipelineOptions opts;
    opts.skip_verification = true;
    for (const auto& [name, param] : std::vector<std::pair<std::string, int>>{{"s-even", 2}, {"cpn", 2}, {"s-odd", 3}}) {
        const Pipeline p = build_pipeline(preset_setup(name, param), opts);
        const CrossCheck c = cross_validate(p.relative, 8);
        EXPECT_TRUE(c.ok) << name << ": " << c.message;
        EXPECT_GT(c.evaluations, 0u);
    }
}
