#include "oracles.hpp"
#include "properties.hpp"

#include "taut/expr.hpp"
#include "taut/fiber.hpp"
#include "taut/pipeline.hpp"
#include "taut/presets.hpp"
#include "taut/taut.hpp"

#include <gtest/gtest.h>

using namespace taut;

namespace {

const Pipeline& s4()
{
    static const Pipeline p = build_pipeline(preset_setup("s-even", 4));
    return p;
}

Element base(const Pipeline& p, const std::string& text)
{
    return parse_element(text, p.model.base_algebra());
}

}  // namespace

TEST(LPolynomial, SeriesOracleCoefficients)
{
    const auto c = oracle::x_over_tanh(3);
    EXPECT_EQ(c[0], 1);
    EXPECT_EQ(c[1], make_rational(1, 3));
    EXPECT_EQ(c[2], make_rational(-1, 45));
    EXPECT_EQ(c[3], make_rational(2, 945));
}

TEST(LPolynomial, AgreesWithMultiplicativeSequenceOracle)
{
    const props::Outcome r = props::l_polynomial_oracle(6, 31);
    EXPECT_TRUE(r.ok) << r.detail;
}

TEST(LPolynomial, SignatureOfProjectiveSpaces)
{
    const props::Outcome r = props::signature(4);
    EXPECT_TRUE(r.ok) << r.detail;
    EXPECT_EQ(to_string(l_polynomial(2)), "-1/45*p1^2 + 7/45*p2");
}

TEST(FiberIntegration, EvenSphereRelationAndKappaClasses)
{
    const Pipeline& p = s4();
    ASSERT_TRUE(p.checks_pass());
    const Element x = p.model.x_element();
    EXPECT_EQ(p.model.relation, power(x, 2) + p.model.lift(base(p, "a")));
    EXPECT_EQ(kappa(p.model, "e^3").value, base(p, "6*e^2 - 8*a"));
    EXPECT_EQ(kappa(p.model, "e^2").value, base(p, "4*e"));
    // p1 has no fiber component on S^4
    EXPECT_TRUE(kappa(p.model, "p1").value.is_zero());
    EXPECT_EQ(kappa(p.model, "e*p1").value, base(p, "2*p1"));

    const Pipeline s8 = build_pipeline(preset_setup("s-even", 8));
    EXPECT_EQ(kappa(s8.model, "p3").value, base(s8, "p3_x"));
    EXPECT_EQ(kappa(s8.model, "e*p3").value, base(s8, "2*p3 + e*p3_x"));
    EXPECT_EQ(kappa(s8.model, "e^3").value, base(s8, "6*e^2 - 8*a"));
}

TEST(FiberIntegration, PushforwardLowersDegreeByFiberDimension)
{
    const Pipeline& p = s4();
    EXPECT_EQ(p.model.fiber_dim, 4);
    EXPECT_TRUE(p.model.pushforward(Element::constant(p.model.total, 1)).is_zero());
    EXPECT_EQ(p.model.pushforward(p.model.x_element()), Element::constant(p.model.base_algebra(), 1));
}

TEST(FiberIntegration, CouplingClassHasVanishingTopPushforward)
{
    for (int n = 2; n <= 4; ++n) {
        const Pipeline p = build_pipeline(preset_setup("cpn", n), {true});
        const Element w = coupling_class(p.model);
        EXPECT_TRUE(p.model.pushforward(power(w, n + 1)).is_zero()) << "n = " << n;
        EXPECT_EQ(p.model.pushforward(power(w, n)), Element::constant(p.model.base_algebra(), 1));
        const auto a = a_classes(p.model);
        EXPECT_EQ(a.size(), static_cast<std::size_t>(n + 2));
        EXPECT_TRUE(a[1].is_zero());
    }
}

TEST(FiberIntegration, DecomposeReassembleIdentity)
{
    const props::Outcome r = props::decompose_reassemble(300, 41);
    EXPECT_TRUE(r.ok) << r.detail;
}

TEST(FiberIntegration, OddSphereUsesTheContractiblePair)
{
    const Pipeline p = build_pipeline(preset_setup("s-odd", 5));
    ASSERT_TRUE(p.checks_pass());
    EXPECT_EQ(p.model.strategy, PushforwardStrategy::ContractiblePair);
    // d p_i = p_i_x * z for i >= r = 2 and 0 below
    EXPECT_TRUE(p.model.base.d().image(p.model.base_algebra()->require("p1")).is_zero());
    EXPECT_EQ(p.model.base.differential(base(p, "p2")), base(p, "p2_x*z"));
}

TEST(FiberIntegration, KahlerExactFormsForTheThreeSphere)
{
    const KahlerRing K = kahler_exact_forms(3, 24);
    EXPECT_TRUE(K.d_squared_zero);
    EXPECT_TRUE(K.products_vanish);
    for (int n = 0; n <= 24; ++n)
        EXPECT_EQ(K.exact_dim(n), (n + 3) % 4 == 0 ? 1u : 0u) << "degree " << n;
}

TEST(FiberIntegration, ClassResolverRejectsUnknownClasses)
{
    EXPECT_THROW(kappa(s4().model, "q7"), InputError);
}
