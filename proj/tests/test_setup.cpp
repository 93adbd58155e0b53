#include "taut/expr.hpp"
#include "taut/pipeline.hpp"
#include "taut/presets.hpp"
#include "taut/setup.hpp"

#include <gtest/gtest.h>

#include <random>
#include <regex>

using namespace taut;

namespace {

const char* kFourSphere = R"(# S^4 with its tangent bundle
fiber {
  x : 4
  y : 7
  d y = x^2
}
lie_model {
  q1 : 3 -> p1 : 4
  eps : 3 -> e : 4
}
xi {
  e = 2*x
}
holonomy {
  dy
}
)";

SourcePos error_position(const std::string& text)
{
    try {
        parse_setup(text);
    } catch (const ParseError& e) {
        return e.pos();
    }
    ADD_FAILURE() << "no parse error for:\n" << text;
    return {};
}

std::string error_message(const std::string& text)
{
    try {
        parse_setup(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(Setup, FourSphereSetupReproducesTheModel)
{
    const SetupSpec s = parse_setup(kFourSphere);
    EXPECT_EQ(s.fiber.size(), 2u);
    EXPECT_EQ(s.lie_model.size(), 2u);
    EXPECT_EQ(s.holonomy.size(), 1u);
    EXPECT_EQ(s.holonomy_dual(0), "a4");
    const Pipeline p = build_pipeline(s);
    EXPECT_TRUE(p.checks_pass());
    const Element x = p.model.x_element();
    EXPECT_EQ(p.model.relation, power(x, 2) + p.model.lift(parse_element("a4", p.model.base_algebra())));
}

TEST(Setup, EmptyXiSectionMeansTrivialBundleData)
{
    const SetupSpec s = parse_setup("fiber { x : 4; y : 7; d y = x^2 }\nlie_model { q1 : 3 -> p1 }\nxi { }\n"
                                    "holonomy { d/dy }");
    EXPECT_TRUE(s.xi_value("p1").is_zero());
    EXPECT_TRUE(build_pipeline(s).checks_pass());
}

TEST(Setup, DegreeMismatchIsReportedAtTheStatement)
{
    const std::string text = "fiber {\n  x : 4\n  y : 7\n  d y = x^2 + x\n}\n";
    const SourcePos pos = error_position(text);
    EXPECT_EQ(pos.line, 4);
    EXPECT_EQ(pos.column, 3);
    EXPECT_NE(error_message(text).find("degree mismatch"), std::string::npos);
}

TEST(Setup, DiagnosticsCarryLineAndColumn)
{
    EXPECT_EQ(error_position("fiber { x : 4 }\nlie_model { q1 : 3 -> p1 }\nxi { p1 = 2*z }\n").line, 3);
    EXPECT_NE(error_message("fiber { x : 4 }\nxi { p1 = 2*z }").find("unknown"), std::string::npos);
    EXPECT_NE(error_message("fiber { a : 2; b : 3; c : 4; d b = a^2; d c = a*b }").find("d^2 != 0"),
              std::string::npos);
    EXPECT_NE(error_message("fibre { x : 4 }").find("unknown section"), std::string::npos);
    EXPECT_NE(error_message("fiber { x : 4 ").find("missing '}'"), std::string::npos);
    EXPECT_NE(error_message("fiber { x : 4 }\noptions { cutoff = many }").find("integer"), std::string::npos);
    const std::regex located("^[0-9]+:[0-9]+: .+");
    EXPECT_TRUE(std::regex_match(error_message("fiber { x : 4; x : 6 }"), located));
}

TEST(Setup, ExpressionDegreeIsBounded)
{
    EXPECT_NE(error_message("fiber { x : 2; y : 9; d y = x^5000 }").find("exceed"), std::string::npos);
}

TEST(Setup, PrintParseRoundTripOnPresets)
{
    for (const auto& name : preset_names())
        for (int param : {1, 2, 3, 4, 5, 6, 7, 8}) {
            std::string text;
            try {
                text = preset_text(name, param);
            } catch (const InputError&) {
                continue;  // parameter out of range for this preset
            }
            const SetupSpec s = parse_setup(text);
            const std::string printed = print_setup(s);
            const SetupSpec again = parse_setup(printed);
            EXPECT_TRUE(again == s) << name << " " << param;
            EXPECT_EQ(print_setup(again), printed);
            EXPECT_EQ(setup_hash(again), setup_hash(s));
        }
}

TEST(Setup, PrintingShowsOnlyNonDefaultOptions)
{
    const std::string printed = print_setup(parse_setup("fiber { x : 3 }\noptions { cutoff = 40\n rank = 3 }"));
    EXPECT_EQ(printed.find("cutoff"), std::string::npos);
    EXPECT_NE(printed.find("rank = 3"), std::string::npos);
}

TEST(Setup, HashChangesExactlyWhenTheNormalizedTextChanges)
{
    const SetupSpec a = parse_setup(kFourSphere);
    // comments, spacing and statement separators do not matter
    const SetupSpec b = parse_setup("fiber{x:4;y:7;d y=x*x} lie_model{q1:3->p1;eps:3->e} xi{e=x+x} holonomy{d/dy}");
    EXPECT_EQ(print_setup(a), print_setup(b));
    EXPECT_EQ(setup_hash(a), setup_hash(b));
    const SetupSpec c = parse_setup("fiber{x:4;y:7;d y=x*x} lie_model{q1:3->p1;eps:3->e} xi{e=3*x} holonomy{d/dy}");
    EXPECT_NE(print_setup(a), print_setup(c));
    EXPECT_NE(setup_hash(a), setup_hash(c));
    EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
    EXPECT_EQ(setup_hash(a), fnv1a_hex(print_setup(a)));
}

TEST(Setup, TokenMutationFuzzOnlyYieldsStructuredErrors)
{
    const std::vector<std::string> pool{"{", "}", ":", "=", "^", "*", "+", "-", "->", "d", "x", "y", "q1", "p1",
                                        "0", "1", "7", "1/2", "1/0", "99999999999999999999", "#", ";", "\n",
                                        "d/dy", "d/dq", "fiber", "options", "sign", "é", "(", ")", "@"};
    std::mt19937 rng(97);
    std::size_t structured = 0, accepted = 0;
    const std::size_t instances = 1500;
    for (std::size_t i = 0; i < instances; ++i) {
        const auto& names = preset_names();
        const std::string base = preset_text(names[i % names.size()]);
        // tokens: runs of identifier characters, or single other characters
        std::vector<std::string> tokens;
        for (std::size_t k = 0; k < base.size();) {
            std::size_t j = k + 1;
            if (is_identifier_char(base[k]))
                while (j < base.size() && is_identifier_char(base[j]))
                    ++j;
            tokens.push_back(base.substr(k, j - k));
            k = j;
        }
        const int mutations = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int m = 0; m < mutations && !tokens.empty(); ++m) {
            const std::size_t at = std::uniform_int_distribution<std::size_t>(0, tokens.size() - 1)(rng);
            const std::string& tok = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
            switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
            case 0:
                tokens.erase(tokens.begin() + static_cast<long>(at));
                break;
            case 1:
                tokens.insert(tokens.begin() + static_cast<long>(at), tok);
                break;
            case 2:
                tokens[at] = tok;
                break;
            default:
                std::swap(tokens[at], tokens[std::uniform_int_distribution<std::size_t>(0, tokens.size() - 1)(rng)]);
            }
        }
        std::string text;
        for (const auto& t : tokens)
            text += t;
        try {
            const SetupSpec s = parse_setup(text);
            EXPECT_TRUE(parse_setup(print_setup(s)) == s) << text;
            ++accepted;
        } catch (const ParseError& e) {
            EXPECT_GE(e.pos().line, 1);
            EXPECT_GE(e.pos().column, 1);
            ++structured;
        } catch (const InputError& e) {
            ++structured;
        } catch (const std::exception& e) {
            ADD_FAILURE() << "unstructured error '" << e.what() << "' for:\n" << text;
        }
    }
    EXPECT_EQ(structured + accepted, instances);
    EXPECT_GT(structured, 0u);
}
