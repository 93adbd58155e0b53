#include "taut/presets.hpp"
#include "taut/setup.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace taut;

namespace {

std::string read(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST(Presets, BundledFilesMatchTheBuiltInTexts)
{
    for (const auto& name : preset_names()) {
        const std::string file = read(std::string(TAUT_PRESET_DIR) + "/" + name + ".k");
        ASSERT_FALSE(file.empty()) << name;
        EXPECT_EQ(file, preset_text(name)) << name;
        EXPECT_TRUE(parse_setup(file) == preset_setup(name, preset_default_parameter(name)));
    }
}

TEST(Presets, ParameterRanges)
{
    EXPECT_THROW(preset_text("s-even", 3), InputError);
    EXPECT_THROW(preset_text("s-odd", 4), InputError);
    EXPECT_THROW(preset_text("cpn", 0), InputError);
    EXPECT_THROW(preset_text("nope", 2), InputError);
    EXPECT_NO_THROW(preset_text("cpn-real", 5));
}

TEST(Presets, RealProjectiveSpacesCarryTheConjugationSign)
{
    EXPECT_EQ(preset_setup("cpn-real", 2).options.signs.count("x"), 1u);
    EXPECT_EQ(preset_setup("cpn-real", 3).options.signs.count("x"), 0u);
    EXPECT_EQ(preset_setup("cp2-euler-trivial", 2).options.trivialize, "e");
}
