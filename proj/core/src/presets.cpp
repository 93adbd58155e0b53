#include "taut/presets.hpp"

#include "taut/errors.hpp"
#include "taut/rational.hpp"

#include <sstream>

namespace taut {

namespace {

std::string power(const std::string& x, int k)
{
    return k == 1 ? x : x + "^" + std::to_string(k);
}

std::string scaled(const Integer& c, const std::string& m)
{
    return c == 1 ? m : c.get_str() + "*" + m;
}

std::string even_sphere(int m)
{
    if (m < 2 || m % 2 != 0 || m > 40)
        throw InputError("s-even needs an even dimension 2 <= m <= 40");
    const int k = m / 2;
    std::ostringstream o;
    o << "# even sphere S^" << m << " with its tangent bundle\n";
    o << "fiber {\n  x : " << m << "\n  y : " << 2 * m - 1 << "\n  d y = x^2\n}\n";
    o << "lie_model {\n";
    for (int i = 1; i < k; ++i)
        o << "  q" << i << " : " << 4 * i - 1 << " -> p" << i << "\n";
    o << "  eps : " << m - 1 << " -> e\n}\n";
    o << "xi {\n  e = 2*x\n}\n";
    o << "holonomy {\n  d/dy -> a\n}\n";
    o << "options {\n  rank = " << m << "\n}\n";
    return o.str();
}

std::string odd_sphere(int m)
{
    if (m < 3 || m % 2 == 0 || m > 41)
        throw InputError("s-odd needs an odd dimension 3 <= m <= 41");
    const int k = (m - 1) / 2;
    std::ostringstream o;
    o << "# odd sphere S^" << m << " with its tangent bundle\n";
    o << "fiber {\n  x : " << m << "\n}\n";
    o << "lie_model {\n";
    for (int i = 1; i <= k; ++i)
        o << "  q" << i << " : " << 4 * i - 1 << " -> p" << i << "\n";
    o << "}\n";
    o << "holonomy {\n  d/dx -> z\n}\n";
    o << "options {\n  rank = " << m << "\n  pushforward = contractible\n}\n";
    return o.str();
}

void projective_fiber(std::ostringstream& o, int n)
{
    o << "fiber {\n  x : 2\n  y : " << 2 * n + 1 << "\n  d y = " << power("x", n + 1) << "\n}\n";
}

void projective_holonomy(std::ostringstream& o, int n)
{
    o << "holonomy {\n";
    for (int k = 0; k < n; ++k) {
        o << "  ";
        if (k > 0)
            o << power("x", k) << "*";
        o << "d/dy -> a" << n + 1 - k << "\n";
    }
    o << "}\n";
}

std::string complex_projective(int n)
{
    if (n < 1 || n > 12)
        throw InputError("cpn needs 1 <= n <= 12");
    std::ostringstream o;
    o << "# CP^" << n << " with its complex tangent bundle\n";
    projective_fiber(o, n);
    o << "lie_model {\n";
    for (int i = 1; i <= n; ++i)
        o << "  q" << i << " : " << 2 * i - 1 << " -> c" << i << "\n";
    o << "}\nxi {\n";
    for (int i = 1; i <= n; ++i)
        o << "  c" << i << " = " << scaled(binomial(n + 1, i), power("x", i)) << "\n";
    o << "}\n";
    projective_holonomy(o, n);
    o << "options {\n  rank = " << 2 * n << "\n  naming = bar\n}\n";
    return o.str();
}

std::string real_projective(int n, bool trivial_euler)
{
    if (n < 1 || n > 12)
        throw InputError("cpn-real needs 1 <= n <= 12");
    std::ostringstream o;
    if (trivial_euler)
        o << "# CP^2 with its real tangent bundle and trivialized Euler difference\n";
    else
        o << "# CP^" << n << " with its real (oriented) tangent bundle\n";
    projective_fiber(o, n);
    o << "lie_model {\n";
    for (int i = 1; i < n; ++i)
        o << "  q" << i << " : " << 4 * i - 1 << " -> p" << i << "\n";
    o << "  eps : " << 2 * n - 1 << " -> e\n}\nxi {\n";
    for (int i = 1; i < n; ++i)
        if (2 * i <= n)
            o << "  p" << i << " = " << scaled(binomial(n + 1, i), power("x", 2 * i)) << "\n";
    o << "  e = " << scaled(Integer(n + 1), power("x", n)) << "\n}\n";
    projective_holonomy(o, n);
    o << "options {\n  rank = " << 2 * n << "\n  naming = bar\n";
    if (n % 2 == 0)
        o << "  sign x = -1\n";
    if (trivial_euler)
        o << "  trivialize = e\n";
    o << "}\n";
    return o.str();
}

}  // namespace

std::vector<std::string> preset_names()
{
    return {"s-even", "s-odd", "cpn", "cp2-euler-trivial", "cpn-real"};
}

int preset_default_parameter(const std::string& name)
{
    if (name == "s-even")
        return 4;
    if (name == "s-odd")
        return 5;
    if (name == "cpn" || name == "cpn-real" || name == "cp2-euler-trivial")
        return 2;
    throw InputError("unknown preset '" + name + "'");
}

std::string preset_text(const std::string& name, int parameter)
{
    if (name == "s-even")
        return even_sphere(parameter);
    if (name == "s-odd")
        return odd_sphere(parameter);
    if (name == "cpn")
        return complex_projective(parameter);
    if (name == "cpn-real")
        return real_projective(parameter, false);
    if (name == "cp2-euler-trivial")
        return real_projective(2, true);
    throw InputError("unknown preset '" + name + "'");
}

std::string preset_text(const std::string& name)
{
    return preset_text(name, preset_default_parameter(name));
}

SetupSpec preset_setup(const std::string& name, int parameter)
{
    return parse_setup(preset_text(name, parameter));
}

}  // namespace taut
