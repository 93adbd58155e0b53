#include "oracles.hpp"

#include <functional>
#include <utility>

namespace oracle {

std::size_t bareiss_rank(const DenseMatrix& input)
{
    if (input.empty())
        return 0;
    const std::size_t rows = input.size();
    const std::size_t cols = input.front().size();
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Integer l = 1;
        for (const auto& q : input[i])
            l = lcm(l, Integer(q.get_den()));
        for (std::size_t j = 0; j < cols; ++j)
            a[i][j] = Integer(input[i][j] * Rational(l));
    }
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = v;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

Integer monomial_count(const std::vector<int>& degrees, int n)
{
    std::function<Integer(std::size_t, int)> count = [&](std::size_t i, int left) -> Integer {
        if (left == 0)
            return 1;
        if (i == degrees.size())
            return 0;
        const int d = degrees[i];
        Integer total = 0;
        const int max_power = d % 2 ? 1 : left / d;
        for (int e = 0; e <= max_power && e * d <= left; ++e)
            total += count(i + 1, left - e * d);
        return total;
    };
    return count(0, n);
}

std::vector<Rational> x_over_tanh(int k)
{
    // in the variable t = x^2: x*cosh(x) = x * sum t^j/(2j)!, sinh(x) = x * sum t^j/(2j+1)!
    const int len = k + 1;
    std::vector<Rational> num(len);
    std::vector<Rational> den(len);
    Rational fact = 1;
    for (int i = 0; i <= 2 * k + 1; ++i) {
        if (i > 0)
            fact *= i;
        if (i % 2 == 0)
            num[i / 2] = 1 / fact;
        else
            den[i / 2] = 1 / fact;
    }
    std::vector<Rational> q(len);
    for (int i = 0; i < len; ++i) {
        Rational s = num[i];
        for (int j = 0; j < i; ++j)
            s -= q[j] * den[i - j];
        q[i] = s / den[0];
    }
    return q;
}

Rational multiplicative_sequence_at(const std::vector<Rational>& c, const std::vector<Rational>& y)
{
    const int k = static_cast<int>(y.size());
    // poly[d] = degree-d part of the product over the first i variables
    std::vector<Rational> poly(k + 1);
    poly[0] = 1;
    for (const auto& yi : y) {
        std::vector<Rational> next(k + 1);
        for (int d = 0; d <= k; ++d) {
            Rational power = 1;
            for (int a = 0; a + d <= k; ++a) {
                next[d + a] += poly[d] * c[a] * power;
                power *= yi;
            }
        }
        poly = std::move(next);
    }
    return poly[k];
}

std::vector<Rational> elementary_symmetric(const std::vector<Rational>& y)
{
    std::vector<Rational> e(y.size() + 1);
    e[0] = 1;
    for (const auto& v : y)
        for (std::size_t j = y.size(); j >= 1; --j)
            e[j] += e[j - 1] * v;
    return e;
}

}  // namespace oracle
