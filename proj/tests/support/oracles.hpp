#pragma once

// Independent reference implementations used to check the library. They share
// nothing with the library beyond the GMP number types.

#include "taut/rational.hpp"

#include <cstddef>
#include <vector>

namespace oracle {

using taut::Integer;
using taut::Rational;

using DenseMatrix = std::vector<std::vector<Rational>>;

// Rank by dense fraction-free (Bareiss) elimination after clearing
// denominators row by row.
std::size_t bareiss_rank(const DenseMatrix& m);

// Number of monomials of degree n in a free graded-commutative algebra:
// multisets of even generators times subsets of odd ones, counted by direct
// recursion over the generators.
Integer monomial_count(const std::vector<int>& degrees, int n);

// Coefficients c_0..c_k of x/tanh(x) = sum c_j x^{2j}, by dividing the power
// series of x*cosh(x) by that of sinh(x).
std::vector<Rational> x_over_tanh(int k);

// Degree-k part of prod_{i=1..k} f(y_i), f(y) = sum c_j y^j, at the point y.
Rational multiplicative_sequence_at(const std::vector<Rational>& c, const std::vector<Rational>& y);

// Elementary symmetric polynomials e_1..e_k of y.
std::vector<Rational> elementary_symmetric(const std::vector<Rational>& y);

}  // namespace oracle
