#pragma once

// Randomized property checks shared by the unit tests and the acceptance
// report. Each returns the number of instances checked and the first
// counterexample, if any.

#include "taut/algebra.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace props {

struct Outcome {
    std::string name;
    std::size_t instances = 0;
    bool ok = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (ok)
            detail = why;
        ok = false;
    }
};

// Random homogeneous element: up to `terms` basis monomials of degree n with
// small nonzero rational coefficients (zero if the degree is empty).
taut::Element random_element(const taut::AlgebraPtr& alg, int n, std::mt19937& rng, int terms = 3);
// Algebra with `count` generators of random degrees 1..max_degree.
taut::AlgebraPtr random_algebra(std::mt19937& rng, int count, int max_degree);
taut::Derivation random_derivation(const taut::AlgebraPtr& alg, int degree, std::mt19937& rng);

Outcome koszul_signs(std::size_t instances, std::uint32_t seed);
Outcome leibniz_rule(std::size_t instances, std::uint32_t seed);
Outcome jacobi_identity(std::size_t instances, std::uint32_t seed);
// d^2 = 0 on random cochains of Chevalley-Eilenberg algebras and relative
// models built from the bundled setups.
Outcome d_squared(std::size_t instances, std::uint32_t seed);
// Rank, kernel and solvability against dense fraction-free elimination.
Outcome linear_oracle(std::size_t matrices, std::uint32_t seed);
// Graded dimensions against direct monomial counting.
Outcome hilbert_oracle(std::size_t algebras, std::uint32_t seed);
// L-polynomials against the multiplicative sequence of x/tanh(x).
Outcome l_polynomial_oracle(int max_k, std::uint32_t seed);
// <L_k, [CP^{2k}]> = 1.
Outcome signature(int max_k);
// reassemble(decompose(a)) = a for random total classes of CP^n models.
Outcome decompose_reassemble(std::size_t instances, std::uint32_t seed);

}  // namespace props
