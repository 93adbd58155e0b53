#pragma once

#include <gmpxx.h>

#include <string>

namespace taut {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
Integer binomial(long n, long k);

}  // namespace taut
