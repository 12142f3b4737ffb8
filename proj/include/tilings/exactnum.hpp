#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace tilings {

// Arbitrary-precision exact arithmetic. Rationals are kept canonical
// (reduced, positive denominator) by every constructor-like helper here;
// raw mpq_class construction from a num/den pair does NOT canonicalize,
// so all such construction must go through make_rational.
using ExactInt = mpz_class;
using ExactRational = mpq_class;

ExactRational make_rational(const ExactInt& num, const ExactInt& den);
ExactRational parse_rational(const std::string& text);  // "p/q" or "n"
std::string to_string(const ExactInt& v);
std::string to_string(const ExactRational& v);  // "p/q", or "p" when q == 1

// Exact integer square root; throws std::domain_error unless n is a
// perfect square (n >= 0).
ExactInt isqrt_exact(const ExactInt& n);

// Numerator of a rational known to be integral; throws otherwise.
ExactInt to_integer(const ExactRational& v);

ExactInt factorial(std::uint32_t n);

// Value (2m-1)!! = (2m-1)(2m-3)...1; the argument is m, with m >= 1.
ExactInt double_factorial_odd(std::uint32_t m);

// Rising factorial (a)_k = a(a+1)...(a+k-1), (a)_0 = 1.
ExactRational pochhammer(const ExactRational& a, std::uint32_t k);

// h(n) = 0! 1! ... (n-1)!, h(0) = 1.
ExactInt hyperfactorial(std::uint32_t n);

// <a, a+k> = prod_{i=0}^{k} (a+i)^{min(i+1, k+1-i)} for k >= 0, and 1 for
// k < 0. Equivalently prod_{i=0}^{floor(k/2)} (a+i)_{k+1-2i}.
ExactRational angle_bracket(const ExactRational& a, std::int64_t k);

// Product of pairwise differences prod_{i<j} (s_j - s_i) over a strictly
// increasing list; empty and singleton lists give 1.
ExactInt delta(const std::vector<std::int64_t>& s);

}  // namespace tilings
