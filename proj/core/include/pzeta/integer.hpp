#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace pzeta {

/// Exact signed integer of unbounded width. Every coefficient, Möbius value
/// and multiplicity in this library is one of these; fixed-width integers
/// never appear in a public contract.
using Integer = boost::multiprecision::cpp_int;

/// Index of a Dirichlet coefficient (a subgroup index n in a_n / c_n).
using Index = std::int64_t;

/// Strict decimal parse: optional leading '-', digits only. Throws Error.
Integer parse_integer(const std::string& text);

std::string to_decimal(const Integer& value);

Integer factorial(std::int64_t n);

bool is_prime(std::int64_t n);

/// Distinct prime divisors in ascending order; empty for n = 1.
std::vector<std::int64_t> prime_factors(std::int64_t n);

}  // namespace pzeta
