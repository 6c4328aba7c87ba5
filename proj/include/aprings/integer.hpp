#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>

namespace aprings {

// Arbitrary precision signed integer. Zero has a single representation.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Integer& value) { return value.str(); }

// Throws Error(Parse) on anything that is not an optionally signed decimal.
Integer parse_integer(const std::string& text);

// Floor-style residue in [0, modulus).
Integer mod_floor(const Integer& value, const Integer& modulus);

std::size_t hash_integer(const Integer& value);

}  // namespace aprings
