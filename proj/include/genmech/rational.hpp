#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "genmech/error.hpp"

namespace genmech {

// Exact arithmetic everywhere a value is rational by construction
// (probabilities, Kraft sums, logical entropy, selection weights).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// "p/q" for non-integers, plain integer string otherwise.
std::string format_rational(const Rational& r);

// Accepts "p/q", "p", and optional leading '-'. Throws BadRational.
Rational parse_rational(const std::string& text);

// k^(-e) as an exact rational; k >= 1.
Rational inverse_power(std::uint64_t k, std::uint64_t e);

double to_double(const Rational& r);

// Fixed 12-decimal rendering used for reals in report documents.
std::string format_real12(double x);

}  // namespace genmech
