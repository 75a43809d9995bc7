#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cluster_quake {

// Exact arithmetic for identity checks on positive points and polynomial evaluation.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(long long num, long long den = 1) { return Rational(num, den); }

// Accepts "p", "p/q" or a finite decimal literal such as "-0.25".
Rational parse_rational(const std::string& text);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace cluster_quake
