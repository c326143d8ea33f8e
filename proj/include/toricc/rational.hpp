#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace toricc {

// Exact arbitrary-precision integers and rationals. Everything in this
// project is computed over these; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

std::string int_to_string(const Int& v);
std::string rat_to_string(const Rat& v); // "p" or "p/q", q > 0

// Parse "-12" / "3/4". Throws input_error on anything else.
Int parse_int(const std::string& s);
Rat parse_rat(const std::string& s);

} // namespace toricc
