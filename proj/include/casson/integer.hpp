#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace casson {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals, no floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Integer& x) { return x.sign(); }
inline int sign_of(const Rational& x) { return x.sign(); }

// Nonnegative residue mod 2 (well-defined for negative inputs).
inline int mod2(const Integer& x) { return (x % 2) == 0 ? 0 : 1; }
inline int mod2(long long x) { return static_cast<int>(((x % 2) + 2) % 2); }

}  // namespace casson
