#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qteich {

// Exact rational arithmetic for the symbolic layers. All coefficient
// arithmetic in the quantum-torus and Weyl modules is exact; no floating
// point is allowed there.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_str(const Rational& r) { return r.str(); }

}  // namespace qteich
