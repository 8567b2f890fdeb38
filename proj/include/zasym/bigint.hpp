#ifndef ZASYM_BIGINT_HPP
#define ZASYM_BIGINT_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace zasym {

/* Exact arbitrary-precision integer. Every count, coefficient and
 * determinant in the library is computed in this type; there is no
 * floating-point path anywhere. */
using bigint = boost::multiprecision::cpp_int;

inline std::string to_decimal(const bigint& v) { return v.str(); }

} // namespace zasym

#endif
