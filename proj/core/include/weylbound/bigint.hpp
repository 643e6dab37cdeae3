#ifndef WEYLBOUND_BIGINT_HPP
#define WEYLBOUND_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace weylbound {

/// Exact arbitrary-precision integer used throughout; no floating point
/// enters any bound computation.
using Int = boost::multiprecision::cpp_int;

/// ceil(x/2) for x >= 0.
Int ceil_half(const Int& x);

/// base^exp for exp >= 0.
Int int_pow(const Int& base, long long exp);

/// Largest e >= 0 with p^e <= x. Requires p >= 2 and x >= 1.
long long floor_log(long long p, const Int& x);

/// sum_{i=0}^{top} z^i for z >= 0, top >= 0. Evaluated as a closed-form
/// geometric sum; the degenerate bases z=0 and z=1 return 1 and top+1.
Int geometric_sum(const Int& z, long long top);

/// log2 of a positive integer, accurate to well beyond 6 significant digits.
double log2_approx(const Int& x);

} // namespace weylbound

#endif // WEYLBOUND_BIGINT_HPP
