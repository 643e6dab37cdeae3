#ifndef WEYLBOUND_SL2_ORACLE_HPP
#define WEYLBOUND_SL2_ORACLE_HPP

#include <map>

namespace weylbound {

// Brute-force ground truth for type A_1, kept independent of the root-system
// and Jantzen machinery on purpose: exact simple dimensions from the base-p
// digit factorization, and exact Weyl-module decompositions by triangular
// elimination of characters.

/// dim L(lambda) for SL_2 in characteristic p: product of (digit + 1) over
/// the base-p digits of lambda.
long long sl2_simple_dim(long long lambda, long long p);

/// Multiset of simple factors of the Weyl module V(lambda) for SL_2.
struct Sl2Decomposition {
  long long lambda = 0;
  long long p = 2;
  std::map<long long, long long> factors; // highest weight -> multiplicity

  long long length() const;
  long long dimension_check() const; // sum mult * dim L == lambda + 1
};

Sl2Decomposition sl2_weyl_factors(long long lambda, long long p);

/// Exact composition length of V(lambda) for SL_2.
long long sl2_exact_length(long long lambda, long long p);

} // namespace weylbound

#endif // WEYLBOUND_SL2_ORACLE_HPP
