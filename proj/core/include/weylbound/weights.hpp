#ifndef WEYLBOUND_WEIGHTS_HPP
#define WEYLBOUND_WEIGHTS_HPP

#include <weylbound/root_system.hpp>

namespace weylbound {

bool is_prime(long long n);
long long smallest_prime_at_least(long long n);

/// Characteristic of the ground field. Construction checks primality.
struct PrimeContext {
  long long p;

  explicit PrimeContext(long long prime);
};

bool is_dominant(const Weight& lam);

/// lam lies in X_r: 0 <= coords[i] <= p^r - 1 for all i. r = 1 is the
/// restricted region X_1.
bool is_restricted(const Weight& lam, const PrimeContext& ctx, int r = 1);

/// Affine dot reflection s_{alpha,mp} . lam = lam - (<lam+rho, alpha^vee> - mp) alpha,
/// alpha = positive_roots()[root_idx]. Involution for fixed (root_idx, m).
Weight dot_reflect(const RootSystem& rs, const Weight& lam, std::size_t root_idx,
                   long long m, const PrimeContext& ctx);

/// Which reading of the depth decomposition <lam+rho,alpha^vee> = n*p + d to
/// use: upper_closure takes 0 < d <= p (n = ceil(x/p) - 1), floor_sum takes
/// n = floor(x/p). The two differ exactly on weights lying on alcove walls.
enum class DepthConvention {
  upper_closure,
  floor_sum,
};

/// Alcove depth d(lam) = sum over positive roots of n_alpha. Requires lam
/// dominant.
long long alcove_depth(const RootSystem& rs, const Weight& lam, const PrimeContext& ctx,
                       DepthConvention convention = DepthConvention::upper_closure);

/// Maximum of alcove_depth over the restricted region X_1, computed at
/// (p-2)rho. Requires p >= coxeter_number(); the value is then independent
/// of p.
long long restricted_max_depth(const RootSystem& rs, const PrimeContext& ctx);

/// The unique representative of the affine dot orbit of lam inside the
/// closed fundamental alcove {mu : 0 <= <mu+rho, alpha^vee> <= p}.
Weight linkage_rep(const RootSystem& rs, const Weight& lam, const PrimeContext& ctx);

/// Same affine dot orbit?
bool linked(const RootSystem& rs, const Weight& a, const Weight& b, const PrimeContext& ctx);

} // namespace weylbound

#endif // WEYLBOUND_WEIGHTS_HPP
