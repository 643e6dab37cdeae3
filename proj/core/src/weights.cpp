#include <weylbound/weights.hpp>

#include <cassert>
#include <stdexcept>

namespace weylbound {

namespace {

// Floor division for possibly negative numerators.
long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) {
    --q;
  }
  return q;
}

#ifndef NDEBUG
// Number of affine walls m*p strictly separating the value x from the base
// interval (0, p); the loop variant of linkage_rep.
long long separating_walls(long long x, long long p) {
  if (x > p) {
    return (x + p - 1) / p - 1;
  }
  if (x < 0) {
    return (-x + p - 1) / p;
  }
  return 0;
}
#endif

} // namespace

bool is_prime(long long n) {
  if (n < 2) {
    return false;
  }
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

long long smallest_prime_at_least(long long n) {
  long long k = n < 2 ? 2 : n;
  while (!is_prime(k)) {
    ++k;
  }
  return k;
}

PrimeContext::PrimeContext(long long prime) : p(prime) {
  if (!is_prime(prime)) {
    throw std::invalid_argument(std::to_string(prime) + " is not prime");
  }
}

bool is_dominant(const Weight& lam) {
  for (long long c : lam.coords) {
    if (c < 0) {
      return false;
    }
  }
  return true;
}

bool is_restricted(const Weight& lam, const PrimeContext& ctx, int r) {
  if (r < 1) {
    throw std::invalid_argument("is_restricted: r must be >= 1");
  }
  long long bound = 1;
  for (int i = 0; i < r; ++i) {
    bound *= ctx.p;
  }
  for (long long c : lam.coords) {
    if (c < 0 || c > bound - 1) {
      return false;
    }
  }
  return true;
}

Weight dot_reflect(const RootSystem& rs, const Weight& lam, std::size_t root_idx,
                   long long m, const PrimeContext& ctx) {
  rs.check_weight(lam);
  const Root& beta = rs.positive_roots().at(root_idx);
  const long long x = rs.pairing(lam, root_idx) + beta.dual_height();
  const long long t = x - m * ctx.p;
  Weight out = lam;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out.coords[i] -= t * beta.weight_coords[i];
  }
  return out;
}

long long alcove_depth(const RootSystem& rs, const Weight& lam, const PrimeContext& ctx,
                       DepthConvention convention) {
  rs.check_weight(lam);
  if (!is_dominant(lam)) {
    throw std::invalid_argument("alcove_depth: weight must be dominant");
  }
  long long depth = 0;
  for (std::size_t idx = 0; idx < rs.num_positive_roots(); ++idx) {
    const long long x = rs.pairing(lam, idx) + rs.positive_roots()[idx].dual_height();
    depth += convention == DepthConvention::upper_closure ? (x - 1) / ctx.p : x / ctx.p;
  }
  return depth;
}

long long restricted_max_depth(const RootSystem& rs, const PrimeContext& ctx) {
  if (ctx.p < rs.coxeter_number()) {
    throw std::invalid_argument("restricted_max_depth requires p >= h = " +
                                std::to_string(rs.coxeter_number()));
  }
  Weight top;
  top.coords.assign(rs.rank(), ctx.p - 2);
  return alcove_depth(rs, top, ctx);
}

Weight linkage_rep(const RootSystem& rs, const Weight& lam, const PrimeContext& ctx) {
  rs.check_weight(lam);
  const long long p = ctx.p;
  Weight cur = lam;
#ifndef NDEBUG
  long long walls_before = -1;
#endif
  while (true) {
    long long worst = 0;
    long long worst_x = 0;
    std::size_t worst_idx = 0;
#ifndef NDEBUG
    long long walls = 0;
#endif
    for (std::size_t idx = 0; idx < rs.num_positive_roots(); ++idx) {
      const long long x = rs.pairing(cur, idx) + rs.positive_roots()[idx].dual_height();
      const long long viol = std::max(-x, x - p);
#ifndef NDEBUG
      walls += separating_walls(x, p);
#endif
      if (viol > worst) {
        worst = viol;
        worst_x = x;
        worst_idx = idx;
      }
    }
#ifndef NDEBUG
    assert(walls_before == -1 || walls < walls_before);
    walls_before = walls;
#endif
    if (worst == 0) {
      return cur;
    }
    // Reflect in the wall nearest to recentering x in [0, p]; always a wall
    // separating cur from the closed fundamental alcove.
    const long long m = floor_div(2 * worst_x + 3 * p, 4 * p);
    cur = dot_reflect(rs, cur, worst_idx, m, ctx);
  }
}

bool linked(const RootSystem& rs, const Weight& a, const Weight& b, const PrimeContext& ctx) {
  return linkage_rep(rs, a, ctx) == linkage_rep(rs, b, ctx);
}

} // namespace weylbound
