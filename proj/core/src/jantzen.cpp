#include <weylbound/jantzen.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace weylbound {

namespace {

// floor(a * log_p(q)) for a >= 1, q >= 1, p >= 2; exact.
long long floor_scaled_log(long long a, long long q, long long p) {
  if (q == 1) {
    return 0;
  }
  // q a perfect power of p: the log is an integer.
  {
    long long e = 0;
    long long power = 1;
    while (power < q && power <= q / p) {
      power *= p;
      ++e;
    }
    if (power == q) {
      return a * e;
    }
  }
  const long double t = static_cast<long double>(a) *
                        (std::log(static_cast<long double>(q)) /
                         std::log(static_cast<long double>(p)));
  long long k = static_cast<long long>(std::floor(t));
  const long double frac = t - static_cast<long double>(k);
  if (frac < 1e-9L || frac > 1.0L - 1e-9L) {
    // Near an integer: settle exactly. a*log_p(q) >= c iff q^a >= p^c.
    const long long candidate = frac < 1e-9L ? k : k + 1;
    const Int lhs = int_pow(Int(q), a);
    const Int rhs = int_pow(Int(p), candidate);
    k = lhs >= rhs ? candidate : candidate - 1;
  }
  return k;
}

} // namespace

int p_valuation(long long x, long long p) {
  if (x < 1) {
    throw std::invalid_argument("p_valuation: argument must be >= 1");
  }
  int e = 0;
  while (x % p == 0) {
    x /= p;
    ++e;
  }
  return e;
}

CharCombo jantzen_sum(const RootSystem& rs, const Weight& lam, const PrimeContext& ctx) {
  CharCombo combo;
  visit_jantzen_terms(rs, lam, ctx,
                      [&](std::size_t, long long, int val, const NormalizedChar& nc) {
                        if (nc.is_zero()) {
                          return;
                        }
                        auto it = combo.terms.find(nc.mu);
                        if (it == combo.terms.end()) {
                          it = combo.terms.emplace(nc.mu, 0).first;
                        }
                        it->second += static_cast<long long>(nc.sign) * val;
                        if (it->second == 0) {
                          combo.terms.erase(it);
                        }
                      });
  return combo;
}

JantzenExpansion jantzen_expand(const RootSystem& rs, const Weight& lam,
                                const PrimeContext& ctx) {
  JantzenExpansion out;
  visit_jantzen_terms(rs, lam, ctx,
                      [&](std::size_t, long long, int val, const NormalizedChar& nc) {
                        ++out.raw_term_count;
                        out.max_valuation = std::max(out.max_valuation, val);
                        if (nc.is_zero()) {
                          return;
                        }
                        auto it = out.collected.terms.find(nc.mu);
                        if (it == out.collected.terms.end()) {
                          it = out.collected.terms.emplace(nc.mu, 0).first;
                        }
                        it->second += static_cast<long long>(nc.sign) * val;
                        if (it->second == 0) {
                          out.collected.terms.erase(it);
                        }
                      });
  return out;
}

const Int* LengthCache::find(const Key& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

void LengthCache::put(Key key, Int value) {
  entries_.insert_or_assign(std::move(key), std::move(value));
}

Int length_bound_exact(const RootSystem& rs, const Weight& lam, const PrimeContext& ctx,
                       LengthCache& cache) {
  LengthCache::Key key{rs.spec().family, rs.rank(), ctx.p, lam};
  if (const Int* hit = cache.find(key)) {
    return *hit;
  }
  // Signed collected sum: for non-restricted weights individual collected
  // coefficients can be negative (the layer characters stay nonnegative in
  // the simple basis, not the Weyl basis).
  Int bound = 1;
  for (const auto& [mu, coeff] : jantzen_sum(rs, lam, ctx).terms) {
    bound += coeff * length_bound_exact(rs, mu, ctx, cache);
  }
  cache.put(std::move(key), bound);
  return bound;
}

Int length_bound_closed(long long d, long long b, long long p) {
  if (d < 0) {
    throw std::invalid_argument("length_bound_closed: d must be >= 0");
  }
  if (d == 0) {
    return 1; // the log regime is never consulted
  }
  if (b < 2) {
    throw std::invalid_argument("length_bound_closed: b must be >= 2");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("length_bound_closed: p must be prime");
  }
  const Int z = Int(d) * floor_log(p, Int(b - 1));
  return geometric_sum(z, d);
}

long long restricted_bound_base(long long h, long long p) {
  if (h < 2) {
    throw std::invalid_argument("restricted_bound_base: h must be >= 2");
  }
  if (h > 100000) {
    throw std::invalid_argument("restricted_bound_base: h out of supported range");
  }
  const long long cube = h * h * h;
  if (p >= h) {
    return cube / 6;
  }
  // floor(h^3 (1 + log_p(h-1)) / 6) == floor((h^3 + floor(h^3 log_p(h-1))) / 6)
  return (cube + floor_scaled_log(cube, h - 1, p)) / 6;
}

RestrictedLengthBound restricted_length_bound(const RootSystem& rs, const PrimeContext& ctx) {
  const long long h = rs.coxeter_number();
  const long long depth_budget = h * h * h / 6;
  const Int z = restricted_bound_base(h, ctx.p);
  RestrictedLengthBound out{geometric_sum(z, depth_budget), std::nullopt};
  if (ctx.p >= h) {
    out.sharp = geometric_sum(z, restricted_max_depth(rs, ctx));
  }
  return out;
}

} // namespace weylbound
