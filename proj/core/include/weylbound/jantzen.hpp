#ifndef WEYLBOUND_JANTZEN_HPP
#define WEYLBOUND_JANTZEN_HPP

#include <weylbound/char_normalize.hpp>
#include <weylbound/weights.hpp>

#include <map>
#include <optional>

namespace weylbound {

/// Largest e with p^e dividing x. Requires x >= 1.
int p_valuation(long long x, long long p);

/// Signed combination of dominant Weyl characters: the collected right-hand
/// side of the Jantzen sum formula. Keys dominant, zero coefficients pruned.
struct CharCombo {
  std::map<Weight, long long> terms;

  friend bool operator==(const CharCombo&, const CharCombo&) = default;
};

/// Enumerate the raw terms of the Jantzen sum at lam: one call per pair
/// (alpha in Phi+, m >= 1 with 0 < mp < <lam+rho,alpha^vee>), as
/// f(root_idx, m, valuation, normalized_target). Requires lam dominant.
template <class F>
void visit_jantzen_terms(const RootSystem& rs, const Weight& lam, const PrimeContext& ctx,
                         F&& f) {
  rs.check_weight(lam);
  if (!is_dominant(lam)) {
    throw std::invalid_argument("visit_jantzen_terms: weight must be dominant");
  }
  const long long p = ctx.p;
  for (std::size_t idx = 0; idx < rs.num_positive_roots(); ++idx) {
    const long long x = rs.pairing(lam, idx) + rs.positive_roots()[idx].dual_height();
    for (long long m = 1; m * p < x; ++m) {
      const int val = p_valuation(m * p, p);
      f(idx, m, val, normalize_char(rs, dot_reflect(rs, lam, idx, m, ctx)));
    }
  }
}

/// Collected Jantzen sum: the raw terms of visit_jantzen_terms accumulated
/// into a CharCombo (zero targets dropped, zero totals pruned).
CharCombo jantzen_sum(const RootSystem& rs, const Weight& lam, const PrimeContext& ctx);

/// jantzen_sum plus the enumeration statistics needed by the bound proofs:
/// raw term count (== alcove_depth(lam)) and the largest p-valuation seen.
struct JantzenExpansion {
  CharCombo collected;
  long long raw_term_count = 0;
  int max_valuation = 0;
};

JantzenExpansion jantzen_expand(const RootSystem& rs, const Weight& lam,
                                const PrimeContext& ctx);

/// Memo table for length_bound_exact. Keys carry the root system so one
/// cache (and one persistent cache file) serves all types. Single-writer;
/// recomputation is deterministic and idempotent.
class LengthCache {
 public:
  struct Key {
    Family family = Family::A;
    int rank = 0;
    long long p = 0;
    Weight lam;

    friend auto operator<=>(const Key&, const Key&) = default;
  };

  const Int* find(const Key& key) const;
  void put(Key key, Int value);
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  void clear() { entries_.clear(); }
  const std::map<Key, Int>& entries() const { return entries_; }

 private:
  std::map<Key, Int> entries_;
};

/// Recursive upper bound on the composition length of the Weyl module V(lam):
/// 1 + sum of collected coefficients times the bound at each surviving target.
/// Terminates because alcove depth strictly decreases along the recursion;
/// memoized in cache. Sharper than length_bound_closed.
Int length_bound_exact(const RootSystem& rs, const Weight& lam, const PrimeContext& ctx,
                       LengthCache& cache);

/// Closed-form bound sum_{i=0}^{d} z^i with z = d * floor(log_p(b-1)).
/// d = 0 returns 1 for any b; otherwise b >= 2 is required.
Int length_bound_closed(long long d, long long b, long long p);

/// Base z_p = floor(h^3/6 * (1 + log_p(h-1))) of the generic restricted
/// length bound; z_p = floor(h^3/6) when p >= h. Exact integer evaluation.
long long restricted_bound_base(long long h, long long p);

/// Bound on the length of any Weyl module with restricted highest weight:
/// geometric sum of restricted_bound_base over floor(h^3/6) + 1 terms.
/// When p >= h, `sharp` additionally replaces the exponent count by the
/// exact restricted maximum of the alcove depth.
struct RestrictedLengthBound {
  Int coarse;
  std::optional<Int> sharp;
};

RestrictedLengthBound restricted_length_bound(const RootSystem& rs, const PrimeContext& ctx);

} // namespace weylbound

#endif // WEYLBOUND_JANTZEN_HPP
