#ifndef WEYLBOUND_BOUNDS_HPP
#define WEYLBOUND_BOUNDS_HPP

#include <weylbound/jantzen.hpp>

#include <string>
#include <vector>

namespace weylbound {

/// Explicit H^1 bound for finite groups of Lie type with Coxeter number h in
/// defining characteristic p: max of the geometric restricted-length term
/// (base restricted_bound_base(h,p), floor(h^3/6)+1 summands) and the
/// finite-group term ceil((h^2 (3h-3)^3)^E / 2) with E = ceil(h^2/2).
Int h1_bound_defining(long long h, long long p);

/// Variant assuming the Lusztig character formula: max of (2h)^E and the
/// same finite-group term, E = ceil(h^2/2).
Int h1_bound_lcf(long long h);

/// Length bound (2h)^{|Phi+|} for Weyl modules with restricted head, valid
/// when the Lusztig character formula holds.
Int lcf_weyl_length_bound(const RootSystem& rs);

/// p^{r |Phi+|}: dimension of the r-th Steinberg module, hence a bound on
/// the dimension (and length) of any Weyl module with X_r head.
Int steinberg_dimension(const RootSystem& rs, long long p, long long r);

/// |W| + e for twisted rank e (cross-characteristic regime). Requires
/// 1 <= e <= rank.
Int cross_char_bound(const RootSystem& rs, long long twisted_rank);

enum class TwistClass {
  untwisted,
  graph_twisted,
  ree_suzuki,
};

std::string to_string(TwistClass t);
TwistClass twist_from_string(std::string_view s);

/// A finite group of Lie type G_sigma with sigma = tau . F^r, q = p^r.
/// ree_suzuki is only valid for the (B,2,p=2), (G,2,p=3), (F,4,p=2) shapes.
struct FiniteGroupQuery {
  RootSystemSpec rs;
  long long p = 2;
  long long r = 1;
  TwistClass twisted = TwistClass::untwisted;
  long long twisted_rank = 1;
};

enum class BoundCase {
  ree_suzuki,
  bnp_i,     // r >= 2 and p^{s-1}(p-1) > h, s = floor(r/2)
  bnp_ii,    // p >= 3h-3
  small_q_a, // r = 1, q < 3h-3
  small_q_b, // p^{s-1}(p-1) <= h
  blanket,   // A_1 queries: the case analysis above excludes rank one
};

std::string to_string(BoundCase c);

struct BoundReport {
  FiniteGroupQuery query;
  BoundCase case_tag = BoundCase::blanket;
  Int bound;
  std::string formula;
  Int blanket; // max(b_alg, ceil((h^2 (3h-3)^3)^{|Phi+|} / 2)), always reported
};

/// Case analysis for dim H^1(G_sigma, L): b_alg is a caller-supplied bound
/// for the ambient algebraic group (e.g. restricted_length_bound or
/// lcf_weyl_length_bound). Case precedence: ree_suzuki, then the A_1 flag,
/// then bnp_ii, bnp_i, small_q_a/b.
BoundReport finite_group_bound(const FiniteGroupQuery& query, const Int& b_alg);

/// One growth-table row: exact bound logs and their ratios against the
/// l^3 log l and l^2 log l envelopes.
struct GrowthRow {
  Family family = Family::A;
  int rank = 0;
  long long coxeter = 0;
  double log2_bound_a = 0.0; // log2 h1_bound_defining(h, 2)
  double log2_bound_c = 0.0; // log2 h1_bound_lcf(h)
  double ratio_a = 0.0;      // log2_bound_a / (l^3 log2 l)
  double ratio_c = 0.0;      // log2_bound_c / (l^2 log2 l)
};

/// Rows for the A/B/C/D families at ranks 2..l_max (D from 4) plus the
/// exceptional types, in deterministic (family, rank) order. Requires
/// l_max >= 2.
std::vector<GrowthRow> growth_table(int l_max);

} // namespace weylbound

#endif // WEYLBOUND_BOUNDS_HPP
