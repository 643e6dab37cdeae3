#ifndef WEYLBOUND_CHAR_NORMALIZE_HPP
#define WEYLBOUND_CHAR_NORMALIZE_HPP

#include <weylbound/root_system.hpp>

namespace weylbound {

/// chi(nu) rewritten against a dominant weight: either zero (nu+rho singular)
/// or sign * chi(mu) with mu dominant and sign = det of the finite Weyl
/// element used.
struct NormalizedChar {
  enum class Kind { zero, signed_term };

  Kind kind = Kind::zero;
  int sign = 0;   // +1 or -1 when signed_term
  Weight mu;      // dominant when signed_term

  bool is_zero() const { return kind == Kind::zero; }

  static NormalizedChar zero_char() { return {}; }
  static NormalizedChar term(int sign, Weight mu) {
    return {Kind::signed_term, sign, std::move(mu)};
  }
};

/// Rewrite chi(nu) as 0 or +-chi(mu), mu dominant, by repeated finite dot
/// reflections (lowest simple-root index first each pass).
NormalizedChar normalize_char(const RootSystem& rs, const Weight& nu);

/// Exact Weyl dimension prod <lam+rho,alpha^vee> / prod <rho,alpha^vee>.
/// Requires lam dominant; all arithmetic is arbitrary precision.
Int weyl_dim(const RootSystem& rs, const Weight& lam);

} // namespace weylbound

#endif // WEYLBOUND_CHAR_NORMALIZE_HPP
