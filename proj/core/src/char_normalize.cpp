#include <weylbound/char_normalize.hpp>

#include <weylbound/weights.hpp>

#include <stdexcept>

namespace weylbound {

NormalizedChar normalize_char(const RootSystem& rs, const Weight& nu) {
  rs.check_weight(nu);
  const int n = rs.rank();
  const auto& cartan = rs.cartan();
  Weight cur = nu;
  int sign = 1;
  // Coordinates are pairings with the simple coroots, so <nu+rho, alpha_i^vee>
  // is just coords[i] + 1.
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < n; ++i) {
      const long long x = cur.coords[i] + 1;
      if (x == 0) {
        return NormalizedChar::zero_char();
      }
      if (x < 0) {
        // finite dot reflection s_i . nu = nu - x * alpha_i
        for (int k = 0; k < n; ++k) {
          cur.coords[k] -= x * cartan[k][i];
        }
        sign = -sign;
        moved = true;
        break;
      }
    }
  }
  return NormalizedChar::term(sign, std::move(cur));
}

Int weyl_dim(const RootSystem& rs, const Weight& lam) {
  rs.check_weight(lam);
  if (!is_dominant(lam)) {
    throw std::invalid_argument("weyl_dim: weight must be dominant");
  }
  Int numerator = 1;
  Int denominator = 1;
  for (std::size_t idx = 0; idx < rs.num_positive_roots(); ++idx) {
    const long long dual_height = rs.positive_roots()[idx].dual_height();
    numerator *= rs.pairing(lam, idx) + dual_height;
    denominator *= dual_height;
  }
  if (numerator % denominator != 0) {
    throw std::logic_error("weyl_dim: non-integral quotient");
  }
  return numerator / denominator;
}

} // namespace weylbound
