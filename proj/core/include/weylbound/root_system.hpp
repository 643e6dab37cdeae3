#ifndef WEYLBOUND_ROOT_SYSTEM_HPP
#define WEYLBOUND_ROOT_SYSTEM_HPP

#include <weylbound/bigint.hpp>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace weylbound {

enum class Family : char {
  A = 'A',
  B = 'B',
  C = 'C',
  D = 'D',
  E = 'E',
  F = 'F',
  G = 'G',
};

Family family_from_char(char c);
char family_to_char(Family f);

/// One simple type A_n .. G_2. Admissible ranks: A n>=1, B n>=2, C n>=2,
/// D n>=4, E n in {6,7,8}, F n=4, G n=2.
struct RootSystemSpec {
  Family family = Family::A;
  int rank = 1;

  void validate() const; // throws std::invalid_argument on a bad rank
  std::string name() const;
  static RootSystemSpec parse(std::string_view text); // "G2", "E8", ...

  friend auto operator<=>(const RootSystemSpec&, const RootSystemSpec&) = default;
};

/// Integer vector in fundamental-weight coordinates: coords[i] = <lam, alpha_i^vee>.
/// Weights may be non-dominant; only the length is constrained (== rank).
struct Weight {
  std::vector<long long> coords;

  std::size_t size() const { return coords.size(); }
  long long operator[](std::size_t i) const { return coords[i]; }

  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// One positive root carried in three simultaneous integer coordinate
/// systems (simple roots / simple coroots / fundamental weights), so that
/// pairings and reflections are plain dot products.
struct Root {
  std::vector<long long> root_coords;
  std::vector<long long> coroot_coords;
  std::vector<long long> weight_coords;

  long long height() const;      // sum of root_coords
  long long dual_height() const; // sum of coroot_coords == <rho, beta^vee>
};

/// Immutable root datum for one simple type: Cartan matrix, positive roots,
/// rho, Coxeter number, Weyl group order. Safe to share across threads after
/// build(); every operation is const and pure.
class RootSystem {
 public:
  static RootSystem build(const RootSystemSpec& spec);

  const RootSystemSpec& spec() const { return spec_; }
  int rank() const { return spec_.rank; }

  /// cartan()[i][j] = <alpha_j, alpha_i^vee>.
  const std::vector<std::vector<long long>>& cartan() const { return cartan_; }

  /// Sorted by height, then lexicographically by root_coords; deterministic
  /// across runs.
  const std::vector<Root>& positive_roots() const { return pos_roots_; }
  std::size_t num_positive_roots() const { return pos_roots_.size(); }

  const Weight& rho() const { return rho_; }
  int coxeter_number() const { return coxeter_; }

  /// Index into positive_roots() of the root attaining max <rho, beta^vee>
  /// (lowest index on ties).
  std::size_t alpha_zero_index() const { return alpha_zero_; }

  const Int& weyl_order() const { return weyl_order_; }

  /// <lam, beta^vee> for beta = positive_roots()[root_idx].
  long long pairing(const Weight& lam, std::size_t root_idx) const;

  /// Throws std::invalid_argument unless lam.size() == rank.
  void check_weight(const Weight& lam) const;

 private:
  RootSystem() = default;

  RootSystemSpec spec_{};
  std::vector<std::vector<long long>> cartan_;
  std::vector<Root> pos_roots_;
  Weight rho_;
  int coxeter_ = 0;
  std::size_t alpha_zero_ = 0;
  Int weyl_order_ = 0;
};

/// Cartan matrix with the convention C[i][j] = <alpha_j, alpha_i^vee>
/// (Bourbaki numbering; B and C are transposes of one another).
std::vector<std::vector<long long>> cartan_matrix(const RootSystemSpec& spec);

} // namespace weylbound

#endif // WEYLBOUND_ROOT_SYSTEM_HPP
