#include <weylbound/root_system.hpp>

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace weylbound {

namespace {

using Coords = std::vector<long long>;

long long gcd_ll(long long a, long long b) {
  return std::gcd(a, b);
}

// Positive integers d with d[i]*C[i][j] == d[j]*C[j][i]; found by propagating
// the ratios over the (connected) Dynkin diagram and clearing denominators.
std::vector<long long> symmetrizer(const std::vector<Coords>& cartan) {
  const std::size_t n = cartan.size();
  std::vector<std::pair<long long, long long>> frac(n, {0, 1}); // num/den; num==0 => unset
  frac[0] = {1, 1};
  std::vector<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t i = queue.back();
    queue.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || cartan[i][j] == 0 || frac[j].first != 0) {
        continue;
      }
      // d_j / d_i = C[i][j] / C[j][i]
      long long num = frac[i].first * cartan[i][j];
      long long den = frac[i].second * cartan[j][i];
      if (den < 0) {
        num = -num;
        den = -den;
      }
      const long long g = gcd_ll(std::abs(num), den);
      frac[j] = {num / g, den / g};
      queue.push_back(j);
    }
  }
  long long den_lcm = 1;
  for (const auto& [num, den] : frac) {
    if (num == 0) {
      throw std::logic_error("symmetrizer: Dynkin diagram not connected");
    }
    den_lcm = den_lcm / gcd_ll(den_lcm, den) * den;
  }
  std::vector<long long> d(n);
  long long overall = 0;
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = frac[i].first * (den_lcm / frac[i].second);
    overall = gcd_ll(overall, d[i]);
  }
  for (auto& v : d) {
    v /= overall;
  }
  return d;
}

long long height_of(const Coords& c) {
  return std::accumulate(c.begin(), c.end(), 0LL);
}

} // namespace

Family family_from_char(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default:
      throw std::invalid_argument(std::string("unknown family letter '") + c + "'");
  }
}

char family_to_char(Family f) {
  return static_cast<char>(f);
}

void RootSystemSpec::validate() const {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) {
    throw std::invalid_argument("invalid rank " + std::to_string(rank) +
                                " for family " + std::string(1, family_to_char(family)));
  }
}

std::string RootSystemSpec::name() const {
  return std::string(1, family_to_char(family)) + std::to_string(rank);
}

RootSystemSpec RootSystemSpec::parse(std::string_view text) {
  if (text.size() < 2) {
    throw std::invalid_argument("expected <family><rank>, got '" + std::string(text) + "'");
  }
  RootSystemSpec spec;
  spec.family = family_from_char(text[0]);
  int rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("expected <family><rank>, got '" + std::string(text) + "'");
    }
    rank = rank * 10 + (text[i] - '0');
    if (rank > 1000) {
      throw std::invalid_argument("rank out of range in '" + std::string(text) + "'");
    }
  }
  spec.rank = rank;
  spec.validate();
  return spec;
}

long long Root::height() const {
  return height_of(root_coords);
}

long long Root::dual_height() const {
  return height_of(coroot_coords);
}

std::vector<std::vector<long long>> cartan_matrix(const RootSystemSpec& spec) {
  spec.validate();
  const int n = spec.rank;
  std::vector<Coords> c(n, Coords(n, 0));
  for (int i = 0; i < n; ++i) {
    c[i][i] = 2;
  }
  auto bond = [&](int i, int j) { c[i][j] = -1; c[j][i] = -1; };
  switch (spec.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      // alpha_{n-1} short: <alpha_{n-2}, alpha_{n-1}^vee> = -2
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      c[n - 1][n - 2] = -2;
      break;
    case Family::C:
      // transpose of B: alpha_{n-1} long
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      c[n - 2][n - 1] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case Family::E:
      // Bourbaki numbering: chain 1-3-4-5-..., node 2 attached to 4
      bond(0, 2);
      bond(1, 3);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Family::F:
      bond(0, 1);
      bond(1, 2);
      bond(2, 3);
      c[2][1] = -2;
      break;
    case Family::G:
      c[0][1] = -3;
      c[1][0] = -1;
      break;
  }
  return c;
}

RootSystem RootSystem::build(const RootSystemSpec& spec) {
  spec.validate();
  const int n = spec.rank;
  RootSystem rs;
  rs.spec_ = spec;
  rs.cartan_ = cartan_matrix(spec);
  const auto& cartan = rs.cartan_;

  auto pairing_with_simple = [&](const Coords& root, int i) {
    long long v = 0;
    for (int j = 0; j < n; ++j) {
      v += cartan[i][j] * root[j];
    }
    return v;
  };

  // Closure generation by height: alpha + alpha_i is a root iff the
  // alpha_i-string through alpha still ascends (q = r - <alpha,alpha_i^vee> > 0).
  std::set<Coords> seen;
  std::vector<Coords> frontier;
  for (int i = 0; i < n; ++i) {
    Coords simple(n, 0);
    simple[i] = 1;
    seen.insert(simple);
    frontier.push_back(std::move(simple));
  }
  while (!frontier.empty()) {
    std::vector<Coords> next;
    for (const Coords& root : frontier) {
      for (int i = 0; i < n; ++i) {
        long long down_steps = 0;
        Coords walk = root;
        while (true) {
          walk[i] -= 1;
          if (walk[i] < 0 || seen.find(walk) == seen.end()) {
            break;
          }
          ++down_steps;
        }
        if (down_steps - pairing_with_simple(root, i) > 0) {
          Coords up = root;
          up[i] += 1;
          if (seen.insert(up).second) {
            next.push_back(std::move(up));
          }
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<Coords> all(seen.begin(), seen.end());
  std::sort(all.begin(), all.end(), [](const Coords& a, const Coords& b) {
    const long long ha = height_of(a);
    const long long hb = height_of(b);
    return ha != hb ? ha < hb : a < b;
  });

  const std::vector<long long> d = symmetrizer(cartan);
  rs.pos_roots_.reserve(all.size());
  for (Coords& c : all) {
    Root root;
    root.weight_coords.assign(n, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        root.weight_coords[i] += cartan[i][j] * c[j];
      }
    }
    long long norm = 0; // (beta, beta) with short roots of squared length 2
    for (int i = 0; i < n; ++i) {
      norm += c[i] * d[i] * root.weight_coords[i];
    }
    if (norm <= 0 || norm % 2 != 0) {
      throw std::logic_error("root generation produced a non-positive root norm");
    }
    const long long half_norm = norm / 2;
    root.coroot_coords.assign(n, 0);
    for (int i = 0; i < n; ++i) {
      const long long num = c[i] * d[i];
      if (num % half_norm != 0) {
        throw std::logic_error("coroot coordinates failed integrality");
      }
      root.coroot_coords[i] = num / half_norm;
    }
    root.root_coords = std::move(c);
    rs.pos_roots_.push_back(std::move(root));
  }

  rs.rho_.coords.assign(n, 1);

  long long max_dual = 0;
  for (std::size_t idx = 0; idx < rs.pos_roots_.size(); ++idx) {
    const long long dh = rs.pos_roots_[idx].dual_height();
    if (dh > max_dual) {
      max_dual = dh;
      rs.alpha_zero_ = idx;
    }
  }
  rs.coxeter_ = static_cast<int>(max_dual) + 1;

  // |W| = prod (m_i + 1): the exponents m_i are the conjugate partition of
  // the height distribution of the positive roots.
  std::map<long long, long long> by_height;
  for (const Root& root : rs.pos_roots_) {
    ++by_height[root.height()];
  }
  rs.weyl_order_ = 1;
  long long exponent_sum = 0;
  for (long long i = 1; i <= n; ++i) {
    long long exponent = 0;
    for (const auto& [height, count] : by_height) {
      if (count >= i) {
        exponent = std::max(exponent, height);
      }
    }
    rs.weyl_order_ *= exponent + 1;
    exponent_sum += exponent;
  }
  assert(exponent_sum == static_cast<long long>(rs.pos_roots_.size()));
  (void)exponent_sum;

  return rs;
}

long long RootSystem::pairing(const Weight& lam, std::size_t root_idx) const {
  check_weight(lam);
  if (root_idx >= pos_roots_.size()) {
    throw std::invalid_argument("root index out of range");
  }
  const auto& coroot = pos_roots_[root_idx].coroot_coords;
  long long v = 0;
  for (int i = 0; i < spec_.rank; ++i) {
    v += coroot[i] * lam.coords[i];
  }
  return v;
}

void RootSystem::check_weight(const Weight& lam) const {
  if (lam.size() != static_cast<std::size_t>(spec_.rank)) {
    throw std::invalid_argument("weight has " + std::to_string(lam.size()) +
                                " coordinates, expected " + std::to_string(spec_.rank));
  }
}

} // namespace weylbound
