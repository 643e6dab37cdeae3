#include <weylbound/weights.hpp>

#include <doctest.h>

#include <random>

using namespace weylbound;

namespace {

Weight random_weight(int rank, std::mt19937& rng, long long lo, long long hi) {
  std::uniform_int_distribution<long long> dist(lo, hi);
  Weight w;
  for (int i = 0; i < rank; ++i) {
    w.coords.push_back(dist(rng));
  }
  return w;
}

} // namespace

TEST_CASE("primality plumbing") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(31));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4));
  CHECK_FALSE(is_prime(91)); // 7 * 13
  CHECK(smallest_prime_at_least(6) == 7);
  CHECK(smallest_prime_at_least(2) == 2);
  CHECK(smallest_prime_at_least(31) == 31);
  CHECK_THROWS_AS(PrimeContext(4), std::invalid_argument);
  CHECK_THROWS_AS(PrimeContext(1), std::invalid_argument);
  CHECK(PrimeContext(7).p == 7);
}

TEST_CASE("dominance and restrictedness") {
  const PrimeContext p3(3);
  CHECK(is_dominant(Weight{{0, 0}}));
  CHECK_FALSE(is_dominant(Weight{{1, -1}}));
  CHECK(is_dominant(Weight{{1, 1}}));

  CHECK(is_restricted(Weight{{2, 2}}, p3));      // (p-1)rho for A2 at p=3
  CHECK_FALSE(is_restricted(Weight{{3, 0}}, p3)); // (p, 0)
  CHECK(is_restricted(Weight{{0, 0}}, p3));
  CHECK(is_restricted(Weight{{8, 8}}, p3, 2));    // X_2: coords <= p^2 - 1
  CHECK_FALSE(is_restricted(Weight{{9, 0}}, p3, 2));
  CHECK_THROWS_AS(is_restricted(Weight{{0}}, p3, 0), std::invalid_argument);
}

TEST_CASE("dot reflection examples and involution") {
  const RootSystem a1 = RootSystem::build({Family::A, 1});
  const RootSystem a2 = RootSystem::build({Family::A, 2});
  const PrimeContext p2(2);

  CHECK(dot_reflect(a1, Weight{{2}}, 0, 1, p2) == Weight{{0}});
  // wall fixed point: <lam+rho, alpha^vee> = mp
  CHECK(dot_reflect(a1, Weight{{3}}, 0, 2, p2) == Weight{{3}});
  CHECK(dot_reflect(a2, Weight{{1, 1}}, a2.alpha_zero_index(), 1, p2) == Weight{{-1, -1}});

  std::mt19937 rng(7);
  for (const char* name : {"A2", "B2", "G2", "A3"}) {
    const RootSystem rs = RootSystem::build(RootSystemSpec::parse(name));
    for (int trial = 0; trial < 100; ++trial) {
      const Weight lam = random_weight(rs.rank(), rng, -8, 8);
      const auto idx = static_cast<std::size_t>(rng() % rs.num_positive_roots());
      const long long m = static_cast<long long>(rng() % 7) - 3;
      const Weight once = dot_reflect(rs, lam, idx, m, p2);
      CHECK(dot_reflect(rs, once, idx, m, p2) == lam);
    }
  }
}

TEST_CASE("alcove depth: examples and the two wall conventions") {
  const RootSystem a1 = RootSystem::build({Family::A, 1});
  const RootSystem a2 = RootSystem::build({Family::A, 2});
  const PrimeContext p2(2);
  const PrimeContext p3(3);
  const PrimeContext p5(5);

  CHECK(alcove_depth(a2, Weight{{1, 1}}, p3) == 1);
  CHECK(alcove_depth(a1, Weight{{1}}, p2) == 0);
  CHECK(alcove_depth(a1, Weight{{1}}, p2, DepthConvention::floor_sum) == 1);
  // everything in the closure of the lowest alcove has depth zero
  CHECK(alcove_depth(a2, Weight{{1, 1}}, p5) == 0);
  CHECK(alcove_depth(a2, Weight{{0, 0}}, p2) == 0);

  CHECK_THROWS_AS(alcove_depth(a2, Weight{{1, -1}}, p2), std::invalid_argument);
  CHECK_THROWS_AS(alcove_depth(a2, Weight{{1}}, p2), std::invalid_argument);
}

TEST_CASE("restricted depth maximum: closed values and p-independence") {
  struct Case {
    const char* name;
    long long value;
  };
  const Case cases[] = {{"A1", 0},  {"A2", 1},  {"A4", 10}, {"B2", 3},
                        {"C3", 13}, {"D4", 16}, {"D5", 40}, {"G2", 10},
                        {"F4", 86}, {"E6", 120}};
  for (const Case& c : cases) {
    CAPTURE(c.name);
    const RootSystem rs = RootSystem::build(RootSystemSpec::parse(c.name));
    long long p = smallest_prime_at_least(rs.coxeter_number());
    CHECK(restricted_max_depth(rs, PrimeContext(p)) == c.value);
    // independent of the prime once p >= h
    for (int extra = 0; extra < 2; ++extra) {
      p = smallest_prime_at_least(p + 1);
      CHECK(restricted_max_depth(rs, PrimeContext(p)) == c.value);
    }
  }
  const RootSystem g2 = RootSystem::build({Family::G, 2});
  CHECK_THROWS_AS(restricted_max_depth(g2, PrimeContext(5)), std::invalid_argument);
}

TEST_CASE("restricted depths stay under the cubic envelope") {
  // d(lam) < floor(h^3/6) - 1 over the restricted region
  std::mt19937 rng(99);
  for (const char* name : {"A2", "A3", "B2", "B3", "G2", "D4"}) {
    const RootSystem rs = RootSystem::build(RootSystemSpec::parse(name));
    const long long h = rs.coxeter_number();
    for (long long p : {2LL, 3LL, 5LL, smallest_prime_at_least(h)}) {
      const PrimeContext ctx(p);
      std::uniform_int_distribution<long long> dist(0, p - 1);
      for (int trial = 0; trial < 200; ++trial) {
        Weight lam;
        for (int i = 0; i < rs.rank(); ++i) {
          lam.coords.push_back(dist(rng));
        }
        CHECK(alcove_depth(rs, lam, ctx) < h * h * h / 6 - 1);
      }
    }
  }
}

TEST_CASE("linkage representatives") {
  const RootSystem a1 = RootSystem::build({Family::A, 1});
  const PrimeContext p2(2);

  // weights already in the closed fundamental alcove are fixed
  CHECK(linkage_rep(a1, Weight{{0}}, p2) == Weight{{0}});
  CHECK(linkage_rep(a1, Weight{{1}}, p2) == Weight{{1}});
  CHECK(linkage_rep(a1, Weight{{2}}, p2) == Weight{{0}});
  CHECK(linked(a1, Weight{{2}}, Weight{{0}}, p2));
  CHECK_FALSE(linked(a1, Weight{{2}}, Weight{{1}}, p2));

  std::mt19937 rng(31337);
  for (const char* name : {"A2", "B2", "G2", "A3"}) {
    CAPTURE(name);
    const RootSystem rs = RootSystem::build(RootSystemSpec::parse(name));
    for (long long p : {2LL, 3LL, 7LL}) {
      const PrimeContext ctx(p);
      for (int trial = 0; trial < 60; ++trial) {
        const Weight lam = random_weight(rs.rank(), rng, -40, 40);
        const Weight rep = linkage_rep(rs, lam, ctx);
        // lands in the closed fundamental alcove
        for (std::size_t idx = 0; idx < rs.num_positive_roots(); ++idx) {
          const long long x = rs.pairing(rep, idx) + rs.positive_roots()[idx].dual_height();
          CHECK(x >= 0);
          CHECK(x <= p);
        }
        // idempotent, and constant along the dot orbit
        CHECK(linkage_rep(rs, rep, ctx) == rep);
        const auto idx = static_cast<std::size_t>(rng() % rs.num_positive_roots());
        const long long m = static_cast<long long>(rng() % 9) - 4;
        CHECK(linkage_rep(rs, dot_reflect(rs, lam, idx, m, ctx), ctx) == rep);
      }
    }
  }
}
