#include <weylbound/bounds.hpp>

#include <doctest.h>

#include <cmath>

using namespace weylbound;

namespace {

Int blanket_term(long long h, long long exponent) {
  return ceil_half(int_pow(Int(h) * h * int_pow(Int(3 * h - 3), 3), exponent));
}

} // namespace

TEST_CASE("defining-characteristic bound") {
  CHECK(h1_bound_defining(2, 2) == 5832); // max(2, ceil(108^2 / 2))
  CHECK(h1_bound_defining(2, 7) == 5832);

  // at h = 6 the finite-group term still dominates the geometric term
  const Int at_g2 = h1_bound_defining(6, 2);
  CHECK(at_g2 == blanket_term(6, 18));
  CHECK(at_g2 > geometric_sum(restricted_bound_base(6, 2), 36));

  // strictly increasing over the sweep range
  Int prev = h1_bound_defining(2, 2);
  for (long long h = 3; h <= 30; ++h) {
    const Int cur = h1_bound_defining(h, 2);
    CHECK(cur > prev);
    prev = cur;
  }

  CHECK_THROWS_AS(h1_bound_defining(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(h1_bound_defining(4, 4), std::invalid_argument);
}

TEST_CASE("bound under the Lusztig character formula") {
  CHECK(h1_bound_lcf(2) == 5832); // max(16, 5832)
  CHECK(h1_bound_lcf(6) == blanket_term(6, 18));
  CHECK_THROWS_AS(h1_bound_lcf(1), std::invalid_argument);

  // (2h)^{ceil(h^2/2)} <= h^{h^2} across the sweep
  for (long long h = 2; h <= 60; ++h) {
    CHECK(int_pow(Int(2 * h), (h * h + 1) / 2) <= int_pow(Int(h), h * h));
  }
}

TEST_CASE("length and dimension bounds") {
  const RootSystem a1 = RootSystem::build({Family::A, 1});
  const RootSystem a2 = RootSystem::build({Family::A, 2});
  const RootSystem b2 = RootSystem::build({Family::B, 2});
  const RootSystem g2 = RootSystem::build({Family::G, 2});

  CHECK(lcf_weyl_length_bound(a1) == 4);
  CHECK(lcf_weyl_length_bound(a2) == 216);
  CHECK(lcf_weyl_length_bound(g2) == int_pow(Int(12), 6));

  CHECK(steinberg_dimension(a1, 2, 1) == 2);
  CHECK(steinberg_dimension(a2, 2, 1) == 8);
  CHECK(steinberg_dimension(b2, 3, 2) == 6561);
  CHECK_THROWS_AS(steinberg_dimension(a1, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(steinberg_dimension(a1, 2, 0), std::invalid_argument);
}

TEST_CASE("cross-characteristic bound") {
  const RootSystem a1 = RootSystem::build({Family::A, 1});
  const RootSystem a2 = RootSystem::build({Family::A, 2});
  const RootSystem e6 = RootSystem::build({Family::E, 6});

  CHECK(cross_char_bound(a1, 1) == 3);
  CHECK(cross_char_bound(a2, 2) == 8);
  CHECK(cross_char_bound(e6, 6) == 51846);
  CHECK_THROWS_AS(cross_char_bound(a2, 0), std::invalid_argument);
  CHECK_THROWS_AS(cross_char_bound(a2, 3), std::invalid_argument);

  // log2(|W| + e) <= l log2(2l) + sum log2(i): |W| <= 2^l l!
  for (const char* name : {"A5", "B6", "D7", "E8"}) {
    const RootSystem rs = RootSystem::build(RootSystemSpec::parse(name));
    double envelope = 0.0;
    for (int i = 1; i <= rs.rank(); ++i) {
      envelope += std::log2(static_cast<double>(i));
    }
    envelope += rs.rank() * std::log2(2.0 * rs.rank());
    CHECK(log2_approx(cross_char_bound(rs, rs.rank())) <= envelope + 1e-9);
  }
}

TEST_CASE("finite-group case analysis") {
  const Int b_alg = 1000;

  SUBCASE("Ree and Suzuki shapes return 2") {
    for (const auto& [family, rank, p] :
         {std::tuple{Family::B, 2, 2LL}, {Family::G, 2, 3LL}, {Family::F, 4, 2LL}}) {
      const BoundReport report =
          finite_group_bound({{family, rank}, p, 1, TwistClass::ree_suzuki, 1}, b_alg);
      CHECK(report.case_tag == BoundCase::ree_suzuki);
      CHECK(report.bound == 2);
    }
    CHECK_THROWS_AS(
        finite_group_bound({{Family::B, 2}, 3, 1, TwistClass::ree_suzuki, 1}, b_alg),
        std::invalid_argument);
    CHECK_THROWS_AS(
        finite_group_bound({{Family::A, 3}, 2, 1, TwistClass::ree_suzuki, 1}, b_alg),
        std::invalid_argument);
  }

  SUBCASE("large p passes the algebraic bound through") {
    const BoundReport report =
        finite_group_bound({{Family::G, 2}, 37, 1, TwistClass::untwisted, 2}, b_alg);
    CHECK(report.case_tag == BoundCase::bnp_ii);
    CHECK(report.bound == b_alg);
  }

  SUBCASE("large twisted Frobenius power passes the algebraic bound through") {
    // p = 5, r = 2: s = 1, p^0 (p-1) = 4 > h = 3, while p < 3h-3 fails (ii)
    const BoundReport report =
        finite_group_bound({{Family::A, 2}, 5, 2, TwistClass::untwisted, 2}, b_alg);
    CHECK(report.case_tag == BoundCase::bnp_i);
    CHECK(report.bound == b_alg);
  }

  SUBCASE("small q with r = 1") {
    const BoundReport report =
        finite_group_bound({{Family::A, 2}, 2, 1, TwistClass::untwisted, 2}, b_alg);
    CHECK(report.case_tag == BoundCase::small_q_a);
    CHECK(report.bound == 4); // ceil(2^3 / 2)
  }

  SUBCASE("small q with r >= 2") {
    const BoundReport report =
        finite_group_bound({{Family::A, 2}, 2, 2, TwistClass::untwisted, 2}, b_alg);
    CHECK(report.case_tag == BoundCase::small_q_b);
    CHECK(report.bound == 186624); // ceil((9 * 8)^3 / 2), under the cap
    CHECK(report.bound <= blanket_term(3, 3));
  }

  SUBCASE("rank one is flagged and given the blanket maximum") {
    const BoundReport report =
        finite_group_bound({{Family::A, 1}, 2, 1, TwistClass::untwisted, 1}, b_alg);
    CHECK(report.case_tag == BoundCase::blanket);
    CHECK(report.bound == report.blanket);
    CHECK(report.blanket == b_alg); // b_alg = 1000 > ceil((4 * 27)^1 / 2) = 54
  }

  SUBCASE("every case output is dominated by the blanket maximum") {
    // each generic-h formula is paired with its natural algebraic input:
    // the defining-characteristic bound takes the restricted length bound,
    // the LCF bound takes the LCF length bound
    for (const char* name : {"A1", "A2", "A3", "B2", "C3", "G2", "F4"}) {
      const RootSystemSpec spec = RootSystemSpec::parse(name);
      const RootSystem rs = RootSystem::build(spec);
      for (long long p : {2LL, 3LL, 5LL, 37LL}) {
        for (long long r : {1LL, 2LL, 3LL}) {
          const Int alg_a = restricted_length_bound(rs, PrimeContext(p)).coarse;
          const BoundReport via_a =
              finite_group_bound({spec, p, r, TwistClass::untwisted, 1}, alg_a);
          CHECK(via_a.bound <= via_a.blanket);
          if (via_a.case_tag != BoundCase::blanket) {
            CHECK(via_a.bound <= h1_bound_defining(rs.coxeter_number(), p));
          }

          const Int alg_c = lcf_weyl_length_bound(rs);
          const BoundReport via_c =
              finite_group_bound({spec, p, r, TwistClass::untwisted, 1}, alg_c);
          CHECK(via_c.bound <= via_c.blanket);
          if (via_c.case_tag != BoundCase::blanket) {
            CHECK(via_c.bound <= h1_bound_lcf(rs.coxeter_number()));
          }
        }
      }
    }
  }

  SUBCASE("the restricted length bound feeds the generic formula") {
    for (const char* name : {"A1", "A2", "B2", "G2", "D4"}) {
      const RootSystem rs = RootSystem::build(RootSystemSpec::parse(name));
      const long long p = smallest_prime_at_least(rs.coxeter_number());
      CHECK(restricted_length_bound(rs, PrimeContext(p)).coarse <=
            h1_bound_defining(rs.coxeter_number(), p));
    }
  }
}

TEST_CASE("growth table") {
  const auto rows = growth_table(4);
  // A2..A4, B2..B4, C2..C4, D4, E6..E8, F4, G2
  REQUIRE(rows.size() == 15);
  CHECK(rows[0].family == Family::A);
  CHECK(rows[0].rank == 2);
  CHECK(rows[0].coxeter == 3);
  CHECK(rows[9].family == Family::D);
  CHECK(rows[9].rank == 4);
  for (const GrowthRow& row : rows) {
    CHECK(row.log2_bound_a > 0.0);
    CHECK(row.log2_bound_c > 0.0);
    CHECK(row.log2_bound_a >= row.log2_bound_c - 1e-9);
    CHECK(std::isfinite(row.ratio_a));
    CHECK(std::isfinite(row.ratio_c));
  }
  CHECK_THROWS_AS(growth_table(1), std::invalid_argument);
}
