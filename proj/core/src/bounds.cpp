#include <weylbound/bounds.hpp>

#include <cmath>
#include <stdexcept>

namespace weylbound {

namespace {

long long ceil_half_ll(long long x) {
  return (x + 1) / 2;
}

// ceil((h^2 (3h-3)^3)^exponent / 2): the finite-group term shared by the
// defining-characteristic and LCF bounds.
Int finite_group_term(long long h, long long exponent) {
  const Int base = Int(h) * h * int_pow(Int(3 * h - 3), 3);
  return ceil_half(int_pow(base, exponent));
}

long long coxeter_of(Family family, int rank) {
  switch (family) {
    case Family::A: return rank + 1;
    case Family::B: return 2 * rank;
    case Family::C: return 2 * rank;
    case Family::D: return 2 * rank - 2;
    case Family::E: return rank == 6 ? 12 : rank == 7 ? 18 : 30;
    case Family::F: return 12;
    case Family::G: return 6;
  }
  throw std::logic_error("coxeter_of: unreachable");
}

void check_h(long long h) {
  if (h < 2) {
    throw std::invalid_argument("Coxeter number must be >= 2");
  }
}

} // namespace

Int h1_bound_defining(long long h, long long p) {
  check_h(h);
  if (!is_prime(p)) {
    throw std::invalid_argument("h1_bound_defining: p must be prime");
  }
  const Int geometric = geometric_sum(restricted_bound_base(h, p), h * h * h / 6);
  const Int finite = finite_group_term(h, ceil_half_ll(h * h));
  return geometric > finite ? geometric : finite;
}

Int h1_bound_lcf(long long h) {
  check_h(h);
  const Int lcf_term = int_pow(Int(2 * h), ceil_half_ll(h * h));
  const Int finite = finite_group_term(h, ceil_half_ll(h * h));
  return lcf_term > finite ? lcf_term : finite;
}

Int lcf_weyl_length_bound(const RootSystem& rs) {
  return int_pow(Int(2 * rs.coxeter_number()),
                 static_cast<long long>(rs.num_positive_roots()));
}

Int steinberg_dimension(const RootSystem& rs, long long p, long long r) {
  if (!is_prime(p)) {
    throw std::invalid_argument("steinberg_dimension: p must be prime");
  }
  if (r < 1) {
    throw std::invalid_argument("steinberg_dimension: r must be >= 1");
  }
  return int_pow(Int(p), r * static_cast<long long>(rs.num_positive_roots()));
}

Int cross_char_bound(const RootSystem& rs, long long twisted_rank) {
  if (twisted_rank < 1 || twisted_rank > rs.rank()) {
    throw std::invalid_argument("cross_char_bound: twisted rank must lie in [1, rank]");
  }
  return rs.weyl_order() + twisted_rank;
}

std::string to_string(TwistClass t) {
  switch (t) {
    case TwistClass::untwisted: return "untwisted";
    case TwistClass::graph_twisted: return "graph-twisted";
    case TwistClass::ree_suzuki: return "ree-suzuki";
  }
  throw std::logic_error("to_string(TwistClass): unreachable");
}

TwistClass twist_from_string(std::string_view s) {
  if (s == "untwisted") return TwistClass::untwisted;
  if (s == "graph-twisted") return TwistClass::graph_twisted;
  if (s == "ree-suzuki") return TwistClass::ree_suzuki;
  throw std::invalid_argument("unknown twist class '" + std::string(s) + "'");
}

std::string to_string(BoundCase c) {
  switch (c) {
    case BoundCase::ree_suzuki: return "ReeSuzuki";
    case BoundCase::bnp_i: return "BNP-i";
    case BoundCase::bnp_ii: return "BNP-ii";
    case BoundCase::small_q_a: return "small-q-a";
    case BoundCase::small_q_b: return "small-q-b";
    case BoundCase::blanket: return "blanket";
  }
  throw std::logic_error("to_string(BoundCase): unreachable");
}

BoundReport finite_group_bound(const FiniteGroupQuery& query, const Int& b_alg) {
  query.rs.validate();
  if (b_alg < 1) {
    throw std::invalid_argument("finite_group_bound: b_alg must be >= 1");
  }
  if (!is_prime(query.p)) {
    throw std::invalid_argument("finite_group_bound: p must be prime");
  }
  if (query.r < 1) {
    throw std::invalid_argument("finite_group_bound: r must be >= 1");
  }
  if (query.twisted == TwistClass::ree_suzuki) {
    const bool shape_ok =
        (query.rs.family == Family::B && query.rs.rank == 2 && query.p == 2) ||
        (query.rs.family == Family::G && query.rs.rank == 2 && query.p == 3) ||
        (query.rs.family == Family::F && query.rs.rank == 4 && query.p == 2);
    if (!shape_ok) {
      throw std::invalid_argument(
          "ree-suzuki is only valid for B2 at p=2, G2 at p=3, F4 at p=2");
    }
  }

  const RootSystem rs = RootSystem::build(query.rs);
  const long long h = rs.coxeter_number();
  const long long num_pos = static_cast<long long>(rs.num_positive_roots());
  const std::string h_n = "h=" + std::to_string(h) + ", N=" + std::to_string(num_pos);

  BoundReport report;
  report.query = query;
  report.blanket = b_alg;
  const Int blanket_term = finite_group_term(h, num_pos);
  if (blanket_term > report.blanket) {
    report.blanket = blanket_term;
  }

  if (query.twisted == TwistClass::ree_suzuki) {
    report.case_tag = BoundCase::ree_suzuki;
    report.bound = 2;
    report.formula = "2";
    return report;
  }
  if (query.rs.family == Family::A && query.rs.rank == 1) {
    // The case analysis below excludes rank one; fall back to the blanket max.
    report.case_tag = BoundCase::blanket;
    report.bound = report.blanket;
    report.formula = "max(b_alg, ceil((h^2*(3h-3)^3)^N/2)), " + h_n;
    return report;
  }
  const long long s = query.r / 2;
  if (query.p >= 3 * h - 3) {
    report.case_tag = BoundCase::bnp_ii;
    report.bound = b_alg;
    report.formula = "b_alg";
    return report;
  }
  if (query.r >= 2 && int_pow(Int(query.p), s - 1) * (query.p - 1) > h) {
    report.case_tag = BoundCase::bnp_i;
    report.bound = b_alg;
    report.formula = "b_alg";
    return report;
  }
  if (query.r == 1) {
    report.case_tag = BoundCase::small_q_a;
    report.bound = ceil_half(int_pow(Int(query.p), num_pos));
    report.formula =
        "ceil(q^N/2), q=" + std::to_string(query.p) + ", N=" + std::to_string(num_pos);
    return report;
  }
  report.case_tag = BoundCase::small_q_b;
  const Int uncapped = ceil_half(int_pow(Int(h) * h * int_pow(Int(query.p), 3), num_pos));
  report.bound = uncapped < blanket_term ? uncapped : blanket_term;
  report.formula = "min(ceil((h^2*p^3)^N/2), ceil((h^2*(3h-3)^3)^N/2)), " + h_n +
                   ", p=" + std::to_string(query.p);
  return report;
}

std::vector<GrowthRow> growth_table(int l_max) {
  if (l_max < 2) {
    throw std::invalid_argument("growth_table: l_max must be >= 2");
  }
  std::vector<GrowthRow> rows;
  auto add_row = [&rows](Family family, int rank) {
    GrowthRow row;
    row.family = family;
    row.rank = rank;
    row.coxeter = coxeter_of(family, rank);
    row.log2_bound_a = log2_approx(h1_bound_defining(row.coxeter, 2));
    row.log2_bound_c = log2_approx(h1_bound_lcf(row.coxeter));
    const double l = static_cast<double>(rank);
    row.ratio_a = row.log2_bound_a / (l * l * l * std::log2(l));
    row.ratio_c = row.log2_bound_c / (l * l * std::log2(l));
    rows.push_back(row);
  };
  for (int l = 2; l <= l_max; ++l) add_row(Family::A, l);
  for (int l = 2; l <= l_max; ++l) add_row(Family::B, l);
  for (int l = 2; l <= l_max; ++l) add_row(Family::C, l);
  for (int l = 4; l <= l_max; ++l) add_row(Family::D, l);
  for (int l = 6; l <= 8; ++l) add_row(Family::E, l);
  add_row(Family::F, 4);
  add_row(Family::G, 2);
  return rows;
}

} // namespace weylbound
