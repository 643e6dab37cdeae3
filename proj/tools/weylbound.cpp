// weylbound: exact root-system combinatorics, Jantzen-sum data, Weyl-module
// length bounds and first-cohomology bounds for groups of Lie type.
//
// Exit codes: 0 success, 2 usage error, 1 domain error.

#include <weylbound/serialize.hpp>
#include <weylbound/sl2_oracle.hpp>

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace weylbound;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<long long> parse_csv_ints(const std::string& text) {
  std::vector<long long> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string token = text.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(token, &used));
      if (used != token.size()) {
        throw std::invalid_argument(token);
      }
    } catch (const std::exception&) {
      throw UsageError("expected comma-separated integers, got '" + text + "'");
    }
    pos = comma + 1;
  }
  return out;
}

Weight parse_weight(const RootSystem& rs, const std::string& text) {
  Weight lam{parse_csv_ints(text)};
  rs.check_weight(lam);
  return lam;
}

std::string format_char_combo(const CharCombo& combo) {
  std::string out;
  for (const auto& [mu, coeff] : combo.terms) {
    std::string coords;
    for (std::size_t i = 0; i < mu.size(); ++i) {
      coords += (i ? "," : "") + std::to_string(mu[i]);
    }
    out += coords + " " + std::to_string(coeff) + "\n";
  }
  return out;
}

int run_selftest() {
  int failures = 0;
  auto check = [&failures](bool ok, const std::string& name) {
    std::cout << (ok ? "ok " : "FAIL ") << name << "\n";
    if (!ok) {
      ++failures;
    }
  };

  // Closed forms for the restricted maximum of the alcove depth.
  {
    bool ok = true;
    auto expect = [&ok](const RootSystemSpec& spec, long long want) {
      const RootSystem rs = RootSystem::build(spec);
      const PrimeContext ctx(smallest_prime_at_least(rs.coxeter_number()));
      ok = ok && restricted_max_depth(rs, ctx) == want;
    };
    for (int n = 2; n <= 8; ++n) {
      const long long nn = n;
      expect({Family::A, n}, (nn - 1) * nn * (nn + 1) / 6);
      expect({Family::B, n}, (nn - 1) * nn * (4 * nn + 1) / 6);
      expect({Family::C, n}, (nn - 1) * nn * (4 * nn + 1) / 6);
      if (n >= 4) {
        expect({Family::D, n}, 2 * (nn - 2) * (nn - 1) * nn / 3);
      }
    }
    expect({Family::E, 6}, 120);
    expect({Family::E, 7}, 336);
    expect({Family::E, 8}, 1120);
    expect({Family::F, 4}, 86);
    expect({Family::G, 2}, 10);
    check(ok, "restricted-depth-closed-forms");
  }

  // A1 sandwich: oracle <= exact recursion <= closed form.
  {
    bool ok = true;
    const RootSystem a1 = RootSystem::build({Family::A, 1});
    for (long long p : {2, 3, 5}) {
      const PrimeContext ctx(p);
      LengthCache cache;
      for (long long lam = 0; lam <= 40 && ok; ++lam) {
        const Weight w{{lam}};
        const Int exact = length_bound_exact(a1, w, ctx, cache);
        const Int closed = length_bound_closed(alcove_depth(a1, w, ctx), lam + 1, p);
        ok = Int(sl2_exact_length(lam, p)) <= exact && exact <= closed;
      }
    }
    check(ok, "sl2-oracle-sandwich");
  }

  // Jantzen sum: nonnegative collected coefficients, strict depth descent,
  // linkage preservation over all restricted weights of small systems.
  {
    bool ok = true;
    for (const char* name : {"A1", "A2", "B2"}) {
      const RootSystem rs = RootSystem::build(RootSystemSpec::parse(name));
      for (long long p : {2, 3}) {
        const PrimeContext ctx(p);
        std::vector<Weight> all{Weight{std::vector<long long>(rs.rank(), 0)}};
        for (int i = 0; i < rs.rank(); ++i) {
          std::vector<Weight> grown;
          for (const Weight& w : all) {
            for (long long c = 0; c < p; ++c) {
              Weight next = w;
              next.coords[i] = c;
              grown.push_back(next);
            }
          }
          all = std::move(grown);
        }
        for (const Weight& lam : all) {
          const long long depth = alcove_depth(rs, lam, ctx);
          const Weight rep = linkage_rep(rs, lam, ctx);
          for (const auto& [mu, coeff] : jantzen_sum(rs, lam, ctx).terms) {
            ok = ok && coeff >= 0 && alcove_depth(rs, mu, ctx) < depth &&
                 linkage_rep(rs, mu, ctx) == rep;
          }
        }
      }
    }
    check(ok, "jantzen-collection-properties");
  }

  std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "weylbound: exact root-system data, alcove depths, Jantzen sums,\n"
      "Weyl-module length bounds and H^1 bounds for groups of Lie type"};
  app.require_subcommand(1);
  std::function<int()> action;

  bool verbose_flag = false;
  app.add_flag("-v,--verbose", verbose_flag, "diagnostics on stderr (place before the subcommand)");

  std::string type_arg;
  long long p_arg = 2;
  std::string lam_arg;
  bool json_flag = false;
  bool floor_flag = false;
  bool sharp_flag = false;
  bool maxd_has_p = false;
  bool finite_has_e = false;
  long long d_arg = 0;
  long long b_arg = 2;
  long long h_arg = 2;
  long long r_arg = 1;
  long long e_arg = 0;
  int lmax_arg = 8;
  std::string twist_arg = "untwisted";
  std::string balg_arg;
  std::string cache_arg;

  // roots <type>
  {
    auto* sub = app.add_subcommand("roots", "dump root-system data as JSON");
    sub->add_option("type", type_arg, "root system, e.g. A2, F4")->required();
    sub->callback([&] {
      action = [&]() {
        std::cout << root_system_json(RootSystem::build(RootSystemSpec::parse(type_arg)))
                  << "\n";
        return 0;
      };
    });
  }

  // dlambda <type> --p P --lam CSV [--floor]
  {
    auto* sub = app.add_subcommand("dlambda", "alcove depth of a dominant weight");
    sub->add_option("type", type_arg)->required();
    sub->add_option("--p", p_arg, "prime characteristic")->required();
    sub->add_option("--lam", lam_arg, "weight, comma-separated fundamental coordinates")
        ->required();
    sub->add_flag("--floor", floor_flag, "use the floor-sum wall convention");
    sub->callback([&] {
      action = [&]() {
        const RootSystem rs = RootSystem::build(RootSystemSpec::parse(type_arg));
        const PrimeContext ctx(p_arg);
        const auto convention =
            floor_flag ? DepthConvention::floor_sum : DepthConvention::upper_closure;
        std::cout << alcove_depth(rs, parse_weight(rs, lam_arg), ctx, convention) << "\n";
        return 0;
      };
    });
  }

  // maxd <type> [--p P]
  {
    auto* sub = app.add_subcommand(
        "maxd", "maximum alcove depth over the restricted region (needs p >= h)");
    sub->add_option("type", type_arg)->required();
    auto* popt = sub->add_option("--p", p_arg, "prime >= h; default: smallest such prime");
    sub->callback([&, popt] {
      maxd_has_p = popt->count() > 0;
      action = [&]() {
        const RootSystem rs = RootSystem::build(RootSystemSpec::parse(type_arg));
        const long long p = maxd_has_p ? p_arg : smallest_prime_at_least(rs.coxeter_number());
        if (verbose_flag && !maxd_has_p) {
          std::cerr << "p=" << p << " (smallest prime >= h = " << rs.coxeter_number()
                    << ")\n";
        }
        std::cout << restricted_max_depth(rs, PrimeContext(p)) << "\n";
        return 0;
      };
    });
  }

  // jantzen <type> --p P --lam CSV [--json]
  {
    auto* sub = app.add_subcommand("jantzen", "collected Jantzen sum of a dominant weight");
    sub->add_option("type", type_arg)->required();
    sub->add_option("--p", p_arg)->required();
    sub->add_option("--lam", lam_arg)->required();
    sub->add_flag("--json", json_flag, "emit JSON");
    sub->callback([&] {
      action = [&]() {
        const RootSystem rs = RootSystem::build(RootSystemSpec::parse(type_arg));
        const CharCombo combo = jantzen_sum(rs, parse_weight(rs, lam_arg), PrimeContext(p_arg));
        if (json_flag) {
          std::cout << char_combo_json(combo) << "\n";
        } else {
          std::cout << format_char_combo(combo);
        }
        return 0;
      };
    });
  }

  // length exact|closed|restricted
  {
    auto* length = app.add_subcommand("length", "Weyl-module composition length bounds");
    length->require_subcommand(1);

    auto* exact = length->add_subcommand("exact", "recursive bound via the Jantzen sum");
    exact->add_option("type", type_arg)->required();
    exact->add_option("--p", p_arg)->required();
    exact->add_option("--lam", lam_arg)->required();
    exact->add_option("--cache", cache_arg, "persistent cache file")
        ->envname("WEYLBOUND_CACHE");
    exact->callback([&] {
      action = [&]() {
        const RootSystem rs = RootSystem::build(RootSystemSpec::parse(type_arg));
        const PrimeContext ctx(p_arg);
        LengthCache cache;
        if (!cache_arg.empty()) {
          const CacheLoadResult loaded = load_length_cache(cache_arg, cache);
          if (!loaded.warning.empty()) {
            std::cerr << "warning: " << loaded.warning << "\n";
          }
          if (verbose_flag) {
            std::cerr << "cache: " << cache.size() << " entries loaded\n";
          }
        }
        std::cout << length_bound_exact(rs, parse_weight(rs, lam_arg), ctx, cache) << "\n";
        if (!cache_arg.empty()) {
          store_length_cache(cache_arg, cache);
          if (verbose_flag) {
            std::cerr << "cache: " << cache.size() << " entries stored\n";
          }
        }
        return 0;
      };
    });

    auto* closed = length->add_subcommand("closed", "closed-form geometric bound");
    closed->add_option("--d", d_arg, "alcove depth")->required();
    closed->add_option("--b", b_arg, "bound on <lam+rho, alpha_0^vee>")->required();
    closed->add_option("--p", p_arg)->required();
    closed->callback([&] {
      action = [&]() {
        std::cout << length_bound_closed(d_arg, b_arg, p_arg) << "\n";
        return 0;
      };
    });

    auto* restricted =
        length->add_subcommand("restricted", "bound for all restricted highest weights");
    restricted->add_option("type", type_arg)->required();
    restricted->add_option("--p", p_arg)->required();
    restricted->add_flag("--sharp", sharp_flag,
                         "use the exact restricted depth maximum (needs p >= h)");
    restricted->callback([&] {
      action = [&]() {
        const RootSystem rs = RootSystem::build(RootSystemSpec::parse(type_arg));
        const RestrictedLengthBound bound = restricted_length_bound(rs, PrimeContext(p_arg));
        if (sharp_flag) {
          if (!bound.sharp) {
            throw std::invalid_argument("--sharp requires p >= h");
          }
          std::cout << *bound.sharp << "\n";
        } else {
          std::cout << bound.coarse << "\n";
        }
        return 0;
      };
    });
  }

  // bound theorem-a|theorem-c|lcf|steinberg|cross-char|finite
  {
    auto* bound = app.add_subcommand("bound", "cohomology and length bound formulas");
    bound->require_subcommand(1);

    auto* ta = bound->add_subcommand("theorem-a", "defining-characteristic H^1 bound");
    ta->set_help_flag("--help", "print help");
    ta->add_option("--h", h_arg, "Coxeter number")->required();
    ta->add_option("--p", p_arg)->required();
    ta->callback([&] {
      action = [&]() {
        std::cout << h1_bound_defining(h_arg, p_arg) << "\n";
        return 0;
      };
    });

    auto* tc = bound->add_subcommand("theorem-c", "H^1 bound assuming the LCF");
    tc->set_help_flag("--help", "print help");
    tc->add_option("--h", h_arg, "Coxeter number")->required();
    tc->callback([&] {
      action = [&]() {
        std::cout << h1_bound_lcf(h_arg) << "\n";
        return 0;
      };
    });

    auto* lcf = bound->add_subcommand("lcf", "(2h)^{|Phi+|} length bound under the LCF");
    lcf->add_option("type", type_arg)->required();
    lcf->callback([&] {
      action = [&]() {
        std::cout << lcf_weyl_length_bound(RootSystem::build(RootSystemSpec::parse(type_arg)))
                  << "\n";
        return 0;
      };
    });

    auto* steinberg = bound->add_subcommand("steinberg", "Steinberg dimension p^{r|Phi+|}");
    steinberg->add_option("type", type_arg)->required();
    steinberg->add_option("--p", p_arg)->required();
    steinberg->add_option("--r", r_arg)->required();
    steinberg->callback([&] {
      action = [&]() {
        std::cout << steinberg_dimension(RootSystem::build(RootSystemSpec::parse(type_arg)),
                                         p_arg, r_arg)
                  << "\n";
        return 0;
      };
    });

    auto* cross = bound->add_subcommand("cross-char", "|W| + e cross-characteristic bound");
    cross->add_option("type", type_arg)->required();
    cross->add_option("--e", e_arg, "twisted rank")->required();
    cross->callback([&] {
      action = [&]() {
        std::cout << cross_char_bound(RootSystem::build(RootSystemSpec::parse(type_arg)),
                                      e_arg)
                  << "\n";
        return 0;
      };
    });

    auto* finite =
        bound->add_subcommand("finite", "case analysis for a finite group of Lie type");
    finite->add_option("type", type_arg)->required();
    finite->add_option("--p", p_arg)->required();
    finite->add_option("--r", r_arg, "q = p^r")->required();
    finite->add_option("--twisted", twist_arg, "untwisted|graph-twisted|ree-suzuki");
    auto* eopt = finite->add_option("--e", e_arg, "twisted rank (default: rank)");
    finite->add_option("--balg", balg_arg,
                       "algebraic-group bound (default: restricted length bound)");
    finite->callback([&, eopt] {
      finite_has_e = eopt->count() > 0;
      action = [&]() {
        FiniteGroupQuery query;
        query.rs = RootSystemSpec::parse(type_arg);
        query.p = p_arg;
        query.r = r_arg;
        query.twisted = twist_from_string(twist_arg);
        query.twisted_rank = finite_has_e ? e_arg : query.rs.rank;
        Int b_alg;
        if (balg_arg.empty()) {
          const RootSystem rs = RootSystem::build(query.rs);
          b_alg = restricted_length_bound(rs, PrimeContext(p_arg)).coarse;
        } else {
          b_alg = Int(balg_arg);
        }
        std::cout << bound_report_json(finite_group_bound(query, b_alg)) << "\n";
        return 0;
      };
    });
  }

  // table growth --lmax N
  {
    auto* table = app.add_subcommand("table", "batch tables");
    table->require_subcommand(1);
    auto* growth = table->add_subcommand("growth", "bound growth rates as CSV");
    growth->add_option("--lmax", lmax_arg, "largest classical rank")->required();
    growth->callback([&] {
      action = [&]() {
        std::cout << growth_table_csv(growth_table(lmax_arg));
        return 0;
      };
    });
  }

  app.add_subcommand("selftest", "run the built-in consistency checks")->callback([&] {
    action = run_selftest;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
