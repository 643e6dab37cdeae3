#include <weylbound/serialize.hpp>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace weylbound {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json weight_to_json(const Weight& w) {
  return ordered_json(w.coords);
}

std::string format_sig(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

} // namespace

std::string char_combo_json(const CharCombo& combo) {
  ordered_json terms = ordered_json::array();
  for (const auto& [mu, coeff] : combo.terms) {
    ordered_json term;
    term["weight"] = weight_to_json(mu);
    term["coeff"] = coeff;
    terms.push_back(std::move(term));
  }
  ordered_json doc;
  doc["terms"] = std::move(terms);
  return doc.dump();
}

std::string root_system_json(const RootSystem& rs) {
  ordered_json doc;
  doc["family"] = std::string(1, family_to_char(rs.spec().family));
  doc["rank"] = rs.rank();
  doc["cartan"] = rs.cartan();
  doc["coxeter"] = rs.coxeter_number();
  doc["numPosRoots"] = rs.num_positive_roots();
  doc["alphaZeroIndex"] = rs.alpha_zero_index();
  doc["weylOrder"] = rs.weyl_order().str();
  doc["rho"] = weight_to_json(rs.rho());
  ordered_json roots = ordered_json::array();
  for (const Root& root : rs.positive_roots()) {
    ordered_json entry;
    entry["root"] = root.root_coords;
    entry["coroot"] = root.coroot_coords;
    entry["weight"] = root.weight_coords;
    roots.push_back(std::move(entry));
  }
  doc["posRoots"] = std::move(roots);
  return doc.dump();
}

std::string bound_report_json(const BoundReport& report) {
  ordered_json query;
  query["family"] = std::string(1, family_to_char(report.query.rs.family));
  query["rank"] = report.query.rs.rank;
  query["p"] = report.query.p;
  query["r"] = report.query.r;
  query["twisted"] = to_string(report.query.twisted);
  query["twistedRank"] = report.query.twisted_rank;
  ordered_json doc;
  doc["query"] = std::move(query);
  doc["case"] = to_string(report.case_tag);
  doc["bound"] = report.bound.str();
  doc["formula"] = report.formula;
  doc["blanket"] = report.blanket.str();
  return doc.dump();
}

std::string growth_table_csv(const std::vector<GrowthRow>& rows) {
  std::ostringstream out;
  out << "family,rank,coxeter,log2_bound_a,log2_bound_c,ratio_a,ratio_c\n";
  for (const GrowthRow& row : rows) {
    out << family_to_char(row.family) << ',' << row.rank << ',' << row.coxeter << ','
        << format_sig(row.log2_bound_a) << ',' << format_sig(row.log2_bound_c) << ','
        << format_sig(row.ratio_a) << ',' << format_sig(row.ratio_c) << '\n';
  }
  return out.str();
}

CacheLoadResult load_length_cache(const std::filesystem::path& path, LengthCache& cache) {
  CacheLoadResult result;
  std::ifstream in(path);
  if (!in.is_open()) {
    return result; // fresh cache, no warning
  }
  try {
    const ordered_json doc = ordered_json::parse(in);
    if (!doc.is_object() || doc.value("schema", std::string()) != kCacheSchema) {
      result.warning = "cache schema mismatch in " + path.string() + "; starting cold";
      return result;
    }
    LengthCache staged;
    for (const auto& entry : doc.at("entries")) {
      LengthCache::Key key;
      const std::string family = entry.at("family").get<std::string>();
      if (family.size() != 1) {
        throw std::invalid_argument("bad family");
      }
      key.family = family_from_char(family[0]);
      key.rank = entry.at("rank").get<int>();
      key.p = entry.at("p").get<long long>();
      key.lam.coords = entry.at("lam").get<std::vector<long long>>();
      staged.put(std::move(key), Int(entry.at("bound").get<std::string>()));
    }
    for (const auto& [key, value] : staged.entries()) {
      cache.put(key, value);
    }
    result.loaded = true;
  } catch (const std::exception& e) {
    result.warning = "unreadable cache " + path.string() + " (" + e.what() + "); starting cold";
  }
  return result;
}

void store_length_cache(const std::filesystem::path& path, const LengthCache& cache) {
  ordered_json entries = ordered_json::array();
  for (const auto& [key, value] : cache.entries()) {
    ordered_json entry;
    entry["family"] = std::string(1, family_to_char(key.family));
    entry["rank"] = key.rank;
    entry["p"] = key.p;
    entry["lam"] = key.lam.coords;
    entry["bound"] = value.str();
    entries.push_back(std::move(entry));
  }
  ordered_json doc;
  doc["schema"] = kCacheSchema;
  doc["entries"] = std::move(entries);
  std::ofstream out(path);
  if (!out.is_open()) {
    throw std::runtime_error("cannot write cache file " + path.string());
  }
  out << doc.dump() << '\n';
}

} // namespace weylbound
