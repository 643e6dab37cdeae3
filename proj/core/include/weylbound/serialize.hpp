#ifndef WEYLBOUND_SERIALIZE_HPP
#define WEYLBOUND_SERIALIZE_HPP

#include <weylbound/bounds.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace weylbound {

// JSON/CSV emission with stable key and column order. Big integers are
// rendered as decimal strings; small integer coefficients stay JSON numbers.

/// {"terms":[{"weight":[...],"coeff":n},...]} sorted by weight.
std::string char_combo_json(const CharCombo& combo);

std::string root_system_json(const RootSystem& rs);

std::string bound_report_json(const BoundReport& report);

/// Fixed header "family,rank,coxeter,log2_bound_a,log2_bound_c,ratio_a,ratio_c".
std::string growth_table_csv(const std::vector<GrowthRow>& rows);

/// Persistent length-bound cache, schema-tagged JSON:
///   {"schema":"v1","entries":[{"family":"A","rank":1,"p":2,"lam":[2],"bound":"2"},...]}
/// Store-then-load reproduces every entry bit-exactly.
inline constexpr const char* kCacheSchema = "v1";

struct CacheLoadResult {
  bool loaded = false;        // false: missing file or cold start
  std::string warning;        // non-empty iff the file was ignored (corrupt/schema mismatch)
};

CacheLoadResult load_length_cache(const std::filesystem::path& path, LengthCache& cache);
void store_length_cache(const std::filesystem::path& path, const LengthCache& cache);

} // namespace weylbound

#endif // WEYLBOUND_SERIALIZE_HPP
