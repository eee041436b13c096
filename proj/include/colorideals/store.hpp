#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "colorideals/growth.hpp"

namespace colorideals {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CacheEntry {
  std::string fingerprint;
  std::vector<BigInt> counts;
  std::string tool_version;
  bool complete = true;
};

/// One JSON file per fingerprint. Entries written by another tool version
/// are ignored.
class SequenceCache {
 public:
  explicit SequenceCache(std::filesystem::path dir);
  /// $COLORIDEALS_CACHE_DIR, else $XDG_CACHE_HOME/colorideals, else
  /// ~/.cache/colorideals.
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const std::string& fingerprint) const;

  std::optional<CacheEntry> load(const std::string& fingerprint) const;
  /// Atomic: written to a temporary file, then renamed.
  void store(const CacheEntry& entry) const;

 private:
  std::filesystem::path dir_;
};

/// Counts for n = 0..N, served from the cache when it already holds a
/// complete prefix of that length; otherwise enumerated and stored.
struct CachedCounts {
  SequenceRecord record;
  bool from_cache = false;
};
CachedCounts cached_count_sequence(const IdealSpec& spec, int N, const Budget& budget,
                                   const SequenceCache* cache);

nlohmann::ordered_json counts_to_json(const std::vector<BigInt>& counts);
std::vector<BigInt> counts_from_json(const nlohmann::json& j);

/// Sequence document for `enumerate`.
nlohmann::ordered_json sequence_to_json(const IdealSpec& spec, const SequenceRecord& rec);

/// CSV with header `n,count`.
std::string counts_to_csv(const std::vector<BigInt>& counts);

nlohmann::ordered_json rich_to_json(const RichCertificate& c);
nlohmann::ordered_json wealth_to_json(const WealthCertificate& c);

/// Report document for `classify`.
nlohmann::ordered_json report_to_json(const IdealSpec& spec, const GrowthReport& rep);
/// Inverse of report_to_json for the fields recheck_report looks at.
GrowthReport report_from_json(const nlohmann::json& j);

/// Writes text to path atomically; throws IoError.
void write_file_atomic(const std::filesystem::path& path, const std::string& text);
std::string read_file(const std::filesystem::path& path);

}  // namespace colorideals
