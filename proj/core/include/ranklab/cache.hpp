#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "ranklab/dixon.hpp"

namespace ranklab {

inline constexpr int kCacheSchema = 1;

// Line-oriented decimal text: header, one line per class, one line per irreducible.
void save_table(const CharacterTable& t, std::ostream& os);
void save_table(const CharacterTable& t, const std::filesystem::path& file);
// nullopt on schema mismatch, a class block that does not match g, or a failed certificate.
std::optional<CharacterTable> load_table(const GroupPtr& g, std::istream& is);
std::optional<CharacterTable> load_table(const GroupPtr& g, const std::filesystem::path& file);

std::string spec_slug(const std::string& spec);
// --cache-dir, then RANKLAB_CACHE, then ./cache
std::filesystem::path resolve_cache_dir(const std::string& flag);

// Groups and tables by spec string, memoized in memory and (if a directory is set) on disk.
class TableStore {
 public:
  explicit TableStore(std::optional<std::filesystem::path> dir = std::nullopt, uint64_t seed = 0)
      : dir_(std::move(dir)), seed_(seed) {}

  GroupPtr group(const std::string& spec);
  const CharacterTable& table(const std::string& spec);
  bool loaded_from_disk(const std::string& spec) const;
  // Adopt a table computed elsewhere (e.g. a timed fresh build). An existing entry wins.
  const CharacterTable& put(const std::string& spec, CharacterTable t);

 private:
  std::optional<std::filesystem::path> dir_;
  uint64_t seed_;
  std::mutex mu_;
  std::map<std::string, GroupPtr> groups_;
  std::map<std::string, std::unique_ptr<CharacterTable>> tables_;
  std::map<std::string, bool> from_disk_;
};

}  // namespace ranklab
