// On-disk cache of built group tables, one JSON file per canonical spec.
// Purely an optimisation: a missing, stale or corrupt entry is rebuilt.

#ifndef ENGEL_CACHE_HPP_
#define ENGEL_CACHE_HPP_

#include "engel/group.hpp"
#include "engel/spec.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace engel {

inline constexpr std::size_t cache_order_limit = 512;

class GroupCache {
 public:
  // nullopt disables caching.
  explicit GroupCache(std::optional<std::filesystem::path> directory = std::nullopt);

  // $ENGEL_LAB_CACHE, else $HOME/.cache/engel-lab, else nullopt.
  static std::optional<std::filesystem::path> default_directory();

  bool enabled() const noexcept {
    return directory_.has_value();
  }

  std::optional<std::filesystem::path> const& directory() const noexcept {
    return directory_;
  }

  // Loads from the cache or builds (and stores) the group.
  FiniteGroup obtain(GroupSpec const& spec) const;

  std::optional<FiniteGroup> load(GroupSpec const& spec) const;
  void                       store(GroupSpec const& spec, FiniteGroup const& g) const;

  std::filesystem::path entry_path(GroupSpec const& spec) const;

 private:
  std::optional<std::filesystem::path> directory_;
};

// Percent-encodes everything outside [A-Za-z0-9._-].
std::string cache_file_stem(std::string const& canonical_spec);

}  // namespace engel

#endif  // ENGEL_CACHE_HPP_
