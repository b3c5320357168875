#include "engel/cache.hpp"

#include "engel/export.hpp"

#include "json.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>

namespace engel {

namespace fs = std::filesystem;

std::string cache_file_stem(std::string const& canonical_spec) {
  static constexpr char hex[] = "0123456789ABCDEF";
  std::string           out;
  for (unsigned char c : canonical_spec) {
    if (std::isalnum(c) || c == '.' || c == '_' || c == '-') {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += hex[c >> 4U];
      out += hex[c & 15U];
    }
  }
  return out;
}

GroupCache::GroupCache(std::optional<fs::path> directory) : directory_(std::move(directory)) {}

std::optional<fs::path> GroupCache::default_directory() {
  if (char const* env = std::getenv("ENGEL_LAB_CACHE"); env && *env) {
    return fs::path(env);
  }
  if (char const* home = std::getenv("HOME"); home && *home) {
    return fs::path(home) / ".cache" / "engel-lab";
  }
  return std::nullopt;
}

fs::path GroupCache::entry_path(GroupSpec const& spec) const {
  return directory_.value_or(fs::path(".")) / (cache_file_stem(to_string(spec)) + ".json");
}

std::optional<FiniteGroup> GroupCache::load(GroupSpec const& spec) const {
  if (!directory_) {
    return std::nullopt;
  }
  std::ifstream in(entry_path(spec));
  if (!in) {
    return std::nullopt;
  }
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("schema") != schema_version || j.at("spec") != to_string(spec)) {
      return std::nullopt;
    }
    std::vector<NamedGenerator> gens;
    for (auto const& g : j.at("generators")) {
      gens.push_back({g.at("name").get<std::string>(), g.at("index").get<Element>()});
    }
    FiniteGroup g(j.at("label").get<std::string>(), j.at("order").get<std::size_t>(),
                  j.at("table").get<std::vector<Element>>(), std::move(gens),
                  j.at("element_names").get<std::vector<std::string>>());
    return g;
  } catch (std::exception const&) {
    return std::nullopt;
  }
}

void GroupCache::store(GroupSpec const& spec, FiniteGroup const& g) const {
  if (!directory_ || g.order() > cache_order_limit) {
    return;
  }
  std::error_code ec;
  fs::create_directories(*directory_, ec);
  if (ec) {
    return;
  }
  nlohmann::json gens = nlohmann::json::array();
  for (auto const& gen : g.generators()) {
    gens.push_back({{"name", gen.name}, {"index", gen.index}});
  }
  nlohmann::json j{{"schema", schema_version},
                   {"spec", to_string(spec)},
                   {"label", g.label()},
                   {"order", g.order()},
                   {"generators", gens},
                   {"element_names", g.element_names()},
                   {"table", std::vector<Element>(g.table().begin(), g.table().end())}};
  // Write then rename so a concurrent reader never sees a partial file.
  fs::path const target = entry_path(spec);
  fs::path       tmp    = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) {
      return;
    }
    out << j.dump();
  }
  fs::rename(tmp, target, ec);
}

FiniteGroup GroupCache::obtain(GroupSpec const& spec) const {
  if (auto cached = load(spec)) {
    return *cached;
  }
  FiniteGroup g = build_group(spec);
  store(spec, g);
  return g;
}

}  // namespace engel
