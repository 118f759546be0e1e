#pragma once

#include "pn/abelian_group.hpp"
#include "pn/dyer_lashof.hpp"
#include "pn/genus.hpp"
#include "pn/group_homology.hpp"
#include "pn/lie_module.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace pn::cli {

using Json = nlohmann::ordered_json;

// serialize.cpp
Json to_json(const BigInt& v);
Json to_json(const AbelianGroup& g);
Json to_json(const HomologyVerdict& v, std::optional<std::uint64_t> n = std::nullopt);
Json to_json(const GenusVerdict& v);
Json to_json(const ComparisonReport& r);
Json to_json(const std::vector<CharacterValue>& chi);
Json to_json(const IntMatrix& m);

// render.cpp
enum class Format { Json, Csv, Text };
Format parse_format(const std::string& text);
std::string render(const Json& payload, Format format);
/// Inverse of the csv rendering.
Json parse_csv(const std::string& csv);

// cache.cpp
class Cache {
 public:
  explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  /// SHA-256 over a version tag and the canonical request encoding.
  static std::string key(const Json& request);
  std::optional<Json> load(const std::string& key) const;
  void store(const std::string& key, const Json& payload) const;
  std::filesystem::path path_for(const std::string& key) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace pn::cli
