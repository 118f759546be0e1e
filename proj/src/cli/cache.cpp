#include "cli_internal.hpp"

#include "pn/errors.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace pn::cli {

namespace {

constexpr int kCacheVersion = 1;

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw_invariant("SHA-256 digest failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < length; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

std::string utc_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace

std::string Cache::key(const Json& request) {
  return sha256_hex("pn-cache-v" + std::to_string(kCacheVersion) + "\n" + request.dump());
}

std::filesystem::path Cache::path_for(const std::string& key) const { return dir_ / (key + ".json"); }

std::optional<Json> Cache::load(const std::string& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    auto entry = Json::parse(in);
    if (entry.value("version", 0) != kCacheVersion || entry.value("key", "") != key || !entry.contains("payload")) {
      return std::nullopt;
    }
    return entry["payload"];
  } catch (const Json::exception&) {
    return std::nullopt;  // a damaged entry is recomputed and overwritten
  }
}

void Cache::store(const std::string& key, const Json& payload) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw_invalid("cannot create cache directory " + dir_.string() + ": " + ec.message());
  const Json entry{{"version", kCacheVersion}, {"key", key}, {"created_at", utc_now()}, {"payload", payload}};
  const auto target = path_for(key);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw_invalid("cannot write cache entry " + tmp.string());
    out << entry.dump(1) << '\n';
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) throw_invalid("cannot move cache entry into place: " + ec.message());
}

}  // namespace pn::cli
