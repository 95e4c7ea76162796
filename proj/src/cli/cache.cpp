#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "hgc/cli.hpp"

namespace hgc::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::uint64_t table_digest(const AbstractGroup& g) {
  std::uint64_t h = 1469598103934665603ull ^ g.order();
  for (Elem x : g.table()) h = (h ^ x) * 1099511628211ull;
  return h;
}

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

}  // namespace

FileCache::FileCache(fs::path dir, std::ostream& warnings) : dir_(std::move(dir)), warn_(warnings) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) warn_ << "warning: cache directory " << dir_ << " unusable: " << ec.message() << "\n";
}

fs::path FileCache::path_for(const AbstractGroup& n) const {
  return dir_ / ("aut-" + hex(n.fingerprint().digest()) + "-" + hex(table_digest(n)) + ".json");
}

std::optional<std::vector<Perm>> FileCache::load(const AbstractGroup& n) {
  const fs::path p = path_for(n);
  std::ifstream in(p);
  if (!in) {
    ++misses_;
    return std::nullopt;
  }
  try {
    const json j = json::parse(in);
    if (j.at("schema").get<int>() != kSchemaVersion || j.at("kind").get<std::string>() != "aut" ||
        j.at("table_digest").get<std::string>() != hex(table_digest(n)) ||
        j.at("fingerprint").get<std::string>() != hex(n.fingerprint().digest())) {
      ++misses_;
      return std::nullopt;
    }
    std::vector<Perm> gens;
    for (const auto& g : j.at("generators")) {
      const auto img = g.get<std::vector<Point>>();
      if (img.size() != n.order()) throw Error("generator of wrong degree");
      gens.emplace_back(img);
    }
    for (const auto& g : gens)
      if (!is_automorphism(n, g)) throw Error("stored generator is not an automorphism");
    if (PermGroup(n.order(), gens).order() != j.at("order").get<std::uint64_t>())
      throw Error("stored order does not match the generators");
    ++hits_;
    return gens;
  } catch (const std::exception& e) {
    warn_ << "warning: discarding cache entry " << p.filename().string() << ": " << e.what() << "\n";
    ++misses_;
    return std::nullopt;
  }
}

void FileCache::store(const AbstractGroup& n, const std::vector<Perm>& generators, std::uint64_t order) {
  json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = "aut";
  j["fingerprint"] = hex(n.fingerprint().digest());
  j["catalog_id"] = n.catalog_id ? *n.catalog_id : "";
  j["table_digest"] = hex(table_digest(n));
  j["group_order"] = n.order();
  j["order"] = order;
  json gens = json::array();
  for (const auto& g : generators) gens.push_back(std::vector<Point>(g.images().begin(), g.images().end()));
  j["generators"] = std::move(gens);
  j["created"] = std::chrono::duration_cast<std::chrono::seconds>(
                     std::chrono::system_clock::now().time_since_epoch())
                     .count();
  const fs::path p = path_for(n);
  const fs::path tmp = p.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) {
      warn_ << "warning: cannot write cache entry " << p << "\n";
      return;
    }
    out << j.dump() << "\n";
  }
  std::error_code ec;
  fs::rename(tmp, p, ec);
  if (ec) warn_ << "warning: cannot write cache entry " << p << ": " << ec.message() << "\n";
}

}  // namespace hgc::cli
