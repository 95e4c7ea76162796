#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hgc/construct.hpp"
#include "hgc/criteria.hpp"
#include "hgc/holo.hpp"

namespace hgc::cli {

/// Parse failure; `position` is a 0-based offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position);
  std::size_t position;
};

/// expr := term { "x" term }, terms C k | D k | Dic k | E k | V4 | A k | S k |
/// Q8 | SL(2,3) | SL(2,5) | o n#m. Whitespace is ignored.
GroupExpr parse_group_expr(std::string_view text);

/// Subgroup of g: "<i,j,...>" (generated by element indices) or an
/// expression optionally followed by "@k" (k-th conjugacy class of subgroups
/// isomorphic to it, 1-based).
Subgroup parse_subgroup_spec(const AbstractGroup& g, std::string_view text);

/// "o24#3" style id, or the display name for groups outside the catalog.
std::string type_id(const AbstractGroup& g);

nlohmann::json embedding_json(const Embedding& e);
nlohmann::json certificate_json(const Certificate& c);
nlohmann::json report_json(const ClassificationReport& r, const std::string& group_text);
/// Indented certificate tree for --explain.
std::string explain(const Certificate& c, int indent = 0);

/// One JSON file per automorphism group, keyed by fingerprint, catalog id
/// and multiplication table. Loads are re-checked; anything unreadable or
/// inconsistent is a miss.
class FileCache : public AutStore {
 public:
  static constexpr int kSchemaVersion = 1;

  FileCache(std::filesystem::path dir, std::ostream& warnings);
  std::optional<std::vector<Perm>> load(const AbstractGroup& n) override;
  void store(const AbstractGroup& n, const std::vector<Perm>& generators, std::uint64_t order) override;

  std::filesystem::path path_for(const AbstractGroup& n) const;
  std::size_t hits() const noexcept { return hits_; }
  std::size_t misses() const noexcept { return misses_; }

 private:
  std::filesystem::path dir_;
  std::ostream& warn_;
  std::size_t hits_ = 0, misses_ = 0;
};

/// Entry point for the hgc executable. Exit codes: 0 success, 1 usage or
/// parse error, 2 some result inconclusive.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hgc::cli
