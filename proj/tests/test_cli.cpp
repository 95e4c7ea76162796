#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hgc/catalog.hpp"
#include "hgc/cli.hpp"

using namespace hgc;
using namespace hgc::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run hgc_run(std::vector<std::string> args) {
  args.insert(args.begin(), "hgc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t parse_error_at(std::string_view text) {
  try {
    parse_group_expr(text);
  } catch (const ParseError& e) {
    return e.position;
  }
  return std::string::npos;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("hgc-test-" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("group expressions") {
  CHECK(identify(construct(parse_group_expr("C3xV4")))->display_name() == "C3xV4");
  CHECK(identify(construct(parse_group_expr(" S3 x C2 ")))->display_name() == "D12");
  CHECK(identify(construct(parse_group_expr("SL(2,3)")))->display_name() == "SL(2,3)");
  CHECK(identify(construct(parse_group_expr("o24#3")))->display_name() == "A4xC2");
  CHECK(identify(construct(parse_group_expr("Dic3xC2")))->display_name() == "Dic3xC2");
  CHECK(construct(parse_group_expr("E8")).order() == 8);
  CHECK(parse_error_at("D7") == 0);
  CHECK(parse_error_at("C3xQ9") == 3);
  CHECK(parse_error_at("C3x") == 3);
  CHECK(parse_error_at("") == 0);
  CHECK(parse_error_at("o24#99") == 4);
  CHECK(parse_error_at("SL(2,7)") == 0);
  CHECK(parse_error_at("C3 ! C4") != std::string::npos);
}

TEST_CASE("every named catalog group and id round-trips") {
  for (std::size_t n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 24, 40, 60, 120})
    for (const auto& g : catalog(n)) {
      CHECK(identify(construct(parse_group_expr(type_id(*g)))).get() == g.get());
      if (!g->names.empty())
        CHECK_MESSAGE(identify(construct(parse_group_expr(g->display_name()))).get() == g.get(), g->display_name());
    }
}

TEST_CASE("subgroup specs") {
  const AbstractGroup s4 = symmetric(4);
  CHECK(parse_subgroup_spec(s4, "C3").size() == 3);
  CHECK(parse_subgroup_spec(s4, "V4@1").size() == 4);
  CHECK(parse_subgroup_spec(s4, "V4@2").size() == 4);
  CHECK(parse_subgroup_spec(s4, "V4@1") != parse_subgroup_spec(s4, "V4@2"));
  CHECK(parse_subgroup_spec(s4, "<1>").size() >= 2);
  CHECK_THROWS_AS(parse_subgroup_spec(s4, "V4@3"), Error);
  CHECK_THROWS_AS(parse_subgroup_spec(s4, "C5"), Error);
  CHECK_THROWS_AS(parse_subgroup_spec(s4, "<99>"), Error);
}

TEST_CASE("catalog, aut, hol and holeq commands") {
  const auto cat = hgc_run({"catalog", "12"});
  CHECK(cat.code == 0);
  CHECK(cat.out.find("Dic3") != std::string::npos);
  const auto js = hgc_run({"catalog", "24", "--json"});
  CHECK(js.code == 0);
  CHECK(nlohmann::json::parse(js.out).at("groups").size() == 15);
  CHECK(hgc_run({"catalog", "17"}).code == 1);
  CHECK(hgc_run({"hol", "C4"}).out.find("8") != std::string::npos);
  CHECK(hgc_run({"aut", "E8"}).out.find("168") != std::string::npos);
  CHECK(hgc_run({"holeq", "Dic3", "D12"}).out.find("true") != std::string::npos);
  CHECK(hgc_run({"holeq", "C12", "D12"}).out.find("false") != std::string::npos);
  CHECK(hgc_run({"frobnicate"}).code != 0);
}

TEST_CASE("embed and gp commands") {
  const auto none = hgc_run({"embed", "--from", "S5", "--into", "hol(SL(2,5))", "--transitive"});
  CHECK(none.code == 0);
  CHECK(none.out.find("none") != std::string::npos);
  const auto some = hgc_run({"embed", "--from", "A4", "--into", "hol(V4)", "--stab", "C3"});
  CHECK(some.code == 0);
  CHECK(some.out.find("none") == std::string::npos);
  const auto cut = hgc_run({"embed", "--from", "SL(2,3)", "--into", "hol(S4)", "--regular", "--budget", "1"});
  CHECK(cut.code == 2);
  CHECK(hgc_run({"embed", "--from", "C3", "--into", "C3", "--regular"}).code == 1);
  CHECK(hgc_run({"embed", "--from", "C3", "--into", "hol(C3)", "--regular", "--transitive"}).code != 0);
  const auto gp = hgc_run({"gp", "--group", "S4", "--subgroup", "C3"});
  CHECK(gp.code == 0);
  CHECK(gp.out.find("E8") != std::string::npos);
  const auto gp6 = hgc_run({"gp", "--group", "S3", "--index", "6"});
  CHECK(gp6.out.find("C6") != std::string::npos);
  CHECK(hgc_run({"gp", "--group", "C12", "--index", "12"}).code == 1);
}

TEST_CASE("classify command") {
  const auto a4 = hgc_run({"classify", "A4"});
  CHECK(a4.code == 0);
  CHECK(a4.out.find("occurs: A4 C3xV4") != std::string::npos);
  const auto js = hgc_run({"classify", "A4", "--json"});
  REQUIRE(js.code == 0);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j.at("order") == 12);
  std::vector<std::string> occurs;
  for (const auto& t : j.at("types"))
    if (t.at("status") == "occurs") occurs.push_back(t.at("names").at(0));
  CHECK(occurs == std::vector<std::string>{"A4", "C3xV4"});
  const auto ex = hgc_run({"classify", "A4", "--explain"});
  CHECK(ex.out.find("kktu_rule") != std::string::npos);
  const auto starved = hgc_run({"classify", "S4", "--budget", "1"});
  CHECK(starved.code == 2);
  CHECK(starved.err.find("INCONCLUSIVE") != std::string::npos);
  const auto bad = hgc_run({"classify", "D7"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("position 0") != std::string::npos);
  CHECK(hgc_run({"classify", "C17"}).code == 1);
}

TEST_CASE("JSON output is byte-identical across runs") {
  const auto a = hgc_run({"classify", "S4", "--json"});
  const auto b = hgc_run({"classify", "S4", "--json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("automorphism cache") {
  const fs::path dir = fresh_dir("cache");
  std::ostringstream warn;
  FileCache cache(dir, warn);
  const AbstractGroup q8 = quaternion8();
  CHECK_FALSE(cache.load(q8).has_value());
  CHECK(cache.misses() == 1);
  const PermGroup a = automorphisms(q8);
  cache.store(q8, a.generators(), a.order());
  CHECK(fs::exists(cache.path_for(q8)));
  const auto back = cache.load(q8);
  REQUIRE(back.has_value());
  CHECK(cache.hits() == 1);
  CHECK(PermGroup(8, *back).order() == 24);

  // A different table for the same group is a different entry.
  const bool distinct = cache.path_for(q8) != cache.path_for(dicyclic(2)) || q8.table() == dicyclic(2).table();
  CHECK(distinct);

  // Corrupted or mismatched entries are discarded with a warning.
  {
    std::ofstream(cache.path_for(q8)) << "{ not json";
  }
  CHECK_FALSE(cache.load(q8).has_value());
  CHECK(warn.str().find("discarding") != std::string::npos);
  cache.store(q8, a.generators(), a.order());
  {
    std::ifstream in(cache.path_for(q8));
    auto j = nlohmann::json::parse(in);
    j["schema"] = FileCache::kSchemaVersion + 1;
    std::ofstream(cache.path_for(q8)) << j.dump();
  }
  CHECK_FALSE(cache.load(q8).has_value());
  cache.store(q8, a.generators(), a.order());
  {
    std::ifstream in(cache.path_for(q8));
    auto j = nlohmann::json::parse(in);
    j["generators"][0][1] = 0;
    j["generators"][0][0] = 1;
    std::ofstream(cache.path_for(q8)) << j.dump();
  }
  CHECK_FALSE(cache.load(q8).has_value());
  fs::remove_all(dir);
}

TEST_CASE("the cache does not change results") {
  const fs::path dir = fresh_dir("transparent");
  // Automorphism groups are also memoized in-process, so the cold run must
  // use groups no earlier test touched.
  const auto cold = hgc_run({"--cache-dir", dir.string(), "classify", "C14", "--json"});
  CHECK(!fs::is_empty(dir));
  const auto warm = hgc_run({"--cache-dir", dir.string(), "classify", "C14", "--json"});
  const auto plain = hgc_run({"classify", "C14", "--json"});
  CHECK(plain.out == cold.out);
  CHECK(cold.out == warm.out);
  CHECK(warm.err.empty());
  fs::remove_all(dir);
}
