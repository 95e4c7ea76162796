#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hgc/catalog.hpp"
#include "hgc/construct.hpp"
#include "hgc/criteria.hpp"

using namespace hgc;

namespace {

GroupPtr ptr(AbstractGroup g) { return std::make_shared<AbstractGroup>(std::move(g)); }

GroupPtr named(std::size_t order, const std::string& name) {
  for (const auto& g : catalog(order))
    if (g->display_name() == name) return g;
  throw Error("no catalog group " + name);
}

std::set<std::string> names(const std::vector<GroupPtr>& v) {
  std::set<std::string> s;
  for (const auto& g : v) s.insert(g->display_name());
  return s;
}

bool has_leaf(const Certificate& c, const std::string& rule, const std::string& key, const std::string& value) {
  bool found = false;
  for_each_node(c, [&](const Certificate& x) {
    if (x.rule == rule && x.facts.count(key) && x.facts.at(key) == value) found = true;
  });
  return found;
}

}  // namespace

TEST_CASE("order and solvable rules") {
  const GroupPtr c2 = named(2, "C2");
  CHECK_FALSE(order_rule(c2, {0}, c2).has_value());
  const auto a5 = named(60, "A5");
  const auto c60 = named(60, "C60");
  CHECK_FALSE(order_rule(a5, {0}, c60).has_value());
  Subgroup c5;
  for (const auto& x : all_subgroups(*a5))
    if (x.size() == 5) {
      c5 = x;
      break;
    }
  const auto o = order_rule(a5, c5, named(12, "C12"));
  REQUIRE(o.has_value());
  CHECK(o->verdict == Verdict::RuledOut);
  CHECK(o->facts.at("order_hol_N") == "48");
  const auto s = solvable_rule(a5, {0}, c60);
  REQUIRE(s.has_value());
  CHECK(s->facts.at("G_solvable") == "false");
  CHECK_FALSE(solvable_rule(named(12, "A4"), {0}, named(12, "C12")).has_value());
  CHECK_FALSE(solvable_rule(a5, {0}, a5).has_value());
  CHECK(verify_certificate(*o));
  CHECK(verify_certificate(*s));
}

TEST_CASE("classical and induced occurrences") {
  const GroupPtr s4 = named(24, "S4");
  const auto c = classical(s4, s4);
  CHECK(c.verdict == Verdict::Occurs);
  CHECK(verify_certificate(c));
  std::set<std::string> induced;
  for (const auto& x : induced_rule(s4)) {
    CHECK(x.verdict == Verdict::Occurs);
    CHECK(x.rule == "induced");
    std::string why;
    CHECK_MESSAGE(verify_certificate(x, &why), why);
    induced.insert(x.n->display_name());
  }
  CHECK(induced == std::set<std::string>{"A4xC2", "S3xV4", "C6xV4"});
  CHECK(induced_rule(named(12, "C12")).empty() == false);
  CHECK(induced_rule(named(60, "A5")).empty());
}

TEST_CASE("KKTU rule") {
  const GroupPtr a4 = named(12, "A4");
  CHECK_FALSE(kktu_rule(a4, named(12, "C3xV4")).has_value());
  const auto c12 = kktu_rule(a4, named(12, "C12"));
  REQUIRE(c12.has_value());
  CHECK(c12->verdict == Verdict::RuledOut);
  CHECK(verify_certificate(*c12));
  const GroupPtr a5 = named(60, "A5");
  for (const auto& n : catalog(60)) {
    if (n->display_name() == "A5") continue;
    const auto k = kktu_rule(a5, n);
    REQUIRE_MESSAGE(k.has_value(), n->display_name());
    CHECK(k->facts.at("method") == "order_rule");
    CHECK(k->facts.at("d") == "12");
    CHECK(k->facts.at("choice") == "normal_sylow");
    bool leaf_ok = false;
    for_each_node(*k, [&](const Certificate& x) {
      if (x.rule == "order_rule" && x.n->order() == 12) leaf_ok = leaf_ok || std::stoull(x.facts.at("order_hol_N")) % 60 != 0;
    });
    CHECK(leaf_ok);
    CHECK(verify_certificate(*k));
  }
}

TEST_CASE("holomorph transfer") {
  const GroupPtr a4 = named(12, "A4");
  const auto dic = kktu_rule(a4, named(12, "Dic3"));
  REQUIRE(dic.has_value());
  const auto t = holomorph_transfer_rule(a4, named(12, "D12"), *dic);
  REQUIRE(t.has_value());
  CHECK(t->verdict == Verdict::RuledOut);
  CHECK(t->facts.at("source") == "Dic3");
  CHECK(verify_certificate(*t));
  CHECK_FALSE(holomorph_transfer_rule(a4, named(12, "C12"), *dic).has_value());
}

TEST_CASE("cyclic rule for n = 5, 6") {
  for (std::size_t n : {5, 6})
    for (bool alt : {true, false}) {
      const auto c = cyclic_rule(n, alt);
      CHECK(c.verdict == Verdict::RuledOut);
      CHECK(c.facts.at("choice") == "point_stabilizer");
      CHECK(has_leaf(c, "order_rule", "order_hol_N", n == 5 ? "20" : "12"));
      std::string why;
      CHECK_MESSAGE(verify_certificate(c, &why), why);
    }
  CHECK_THROWS_AS(cyclic_rule(7, true), Error);
}

TEST_CASE("classify A4") {
  const auto r = classify(named(12, "A4"));
  CHECK(names(r.with_status(Verdict::Occurs)) == std::set<std::string>{"A4", "C3xV4"});
  CHECK(names(r.with_status(Verdict::RuledOut)) == std::set<std::string>{"C12", "Dic3", "D12"});
  std::string why;
  CHECK_MESSAGE(verify_report(r, &why), why);
  for (const auto& t : r.types)
    if (t.status == Verdict::Occurs) CHECK(t.witness.has_value());
}

TEST_CASE("classify S4") {
  const auto r = classify(named(24, "S4"));
  CHECK(names(r.with_status(Verdict::Occurs)) == std::set<std::string>{"S4", "A4xC2", "S3xV4", "C6xV4"});
  CHECK(r.with_status(Verdict::RuledOut).size() == 11);
  for (const auto& t : r.types)
    if (t.type->display_name() == "SL(2,3)") {
      CHECK(t.certificate.rule == "direct_search");
      CHECK(t.certificate.facts.at("result") == "exhausted");
    }
  std::string why;
  CHECK_MESSAGE(verify_report(r, &why), why);
}

TEST_CASE("tampered certificates fail verification") {
  const auto r = classify(named(12, "A4"));
  for (const auto& t : r.types) {
    Certificate c = t.certificate;
    REQUIRE(verify_certificate(c));
    c.verdict = c.verdict == Verdict::Occurs ? Verdict::RuledOut : Verdict::Occurs;
    CHECK_FALSE(verify_certificate(c));
    Certificate d = t.certificate;
    if (!d.facts.empty()) {
      d.facts.begin()->second += "0";
      CHECK_FALSE(verify_certificate(d));
    }
  }
  Certificate o = *solvable_rule(named(60, "A5"), {0}, named(60, "C60"));
  o.n = named(60, "A5");
  CHECK_FALSE(verify_certificate(o));
}

TEST_CASE("budget starvation is reported as inconclusive") {
  ClassifyOptions opts;
  opts.budget = 1;
  const auto r = classify(named(24, "S4"), opts);
  CHECK(r.any_inconclusive());
  for (const auto& t : r.types)
    if (t.status == Verdict::Inconclusive) CHECK(t.type->display_name() == "SL(2,3)");
}

TEST_CASE("soundness against direct enumeration for |G| <= 24") {
  std::size_t checked = 0;
  for (std::size_t n : {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 24})
    for (const auto& g : catalog(n)) {
      ClassifyOptions opts;
      opts.alternates = false;
      const auto r = classify(g, opts);
      REQUIRE_FALSE(r.any_inconclusive());
      std::set<std::string> gp;
      if (n <= kGpDegreeCap)
        for (const auto& s : gp_enumerate(g, {0})) gp.insert(s.type->display_name());
      for (const auto& t : r.types) {
        if (n <= kGpDegreeCap) {
          CHECK_MESSAGE((t.status == Verdict::Occurs) == (gp.count(t.type->display_name()) > 0), g->display_name(),
                        " / ", t.type->display_name());
        } else {
          const auto b = byott_exists(g, {0}, t.type);
          CHECK_MESSAGE(b.verdict == t.status, g->display_name(), " / ", t.type->display_name());
        }
        ++checked;
      }
      std::string why;
      CHECK_MESSAGE(verify_report(r, &why), why);
    }
  CHECK(checked > 400);
}

TEST_CASE("classification is deterministic") {
  const auto a = classify(named(24, "S4"));
  const auto b = classify(named(24, "S4"));
  REQUIRE(a.types.size() == b.types.size());
  for (std::size_t i = 0; i < a.types.size(); ++i) {
    CHECK(a.types[i].status == b.types[i].status);
    CHECK(a.types[i].certificate.rule == b.types[i].certificate.rule);
    CHECK(a.types[i].certificate.facts == b.types[i].certificate.facts);
  }
}
