#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "hgc/catalog.hpp"
#include "hgc/construct.hpp"
#include "hgc/hgs.hpp"
#include "hgc/holo.hpp"

using namespace hgc;

namespace {

GroupPtr ptr(AbstractGroup g) { return std::make_shared<AbstractGroup>(std::move(g)); }

std::map<std::string, std::size_t> type_counts(const std::vector<HGStructure>& v) {
  std::map<std::string, std::size_t> m;
  for (const auto& s : v) ++m[s.type->display_name()];
  return m;
}

Subgroup order_subgroup(const AbstractGroup& g, std::size_t order) {
  for (const auto& s : all_subgroups(g))
    if (s.size() == order) return s;
  throw Error("no subgroup of that order");
}

}  // namespace

TEST_CASE("coset actions") {
  const GroupPtr s4 = ptr(symmetric(4));
  const auto on_s3 = coset_action(s4, order_subgroup(*s4, 6));
  CHECK(on_s3.degree == 4);
  CHECK(on_s3.faithful());
  CHECK(on_s3.image.order() == 24);
  CHECK(on_s3.cosets[0].front() == 0);
  const auto on_a4 = coset_action(s4, derived_subgroup(*s4));
  CHECK(on_a4.degree == 2);
  CHECK(on_a4.kernel_order == 12);
  const auto reg = coset_action(s4, {0});
  CHECK(reg.degree == 24);
  CHECK(is_regular(reg.image));
  for (Elem x = 0; x < 24; ++x)
    for (Elem y = 0; y < 24; ++y) CHECK(reg.lambda[s4->mul(x, y)] == reg.lambda[x] * reg.lambda[y]);
}

TEST_CASE("regular subgroups of small symmetric groups") {
  const std::vector<std::size_t> expected{1, 1, 1, 4, 6, 80, 120, 2760};
  for (std::size_t d = 1; d <= 8; ++d) CHECK(regular_subgroups(d).size() == expected[d - 1]);
  for (const auto& r : regular_subgroups(6)) {
    REQUIRE(r.size() == 6);
    for (Point x = 0; x < 6; ++x) CHECK(r[x](0) == x);
    CHECK(satisfies_group_axioms(structure_group(r).table(), 6));
  }
}

TEST_CASE("gp_enumerate examples") {
  const GroupPtr s4 = ptr(symmetric(4));
  const auto c3 = order_subgroup(*s4, 3);
  const auto counts = type_counts(gp_enumerate(s4, c3));
  CHECK(counts == std::map<std::string, std::size_t>{{"E8", 4}});

  const GroupPtr s3 = ptr(symmetric(3));
  const auto on_s3 = type_counts(gp_enumerate(s3, {0}));
  CHECK(on_s3 == std::map<std::string, std::size_t>{{"C6", 3}, {"S3", 2}});

  const GroupPtr a4 = ptr(alternating(4));
  const auto on_a4 = type_counts(gp_enumerate(a4, order_subgroup(*a4, 3)));
  CHECK(on_a4.count("V4"));
  CHECK_FALSE(on_a4.count("C4"));

  const GroupPtr c5 = ptr(cyclic(5));
  CHECK(type_counts(gp_enumerate(c5, {0})) == std::map<std::string, std::size_t>{{"C5", 1}});

  CHECK_THROWS_AS(gp_enumerate(ptr(cyclic(9)), {0}), Error);
  CHECK_THROWS_AS(gp_enumerate(ptr(cyclic(11)), {0}, 11), Error);
}

TEST_CASE("byott_exists examples") {
  const GroupPtr a4 = ptr(alternating(4));
  const auto c3 = order_subgroup(*a4, 3);
  const auto yes = byott_exists(a4, c3, ptr(elementary_abelian(4)));
  CHECK(yes.verdict == Verdict::Occurs);
  REQUIRE(yes.witness.has_value());
  CHECK(yes.hol_order == 24);
  const auto h = holomorph(elementary_abelian(4));
  CHECK(verify_embedding(*yes.witness, h->hol, Constraint::StabilizerMatches, c3));
  CHECK(byott_exists(a4, c3, ptr(cyclic(4))).verdict == Verdict::RuledOut);
  CHECK(byott_exists(ptr(symmetric(3)), {0}, ptr(cyclic(6))).verdict == Verdict::Occurs);
  CHECK(byott_exists(ptr(cyclic(4)), {0}, ptr(elementary_abelian(4))).verdict == Verdict::Occurs);
  CHECK(byott_exists(ptr(cyclic(8)), {0}, ptr(quaternion8())).verdict == Verdict::Occurs);
  CHECK(byott_exists(ptr(cyclic(15)), {0}, ptr(cyclic(15))).verdict == Verdict::Occurs);
  const auto starved = byott_exists(ptr(special_linear2(3)), {0}, ptr(symmetric(4)), 1);
  CHECK(starved.verdict == Verdict::Inconclusive);
}

TEST_CASE("verify_embedding rejects tampered witnesses") {
  const GroupPtr s3 = ptr(symmetric(3));
  const auto r = byott_exists(s3, {0}, ptr(cyclic(6)));
  REQUIRE(r.witness.has_value());
  const auto h = holomorph(cyclic(6));
  CHECK(verify_embedding(*r.witness, h->hol, Constraint::Regular));
  Embedding bad = *r.witness;
  bad.images_all[1] = Perm(6);
  CHECK_FALSE(verify_embedding(bad, h->hol, Constraint::None));
  Embedding outside = *r.witness;
  for (auto& p : outside.images_all) p = Perm::from_cycles(6, {{0, 1}}) * p * Perm::from_cycles(6, {{0, 1}});
  outside.images = outside.images_all;
  CHECK_FALSE(verify_embedding(outside, h->hol, Constraint::None));
}

TEST_CASE("find_embeddings budget and enumeration") {
  const GroupPtr c4 = ptr(cyclic(4));
  const auto h = holomorph(cyclic(4));
  EmbeddingQuery q;
  q.all = true;
  const auto all = find_embeddings(c4, h->hol, q);
  // Elements of order 4 in Hol(C4) = D8.
  CHECK(all.found.size() == 2);
  q.constraint = Constraint::Regular;
  CHECK(find_embeddings(c4, h->hol, q).found.size() == 2);
  EmbeddingQuery tiny;
  tiny.budget = 1;
  tiny.constraint = Constraint::Transitive;
  const auto cut = find_embeddings(ptr(special_linear2(3)), holomorph(symmetric(4))->hol, tiny);
  CHECK(cut.budget_exhausted);
}

TEST_CASE("GP and Byott agree for |G| <= 24 and degree <= 8") {
  std::size_t pairs = 0;
  for (std::size_t n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 24})
    for (const auto& g : catalog(n))
      for (const auto& cls : subgroup_classes(*g, all_subgroups(*g))) {
        const Subgroup& sub = cls.front();
        const std::size_t d = n / sub.size();
        if (d > kGpDegreeCap || core(*g, sub).size() != 1) continue;
        std::set<const AbstractGroup*> gp;
        for (const auto& s : gp_enumerate(g, sub)) gp.insert(s.type.get());
        for (const auto& t : catalog(d)) {
          const auto b = byott_exists(g, sub, t);
          REQUIRE(b.verdict != Verdict::Inconclusive);
          CHECK_MESSAGE((b.verdict == Verdict::Occurs) == (gp.count(t.get()) > 0),
                        g->display_name(), " sub order ", sub.size(), " type ", t->display_name());
          ++pairs;
        }
      }
  CHECK(pairs > 100);
}

TEST_CASE("stable subgroups of the two S3 structures") {
  const GroupPtr s3 = ptr(symmetric(3));
  const auto act = coset_action(s3, {0});
  std::multiset<std::size_t> counts;
  for (const auto& s : gp_enumerate(s3, {0}))
    if (s.type->display_name() == "S3") counts.insert(stable_subgroups(s, act.image).size());
  // lambda(S3) has its 3 normal subgroups stable; rho(S3) commutes with
  // lambda so all 6 subgroups are.
  CHECK(counts == std::multiset<std::size_t>{3, 6});
}
