#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "hgc/catalog.hpp"
#include "hgc/construct.hpp"
#include "hgc/hgs.hpp"
#include "hgc/holo.hpp"

using namespace hgc;

namespace {

GroupPtr ptr(AbstractGroup g) { return std::make_shared<AbstractGroup>(std::move(g)); }

std::vector<std::size_t> supported_orders() {
  std::vector<std::size_t> v;
  for (std::size_t n = 1; n <= 16; ++n) v.push_back(n);
  for (std::size_t n : {24, 40, 60, 120}) v.push_back(n);
  return v;
}

}  // namespace

TEST_CASE("left and right regular representations") {
  for (std::size_t n : supported_orders())
    for (const auto& g : catalog(n)) {
      const RegularRep r = regular_rep(g);
      CHECK(is_regular(r.left));
      CHECK(is_regular(r.right));
      CHECK(r.left.order() == n);
      for (const auto& a : r.left.generators())
        for (const auto& b : r.right.generators()) CHECK(a * b == b * a);
      // The two coincide exactly when the group is abelian.
      CHECK(r.left.same_group(r.right) == g->is_abelian());
    }
}

TEST_CASE("holomorph orders") {
  CHECK(holomorph(cyclic(4))->hol_order == 8);
  CHECK(holomorph(cyclic(5))->hol_order == 20);
  CHECK(holomorph(cyclic(6))->hol_order == 12);
  CHECK(holomorph(elementary_abelian(4))->hol_order == 24);
  CHECK(holomorph(elementary_abelian(8))->hol_order == 8 * 168);
  CHECK(holomorph(alternating(5))->hol_order == 7200);
  CHECK(holomorph(special_linear2(5))->hol_order == 120 * 120);
  for (std::size_t n : {8, 12, 24, 60})
    for (const auto& g : catalog(n)) {
      const auto h = holomorph(g);
      CHECK(h->hol_order == n * h->aut_order);
      CHECK(h->hol.order() == h->hol_order);
      CHECK(h->aut.order() == h->aut_order);
      for (const auto& a : h->aut.generators()) {
        CHECK(a(0) == 0);
        CHECK(is_automorphism(*g, a));
      }
      CHECK(normalizes(h->hol, h->left));
      CHECK(normalizes(h->hol, regular_rep(g).right));
    }
  CHECK_FALSE(is_automorphism(cyclic(4), Perm(std::vector<Point>{0, 2, 1, 3})));
}

TEST_CASE("no group of order 12 has a holomorph of order divisible by 60") {
  for (const auto& g : catalog(12)) CHECK(holomorph(g)->hol_order % 60 != 0);
}

TEST_CASE("holomorph equality") {
  CHECK(holomorph_equal(dicyclic(3), dihedral(12)));
  CHECK(holomorph_equal(dihedral(12), dicyclic(3)));
  CHECK_FALSE(holomorph_equal(cyclic(12), dihedral(12)));
  CHECK_FALSE(holomorph_equal(alternating(4), dihedral(12)));
  CHECK(holomorph_equal(cyclic(6), symmetric(3)) == false);
  CHECK(holomorph_equal(cyclic(7), cyclic(7)));
  CHECK_FALSE(holomorph_equal(cyclic(4), cyclic(5)));
}

TEST_CASE("Hol(A5) has exactly two regular subgroups isomorphic to A5") {
  const GroupPtr a5 = ptr(alternating(5));
  const auto h = holomorph(a5);
  EmbeddingQuery q;
  q.constraint = Constraint::Regular;
  q.all = true;
  const auto res = find_embeddings(a5, h->hol, q);
  REQUIRE_FALSE(res.budget_exhausted);
  // Each image is hit once per automorphism of A5.
  CHECK(res.found.size() == 2 * 120);
  std::set<std::vector<Perm>> images;
  for (const auto& e : res.found) {
    auto img = e.images_all;
    std::sort(img.begin(), img.end());
    images.insert(img);
  }
  CHECK(images.size() == 2);
  std::set<std::vector<Perm>> expected;
  const RegularRep rep = regular_rep(a5);
  for (const PermGroup* p : {&rep.left, &rep.right}) {
    auto e = p->elements();
    std::sort(e.begin(), e.end());
    expected.insert(e);
  }
  CHECK(images == expected);
}

TEST_CASE("holomorph orders agree with brute-force closure up to 2000") {
  std::size_t checked = 0;
  for (std::size_t n : supported_orders())
    for (const auto& g : catalog(n)) {
      const auto h = holomorph(g);
      if (h->hol_order > 2000) continue;
      CHECK(brute_force_closure(n, h->hol.generators()).size() == h->hol_order);
      ++checked;
    }
  CHECK(checked > 50);
}

TEST_CASE("memoized by table") {
  const auto a = holomorph(symmetric(4));
  const auto b = holomorph(symmetric(4));
  CHECK(a.get() == b.get());
}
