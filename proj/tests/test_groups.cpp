#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hgc/catalog.hpp"
#include "hgc/construct.hpp"
#include "hgc/group.hpp"
#include "hgc/hgs.hpp"
#include "hgc/iso.hpp"
#include "oracles.hpp"

using namespace hgc;

namespace {

std::size_t totient(std::size_t n) {
  std::size_t r = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    std::size_t a = k, b = n;
    while (b) std::swap(a %= b, b);
    if (a == 1) ++r;
  }
  return r;
}

std::vector<std::size_t> supported_orders() {
  std::vector<std::size_t> v;
  for (std::size_t n = 1; n <= 16; ++n) v.push_back(n);
  for (std::size_t n : {24, 40, 60, 120}) v.push_back(n);
  return v;
}

}  // namespace

TEST_CASE("family constructions") {
  CHECK(cyclic(7).is_abelian());
  CHECK(dihedral(8).order() == 8);
  CHECK_FALSE(dihedral(8).is_abelian());
  CHECK(dicyclic(3).order() == 12);
  CHECK(quaternion8().fingerprint() == dicyclic(2).fingerprint());
  CHECK(elementary_abelian(8).element_order(5) == 2);
  CHECK(symmetric(4).order() == 24);
  CHECK(alternating(5).order() == 60);
  CHECK(special_linear2(3).order() == 24);
  CHECK(special_linear2(5).order() == 120);
  CHECK(center(special_linear2(5)).size() == 2);
  CHECK_THROWS_AS(dihedral(7), Error);
  CHECK_THROWS_AS(elementary_abelian(6), Error);
  CHECK(satisfies_group_axioms(direct_product(symmetric(3), cyclic(4)).table(), 24));
  CHECK_FALSE(satisfies_group_axioms({0, 1, 1, 1}, 2));
}

TEST_CASE("the dicyclic relations hold in Dic_n") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const AbstractGroup g = dicyclic(n);
    // a = 1, x = 2n by the element numbering a^i x^j -> i + 2nj.
    const Elem a = 1, x = static_cast<Elem>(2 * n);
    CHECK(g.element_order(a) == 2 * n);
    Elem an = 0;
    for (std::size_t i = 0; i < n; ++i) an = g.mul(an, a);
    CHECK(g.mul(x, x) == an);
    CHECK(g.mul(g.mul(x, a), g.inv(x)) == g.inv(a));
  }
}

TEST_CASE("subgroup machinery") {
  const AbstractGroup s4 = symmetric(4);
  const auto subs = all_subgroups(s4);
  CHECK(subs.size() == 30);
  CHECK(normal_subgroups(s4).size() == 4);
  CHECK(subgroup_classes(s4, subs).size() == 11);
  CHECK(derived_subgroup(s4).size() == 12);
  CHECK(center(s4).size() == 1);
  CHECK(is_solvable(s4));
  CHECK_FALSE(is_solvable(alternating(5)));
  CHECK(all_subgroups(alternating(5)).size() == 59);
  CHECK(all_subgroups(symmetric(5)).size() == 156);
  CHECK(conjugacy_classes(symmetric(5)).size() == 7);
  CHECK(sylow_normal(alternating(4), 2).has_value());
  CHECK_FALSE(sylow_normal(alternating(4), 3).has_value());
  CHECK(unique_normal_of_index(cyclic(12), 3)->size() == 4);
  CHECK_FALSE(unique_normal_of_index(dihedral(12), 2).has_value());
  const auto v4 = *sylow_normal(alternating(4), 2);
  CHECK(quotient(alternating(4), v4).order() == 3);
  CHECK_THROWS_AS(quotient(symmetric(3), {0, 1}), Error);
  for (const auto& s : subs)
    if (s.size() == 6) CHECK(normal_complements(s4, s).size() == 1);
}

TEST_CASE("isomorphism search") {
  CHECK(are_isomorphic(direct_product(cyclic(2), cyclic(3)), cyclic(6)));
  CHECK_FALSE(are_isomorphic(direct_product(cyclic(2), cyclic(2)), cyclic(4)));
  CHECK(are_isomorphic(dihedral(6), symmetric(3)));
  CHECK(are_isomorphic(dihedral(12), direct_product(symmetric(3), cyclic(2))));
  CHECK_FALSE(are_isomorphic(dicyclic(3), dihedral(12)));
  CHECK_FALSE(are_isomorphic(special_linear2(3), symmetric(4)));
  const auto phi = find_isomorphism(alternating(4), special_linear2(3));
  CHECK_FALSE(phi.has_value());
  // One action permutation per element of the acting group.
  const AbstractGroup c4c2 = semidirect_product_full(cyclic(4), cyclic(2), {Perm(4), Perm(std::vector<Point>{0, 3, 2, 1})});
  const auto psi = find_isomorphism(dihedral(8), c4c2);
  REQUIRE(psi.has_value());
  CHECK(is_homomorphism(dihedral(8), c4c2, *psi));
}

TEST_CASE("automorphism counts") {
  for (std::size_t n = 1; n <= 16; ++n) CHECK(all_automorphisms(cyclic(n)).size() == totient(n));
  CHECK(all_automorphisms(symmetric(3)).size() == 6);
  CHECK(all_automorphisms(quaternion8()).size() == 24);
  CHECK(all_automorphisms(elementary_abelian(8)).size() == 168);
  CHECK(all_automorphisms(dihedral(8)).size() == 8);
  CHECK(all_automorphisms(symmetric(4)).size() == 24);
  CHECK(all_automorphisms(alternating(4)).size() == 24);
  CHECK(all_automorphisms(alternating(5)).size() == 120);
  const auto autos = all_automorphisms(dicyclic(3));
  CHECK(autos.front() == std::vector<Elem>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
  for (const auto& a : autos) CHECK(is_homomorphism(dicyclic(3), dicyclic(3), a));
  CHECK_THROWS_AS(all_automorphisms(elementary_abelian(16), 10), BudgetExhausted);
}

TEST_CASE("catalog counts") {
  const std::map<std::size_t, std::size_t> expected{{1, 1},  {2, 1},  {3, 1},  {4, 2},   {5, 1},  {6, 2},  {7, 1},
                                                    {8, 5},  {9, 2},  {10, 2}, {11, 1},  {12, 5}, {13, 1}, {14, 2},
                                                    {15, 1}, {16, 14}, {24, 15}, {40, 14}, {60, 13}, {120, 47}};
  for (const auto& [n, c] : expected) CHECK_MESSAGE(catalog(n).size() == c, "order ", n);
  std::size_t normal3 = 0;
  for (const auto& g : catalog(24)) normal3 += sylow_normal(*g, 3).has_value();
  CHECK(normal3 == 12);
  CHECK_THROWS_AS(catalog(17), Error);
  CHECK_THROWS_AS(catalog(0), Error);
}

TEST_CASE("catalog entries are pairwise non-isomorphic with stable ids") {
  for (std::size_t n : supported_orders()) {
    const auto& list = catalog(n);
    for (std::size_t i = 0; i < list.size(); ++i) {
      CHECK(list[i]->catalog_id == "o" + std::to_string(n) + "#" + std::to_string(i + 1));
      CHECK(identify(*list[i]).get() == list[i].get());
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(are_isomorphic(*list[i], *list[j]));
    }
  }
}

TEST_CASE("named order-24 and order-12 entries") {
  std::set<std::string> names;
  for (const auto& g : catalog(24)) names.insert(g->display_name());
  for (const char* want : {"S4", "SL(2,3)", "A4xC2", "Dic6", "C6xV4", "C2xC12", "C24", "Q8xC3", "D8xC3", "S3xV4",
                           "S3xC4", "Dic3xC2", "D24"})
    CHECK_MESSAGE(names.count(want), want);
  std::set<std::string> twelve;
  for (const auto& g : catalog(12)) twelve.insert(g->display_name());
  CHECK(twelve == std::set<std::string>{"A4", "Dic3", "C3xV4", "C12", "D12"});
  CHECK(identify(direct_product(symmetric(3), elementary_abelian(4)))->display_name() == "S3xV4");
  CHECK(identify(dicyclic(3))->display_name() == "Dic3");
}

TEST_CASE("construct resolves every catalog id") {
  for (std::size_t n : {8, 24}) {
    for (std::size_t i = 1; i <= catalog(n).size(); ++i) {
      GroupExpr e = GroupExpr::leaf(GroupExpr::Kind::CatalogId, n);
      e.index = i;
      CHECK(are_isomorphic(construct(e), *catalog(n)[i - 1]));
    }
  }
}

TEST_CASE("completeness oracle: Cayley tables up to order 8") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto tables = oracle::group_tables(n);
    std::vector<std::shared_ptr<AbstractGroup>> classes;
    for (const auto& t : tables) oracle::add_new(classes, AbstractGroup(t, n));
    CHECK_MESSAGE(classes.size() == catalog(n).size(), "order ", n);
    for (const auto& c : classes) CHECK(identify(*c) != nullptr);
    // Labelled tables with identity 0 number (n-1)!/|Aut G| per class and
    // coincide with the regular subgroups of Sym(n).
    std::size_t expected = 0, fact = 1;
    for (std::size_t k = 2; k < n; ++k) fact *= k;
    for (const auto& g : catalog(n)) expected += fact / all_automorphisms(*g).size();
    CHECK(tables.size() == expected);
    CHECK(regular_subgroups(n).size() == tables.size());
  }
}

TEST_CASE("completeness oracle: cyclic extensions") {
  for (std::size_t n : supported_orders()) {
    if (n == 120) continue;
    std::vector<std::shared_ptr<AbstractGroup>> found(oracle::solvable_groups(n));
    if (n == 60) oracle::add_new(found, alternating(5));
    std::set<const AbstractGroup*> hit;
    for (const auto& g : found) {
      const auto e = identify(*g);
      REQUIRE_MESSAGE(e != nullptr, "oracle group of order ", n, " missing from catalog");
      hit.insert(e.get());
    }
    CHECK_MESSAGE(hit.size() == catalog(n).size(), "order ", n);
    CHECK(found.size() == catalog(n).size());
  }
  // Order 120: extensions of every group of order 60, 40 and 24 by a prime
  // cyclic group, plus the perfect group SL(2,5).
  std::vector<std::shared_ptr<AbstractGroup>> e120;
  for (std::size_t p : {2, 3, 5})
    for (const auto& m : oracle::solvable_groups(120 / p)) oracle::cyclic_extensions(*m, p, e120);
  oracle::cyclic_extensions(alternating(5), 2, e120);
  oracle::add_new(e120, special_linear2(5));
  std::set<const AbstractGroup*> hit;
  for (const auto& g : e120) {
    const auto e = identify(*g);
    REQUIRE(e != nullptr);
    hit.insert(e.get());
  }
  CHECK(hit.size() == 47);
}

TEST_CASE("fingerprint digests are stable") {
  CHECK(symmetric(4).fingerprint().digest() == symmetric(4).fingerprint().digest());
  CHECK(symmetric(4).fingerprint() != special_linear2(3).fingerprint());
  CHECK(direct_product(cyclic(3), cyclic(4)).fingerprint() == cyclic(12).fingerprint());
}
