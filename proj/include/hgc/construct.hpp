#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "hgc/group.hpp"

namespace hgc {

// Named families. Parameters follow the display conventions: D(n) has order
// n, Dic(n) has order 4n.
AbstractGroup cyclic(std::size_t n);
AbstractGroup dihedral(std::size_t n);
AbstractGroup dicyclic(std::size_t n);
/// Elementary abelian group of order q = p^k.
AbstractGroup elementary_abelian(std::size_t q);
AbstractGroup symmetric(std::size_t k);
AbstractGroup alternating(std::size_t k);
AbstractGroup quaternion8();
/// SL(2, p) for a prime p, as 2x2 matrices mod p.
AbstractGroup special_linear2(std::size_t p);

/// Elements of Sym(k) / Alt(k) in the order used by symmetric()/alternating().
std::vector<Perm> symmetric_elements(std::size_t k);
std::vector<Perm> alternating_elements(std::size_t k);

/// (a, b) is element a + |A| * b.
AbstractGroup direct_product(const AbstractGroup& a, const AbstractGroup& b);

/// An action of H on P given by the automorphisms (as index permutations of
/// P, fixing 0) assigned to each listed generator of H.
struct SemidirectAction {
  std::vector<Elem> h_generators;
  std::vector<Perm> images;
};

/// P x| H with (p1, h1)(p2, h2) = (p1 * phi(h1)(p2), h1 h2); element (p, h)
/// is p + |P| * h. Throws Error if the action is not a homomorphism into
/// Aut(P).
AbstractGroup semidirect_product(const AbstractGroup& p, const AbstractGroup& h,
                                 const SemidirectAction& action);

/// Semidirect product from a full action table (phi(h) for every h).
AbstractGroup semidirect_product_full(const AbstractGroup& p, const AbstractGroup& h,
                                      const std::vector<Perm>& phi);

/// Constructor description for groups: named-family leaves, catalog ids,
/// direct and semidirect products.
struct GroupExpr {
  enum class Kind { Cyclic, Dihedral, Dicyclic, Elementary, V4, Alternating, Symmetric, Q8, SL23, SL25, CatalogId, Product, Semidirect };
  Kind kind = Kind::Cyclic;
  std::size_t param = 1;         // family parameter, or catalog order
  std::size_t index = 0;         // catalog index (1-based) for CatalogId
  std::vector<GroupExpr> children;  // Product / Semidirect operands
  SemidirectAction action;          // Semidirect only

  static GroupExpr leaf(Kind k, std::size_t param = 0) { return GroupExpr{k, param, 0, {}, {}}; }
  static GroupExpr product(GroupExpr a, GroupExpr b);

  /// Canonical text form, e.g. "C3xV4", "SL(2,3)", "o24#3".
  std::string to_string() const;
};

/// Builds the group; catalog ids are resolved through catalog().
AbstractGroup construct(const GroupExpr& expr);

/// Validates family parameters; throws Error with a description otherwise.
void check_leaf(GroupExpr::Kind kind, std::size_t param);

}  // namespace hgc
