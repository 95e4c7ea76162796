#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hgc/perm.hpp"
#include "hgc/perm_group.hpp"

namespace hgc {

using Elem = std::uint32_t;

/// Sorted list of element indices closed under multiplication.
using Subgroup = std::vector<Elem>;

/// Isomorphism invariants of a finite group. Equal fingerprints are
/// necessary, not sufficient, for isomorphism.
struct Fingerprint {
  std::size_t order = 0;
  std::map<std::uint32_t, std::size_t> element_orders;  // order -> count
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  std::vector<std::uint64_t> abelian_invariants;  // of G/G', invariant factors
  std::map<std::uint32_t, bool> sylow_normal;      // prime -> normal Sylow?
  std::map<std::size_t, std::size_t> class_sizes;  // class size -> count

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  std::string to_string() const;
  /// Stable 64-bit digest of to_string().
  std::uint64_t digest() const;
};

/// A finite group on element indices 0..n-1 given by its multiplication
/// table; element 0 is the identity.
class AbstractGroup {
 public:
  AbstractGroup() : AbstractGroup(std::vector<Elem>{0}, 1) {}
  /// table[a * n + b] = a*b. Axioms are checked when `verify` is set.
  AbstractGroup(std::vector<Elem> table, std::size_t order, bool verify = true);

  /// Elements given as distinct permutations closed under composition; the
  /// identity must come first.
  static AbstractGroup from_perms(const std::vector<Perm>& elements);

  std::size_t order() const noexcept { return n_; }
  Elem mul(Elem a, Elem b) const noexcept { return table_[a * n_ + b]; }
  Elem inv(Elem a) const noexcept { return inverse_[a]; }
  std::uint32_t element_order(Elem a) const noexcept { return orders_[a]; }
  const std::vector<Elem>& table() const noexcept { return table_; }
  bool is_abelian() const;

  const Fingerprint& fingerprint() const;

  // Display metadata.
  std::vector<std::string> names;
  std::optional<std::string> catalog_id;
  /// Free-form structural description, e.g. "C3:C8 [action 1]".
  std::string structure;

  std::string display_name() const;

 private:
  struct FingerprintSlot {
    std::once_flag once;
    std::unique_ptr<const Fingerprint> value;
  };

  std::size_t n_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::uint32_t> orders_;
  std::shared_ptr<FingerprintSlot> fp_;
};

using GroupPtr = std::shared_ptr<const AbstractGroup>;

/// Exhaustive associativity / identity / inverse check.
bool satisfies_group_axioms(const std::vector<Elem>& table, std::size_t n);

/// Left regular representation x -> g*x of every element.
std::vector<Perm> left_regular_perms(const AbstractGroup& g);
/// Right regular representation x -> x*g^-1 of every element.
std::vector<Perm> right_regular_perms(const AbstractGroup& g);

Subgroup generated_subgroup(const AbstractGroup& g, const std::vector<Elem>& gens);
bool is_subgroup(const AbstractGroup& g, const Subgroup& s);
bool is_normal(const AbstractGroup& g, const Subgroup& s);
Subgroup conjugate_subgroup(const AbstractGroup& g, const Subgroup& s, Elem x);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
Subgroup normal_closure(const AbstractGroup& g, const Subgroup& s);
Subgroup center(const AbstractGroup& g);
Subgroup derived_subgroup(const AbstractGroup& g);
Subgroup core(const AbstractGroup& g, const Subgroup& s);
bool is_solvable(const AbstractGroup& g);

/// Conjugacy classes, each sorted, listed by smallest element.
std::vector<std::vector<Elem>> conjugacy_classes(const AbstractGroup& g);
/// Size of the conjugacy class of each element.
std::vector<std::size_t> class_size_of(const AbstractGroup& g);

/// Every subgroup, sorted by (order, elements).
std::vector<Subgroup> all_subgroups(const AbstractGroup& g);
std::vector<Subgroup> normal_subgroups(const AbstractGroup& g);
/// Conjugacy classes of a list of subgroups (each class sorted, classes by
/// their first member).
std::vector<std::vector<Subgroup>> subgroup_classes(const AbstractGroup& g,
                                                    const std::vector<Subgroup>& subgroups);

std::optional<Subgroup> sylow_normal(const AbstractGroup& g, std::uint32_t p);
/// The normal subgroup of index d when it is the only one of that index.
std::optional<Subgroup> unique_normal_of_index(const AbstractGroup& g, std::size_t d);
bool is_core_free(const AbstractGroup& g, const Subgroup& s);
/// Normal subgroups H with H meet S = 1 and |H||S| = |G|.
std::vector<Subgroup> normal_complements(const AbstractGroup& g, const Subgroup& s);

/// Quotient by a normal subgroup; cosets are numbered by ascending smallest
/// member, so the coset of the identity is 0.
AbstractGroup quotient(const AbstractGroup& g, const Subgroup& n);
/// Group structure induced on a subgroup, elements renumbered in the
/// subgroup's sorted order.
AbstractGroup subgroup_as_group(const AbstractGroup& g, const Subgroup& s);

std::vector<std::uint32_t> prime_factors(std::uint64_t n);
/// Invariant factors d1 | d2 | ... of an abelian group, from element orders.
std::vector<std::uint64_t> abelian_invariants(const AbstractGroup& g);

}  // namespace hgc
