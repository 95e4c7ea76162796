#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "hgc/group.hpp"
#include "hgc/perm_group.hpp"

namespace hgc {

/// Left and right regular representations on the element indices.
struct RegularRep {
  GroupPtr source;
  PermGroup left;   // x -> g x
  PermGroup right;  // x -> x g^-1
};

RegularRep regular_rep(GroupPtr n);

/// Persistent store for automorphism groups (implemented by the CLI cache).
/// Loaded generators are re-verified before use.
class AutStore {
 public:
  virtual ~AutStore() = default;
  virtual std::optional<std::vector<Perm>> load(const AbstractGroup& n) = 0;
  virtual void store(const AbstractGroup& n, const std::vector<Perm>& generators, std::uint64_t order) = 0;
};

/// Installs a process-wide store; nullptr disables it.
void set_aut_store(AutStore* store);

/// Aut(N) acting on element indices (every element fixes 0). Computed by
/// backtracking over images of a generating sequence; throws
/// BudgetExhausted if the node budget runs out.
PermGroup automorphisms(const AbstractGroup& n, std::uint64_t budget = 0);

/// True iff p fixes 0 and preserves the multiplication of n.
bool is_automorphism(const AbstractGroup& n, const Perm& p);

struct Holomorph {
  GroupPtr source;
  PermGroup left;  // lambda(N)
  PermGroup aut;
  PermGroup hol;   // <lambda(N), Aut(N)>
  std::uint64_t aut_order = 0;
  std::uint64_t hol_order = 0;
};

/// Memoized per group (keyed by multiplication table).
std::shared_ptr<const Holomorph> holomorph(GroupPtr n);
inline std::shared_ptr<const Holomorph> holomorph(const AbstractGroup& n) {
  return holomorph(std::make_shared<AbstractGroup>(n));
}

/// Hol(N1) and Hol(N2) coincide after identifying the points of Hol(N1)
/// with the elements of some regular subgroup R of Hol(N1) isomorphic to N2.
bool holomorph_equal(const AbstractGroup& n1, const AbstractGroup& n2);

}  // namespace hgc
