#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "hgc/perm.hpp"

namespace hgc {

/// Base and strong generating set for a permutation group, built by the
/// deterministic Schreier-Sims algorithm.
///
/// Level k holds the base point base[k], the strong generators fixing
/// base[0..k-1], and a transversal: for every point b in the orbit of
/// base[k], a group element mapping base[k] to b.
class StabilizerChain {
 public:
  struct Level {
    Point base = 0;
    std::vector<Perm> generators;
    std::vector<Point> orbit;
    std::vector<std::optional<Perm>> transversal;  // indexed by point
  };

  /// New base points are appended in ascending order of the smallest point
  /// moved by the sifted residue; base_prefix is used first.
  StabilizerChain(std::size_t degree, const std::vector<Perm>& generators,
                  const std::vector<Point>& base_prefix = {});

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Level>& levels() const noexcept { return levels_; }
  std::vector<Point> base() const;

  std::uint64_t order() const noexcept;
  bool contains(const Perm& p) const;

  /// Residue of p after sifting from level `from`; second is the level where
  /// sifting stopped (levels().size() when it went all the way through).
  std::pair<Perm, std::size_t> sift(const Perm& p, std::size_t from = 0) const;

  /// Every group element, as products of transversal elements.
  std::vector<Perm> elements() const;

 private:
  void rebuild_orbit(std::size_t k);

  std::size_t degree_;
  std::vector<Level> levels_;
};

/// A finitely generated permutation group. Chains are built lazily, once,
/// and shared between copies; a built group is immutable.
class PermGroup {
 public:
  PermGroup() : PermGroup(0, {}) {}
  PermGroup(std::size_t degree, std::vector<Perm> generators);

  static PermGroup symmetric(std::size_t degree);
  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Perm>& generators() const noexcept { return generators_; }
  const StabilizerChain& chain() const;

  std::uint64_t order() const { return chain().order(); }
  bool contains(const Perm& p) const { return chain().contains(p); }
  std::vector<Perm> elements() const { return chain().elements(); }

  /// Generators equal as sets of group elements (orders and mutual
  /// containment of generators).
  bool same_group(const PermGroup& other) const;
  bool is_subgroup_of(const PermGroup& other) const;

 private:
  struct ChainSlot {
    std::once_flag once;
    std::unique_ptr<const StabilizerChain> chain;
  };

  std::size_t degree_;
  std::vector<Perm> generators_;
  std::shared_ptr<ChainSlot> slot_;
};

/// Brute-force closure of a generating set; throws Error past `cap` elements.
/// Independent of StabilizerChain and used as its oracle.
std::vector<Perm> brute_force_closure(std::size_t degree,
                                      const std::vector<Perm>& generators,
                                      std::size_t cap = 1'000'000);

std::vector<std::vector<Point>> orbits(const PermGroup& g);
std::vector<Point> orbit(const PermGroup& g, Point x);
bool is_transitive(const PermGroup& g);
bool is_regular(const PermGroup& g);

PermGroup point_stabilizer(const PermGroup& g, Point x);

/// Smallest subgroup of `g` containing `gens` and normalized by `g`.
PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& gens);
PermGroup derived_subgroup(const PermGroup& g);
/// G, G', G'', ... ending at the first repeated (perfect) term.
std::vector<PermGroup> derived_series(const PermGroup& g);
bool is_solvable(const PermGroup& g);

/// True iff every generator of `a` conjugates every generator of `n` into n.
bool normalizes(const PermGroup& a, const PermGroup& n);

}  // namespace hgc
