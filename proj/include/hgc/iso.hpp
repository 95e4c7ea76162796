#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hgc/group.hpp"

namespace hgc {

/// Raised when a backtracking search runs out of its node budget. The
/// search result is unknown, never "none".
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

/// Greedy generating sequence: each step takes the element that enlarges
/// the generated subgroup most, preferring elements whose order is rarest,
/// then the smallest index.
std::vector<Elem> generating_sequence(const AbstractGroup& g);

/// Breadth-first evaluation of homomorphisms from words in a fixed
/// generating sequence.
class WordTree {
 public:
  WordTree(const AbstractGroup& g, std::vector<Elem> gens);

  const std::vector<Elem>& generators() const noexcept { return gens_; }
  /// Elements of <g_0 .. g_{j-1}> in BFS order.
  const std::vector<Elem>& prefix_elements(std::size_t j) const { return prefix_[j]; }
  std::size_t group_order() const noexcept { return order_; }

 private:
  std::size_t order_;
  std::vector<Elem> gens_;
  std::vector<std::vector<Elem>> prefix_;
};

struct HomSearchOptions {
  bool injective = false;
  /// Restrict images to elements with the same conjugacy class size
  /// (only sound for isomorphisms).
  bool match_class_sizes = false;
  /// Maximum number of candidate assignments tried; 0 = unlimited.
  std::uint64_t budget = 0;
};

/// Calls visit(map) for every homomorphism g -> h (map[x] = image of x), in
/// lexicographic order of generator-image indices. visit returns false to
/// stop. Throws BudgetExhausted.
void for_each_homomorphism(const AbstractGroup& g, const std::vector<Elem>& gens,
                           const AbstractGroup& h, const HomSearchOptions& options,
                           const std::function<bool(const std::vector<Elem>&)>& visit);

bool is_homomorphism(const AbstractGroup& g, const AbstractGroup& h, const std::vector<Elem>& map);

/// An isomorphism g -> h as an index bijection, or nullopt. Fingerprint
/// inequality short-circuits.
std::optional<std::vector<Elem>> find_isomorphism(const AbstractGroup& g, const AbstractGroup& h);
inline bool are_isomorphic(const AbstractGroup& g, const AbstractGroup& h) {
  return find_isomorphism(g, h).has_value();
}

/// Every automorphism, as index maps, sorted lexicographically (identity first).
std::vector<std::vector<Elem>> all_automorphisms(const AbstractGroup& g, std::uint64_t budget = 0);

}  // namespace hgc
