#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hgc/group.hpp"
#include "hgc/holo.hpp"
#include "hgc/perm_group.hpp"

namespace hgc {

enum class Verdict { Occurs, RuledOut, Inconclusive };
const char* to_string(Verdict v);

/// Action of G on the left cosets of a subgroup. Cosets are numbered by
/// ascending smallest member, so the coset of the identity is point 0.
struct CosetAction {
  GroupPtr group;
  Subgroup subgroup;
  std::size_t degree = 0;
  std::vector<std::vector<Elem>> cosets;
  std::vector<Perm> lambda;  // image of every element of G
  PermGroup image;
  std::size_t kernel_order = 0;

  bool faithful() const { return kernel_order == 1; }
};

CosetAction coset_action(GroupPtr g, const Subgroup& sub);

enum class Constraint { None, Transitive, Regular, StabilizerMatches };
const char* to_string(Constraint c);

/// An injective homomorphism from `domain` into a permutation group,
/// recorded by the images of a generating sequence (and, for convenience,
/// of every element).
struct Embedding {
  GroupPtr domain;
  std::vector<Elem> generators;
  std::vector<Perm> images;
  std::vector<Perm> images_all;
  Constraint constraint = Constraint::None;
};

struct EmbeddingQuery {
  Constraint constraint = Constraint::None;
  /// G' for Constraint::StabilizerMatches.
  Subgroup stabilizer;
  /// Enumerate every embedding; otherwise stop at the first accepted one
  /// and try the first generator only up to conjugacy in H.
  bool all = false;
  /// Candidate assignments allowed; 0 = unlimited.
  std::uint64_t budget = 0;
  /// Extra acceptance test. In existence mode it must be invariant under
  /// conjugation by H.
  std::function<bool(const Embedding&)> accept;
};

struct EmbeddingResult {
  std::vector<Embedding> found;
  bool budget_exhausted = false;
  std::uint64_t nodes = 0;
};

EmbeddingResult find_embeddings(GroupPtr g, const PermGroup& h, const EmbeddingQuery& query);

/// Re-checks a witness: homomorphism on all pairs, injectivity, image in h,
/// and the constraint.
bool verify_embedding(const Embedding& e, const PermGroup& h, Constraint c, const Subgroup& stabilizer = {});

struct ByottResult {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Embedding> witness;
  std::uint64_t hol_order = 0;
  std::uint64_t nodes = 0;
};

/// Is there an embedding of G into Hol(N) with transitive image whose
/// point-0 stabilizer is the image of G' (up to an automorphism of G)?
ByottResult byott_exists(GroupPtr g, const Subgroup& sub, GroupPtr n, std::uint64_t budget = 0);

/// A regular subgroup of Sym(d) normalized by lambda(G).
struct HGStructure {
  PermGroup n_perm;
  /// n_x for every point x: the unique element mapping 0 to x.
  std::vector<Perm> elements;
  /// Catalog entry isomorphic to n_perm.
  GroupPtr type;
};

/// The group on points whose product is x * y = n_x(y).
AbstractGroup structure_group(const std::vector<Perm>& elements);

/// Every regular subgroup of Sym(d), each as its list n_x; memoized.
const std::vector<std::vector<Perm>>& regular_subgroups(std::size_t degree);

constexpr std::size_t kGpDegreeCap = 8;
/// All Hopf Galois structures on the degree-[G:G'] subextension: regular
/// subgroups of Sym(d) normalized by lambda(G). Degrees above 8 need
/// max_degree raised (at most 10) and print a warning.
std::vector<HGStructure> gp_enumerate(GroupPtr g, const Subgroup& sub, std::size_t max_degree = kGpDegreeCap);

/// Subgroups of the structure's N (as point sets: subgroup K <-> {x : n_x in K})
/// stable under conjugation by `a`, sorted by order. |N| <= 24.
std::vector<Subgroup> stable_subgroups(const HGStructure& s, const PermGroup& a);

}  // namespace hgc
