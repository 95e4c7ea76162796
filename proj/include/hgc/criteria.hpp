#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hgc/group.hpp"
#include "hgc/hgs.hpp"

namespace hgc {

/// A derivation of one verdict: rule tag, the conclusion (G, G', N, verdict),
/// the computed facts the rule relied on and the sub-derivations it used.
///
/// Rule tags: classical, almost_classical, induced, order_rule,
/// solvable_rule, kktu_rule, holomorph_transfer, direct_search.
struct Certificate {
  std::string rule;
  Verdict verdict = Verdict::Inconclusive;
  GroupPtr g;
  Subgroup sub;  // G', as elements of g
  GroupPtr n;
  /// Rule-specific subgroup: N' for kktu_rule, the complement for
  /// almost_classical and induced.
  Subgroup aux;
  std::map<std::string, std::string> facts;
  std::vector<Certificate> premises;
  std::optional<Embedding> witness;
};

/// Catalog name when known, otherwise "order-n group".
std::string group_label(const AbstractGroup& g);
std::string subgroup_string(const Subgroup& s);

/// Rules out N for (G, G') when |G| does not divide |Hol(N)|.
std::optional<Certificate> order_rule(GroupPtr g, const Subgroup& sub, GroupPtr n);
/// Rules out N when G is not solvable and Hol(N) is.
std::optional<Certificate> solvable_rule(GroupPtr g, const Subgroup& sub, GroupPtr n);

/// Exhaustive search: gp_enumerate when the degree is at most `gp_cap` and
/// G' is core-free, byott_exists otherwise. Verdict may be inconclusive.
Certificate direct_search(GroupPtr g, const Subgroup& sub, GroupPtr n, std::uint64_t budget,
                          std::size_t gp_cap = 0);

/// Occurrence of type H on the G'-fixed subextension when H is a normal
/// complement of G'.
Certificate almost_classical(GroupPtr g, const Subgroup& sub, const Subgroup& complement);

Certificate classical(GroupPtr g, GroupPtr n);

struct RuleOptions {
  std::uint64_t budget = 0;
  std::size_t gp_cap = kGpDegreeCap;
};

/// Rules out N for G (G' trivial) through a unique normal N' of index d in N
/// for which type N/N' fails on every degree-d subextension.
std::optional<Certificate> kktu_rule(GroupPtr g, GroupPtr n, const RuleOptions& options = {});

/// KKTU argument at a fixed d with explicit G' (used by cyclic_rule).
std::optional<Certificate> kktu_at(GroupPtr g, GroupPtr n, std::size_t d, const RuleOptions& options,
                                   const std::optional<Subgroup>& chosen_sub = std::nullopt);

/// Occurrence certificates from normal complements (G = H x| G'), one per
/// product type, in catalog order.
std::vector<Certificate> induced_rule(GroupPtr g, const RuleOptions& options = {});

/// Copies a decided verdict for N1 to N2 when their holomorphs coincide.
std::optional<Certificate> holomorph_transfer_rule(GroupPtr g, GroupPtr n2, const Certificate& decided);

/// No cyclic structures on A_n (alternating = true) or S_n, n in {5, 6}.
Certificate cyclic_rule(std::size_t n, bool alternating);

struct TypeReport {
  GroupPtr type;
  Verdict status = Verdict::Inconclusive;
  Certificate certificate;
  std::vector<Certificate> alternates;
  std::optional<Embedding> witness;
};

struct ClassificationReport {
  GroupPtr group;
  std::size_t order = 0;
  std::vector<TypeReport> types;

  bool any_inconclusive() const;
  std::vector<GroupPtr> with_status(Verdict v) const;
};

struct ClassifyOptions {
  /// Node budget per direct search; 0 = unlimited.
  std::uint64_t budget = 0;
  /// Attach an embedding witness to every occurring type.
  bool witnesses = true;
  /// Also collect alternate certificates for decided types.
  bool alternates = true;
};

/// Decides every type of order |G|. |G| must be a supported catalog order.
ClassificationReport classify(GroupPtr g, const ClassifyOptions& options = {});

/// Walks the tree, recomputing every fact. On failure `why` describes the
/// first mismatch.
bool verify_certificate(const Certificate& c, std::string* why = nullptr);
bool verify_report(const ClassificationReport& r, std::string* why = nullptr);

/// Every certificate node in the tree, preorder.
void for_each_node(const Certificate& c, const std::function<void(const Certificate&)>& f);

}  // namespace hgc
