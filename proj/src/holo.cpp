#include "hgc/holo.hpp"

#include <atomic>
#include <map>
#include <mutex>

#include "hgc/hgs.hpp"
#include "hgc/iso.hpp"

namespace hgc {

namespace {

std::atomic<AutStore*> g_store{nullptr};

std::uint64_t table_digest(const AbstractGroup& g) {
  std::uint64_t h = 1469598103934665603ull ^ g.order();
  for (Elem x : g.table()) h = (h ^ x) * 1099511628211ull;
  return h;
}

std::vector<Perm> generator_perms(const std::vector<Perm>& all, const std::vector<Elem>& gens) {
  std::vector<Perm> out;
  for (Elem g : gens) out.push_back(all[g]);
  return out;
}

}  // namespace

void set_aut_store(AutStore* store) { g_store.store(store); }

RegularRep regular_rep(GroupPtr n) {
  const auto gens = generating_sequence(*n);
  const std::size_t d = n->order();
  return RegularRep{n, PermGroup(d, generator_perms(left_regular_perms(*n), gens)),
                    PermGroup(d, generator_perms(right_regular_perms(*n), gens))};
}

bool is_automorphism(const AbstractGroup& n, const Perm& p) {
  if (p.degree() != n.order() || p(0) != 0) return false;
  for (std::size_t x = 0; x < n.order(); ++x)
    for (std::size_t y = 0; y < n.order(); ++y)
      if (p(static_cast<Point>(n.mul(static_cast<Elem>(x), static_cast<Elem>(y)))) !=
          n.mul(p(static_cast<Point>(x)), p(static_cast<Point>(y))))
        return false;
  return true;
}

PermGroup automorphisms(const AbstractGroup& n, std::uint64_t budget) {
  const std::size_t d = n.order();
  if (d > 512) throw Error("automorphisms: order above 512 is not supported");
  if (AutStore* store = g_store.load()) {
    if (auto gens = store->load(n)) {
      bool ok = true;
      for (const auto& g : *gens) ok = ok && is_automorphism(n, g);
      if (ok) return PermGroup(d, *gens);
    }
  }
  const auto autos = all_automorphisms(n, budget);
  std::vector<Perm> gens;
  PermGroup group(d, {});
  for (const auto& a : autos) {
    Perm p = Perm::unchecked(std::vector<Point>(a.begin(), a.end()));
    if (group.contains(p)) continue;
    gens.push_back(std::move(p));
    group = PermGroup(d, gens);
  }
  if (AutStore* store = g_store.load()) store->store(n, gens, group.order());
  return group;
}

std::shared_ptr<const Holomorph> holomorph(GroupPtr n) {
  static std::mutex mu;
  static std::multimap<std::uint64_t, std::shared_ptr<const Holomorph>> memo;
  const std::uint64_t key = table_digest(*n);
  {
    std::lock_guard lock(mu);
    auto [lo, hi] = memo.equal_range(key);
    for (auto it = lo; it != hi; ++it)
      if (it->second->source->table() == n->table()) return it->second;
  }
  auto h = std::make_shared<Holomorph>();
  h->source = n;
  h->left = regular_rep(n).left;
  h->aut = automorphisms(*n);
  std::vector<Perm> gens = h->left.generators();
  gens.insert(gens.end(), h->aut.generators().begin(), h->aut.generators().end());
  h->hol = PermGroup(n->order(), std::move(gens));
  h->aut_order = h->aut.order();
  h->hol_order = h->hol.order();
  std::lock_guard lock(mu);
  memo.emplace(key, h);
  return h;
}

bool holomorph_equal(const AbstractGroup& n1, const AbstractGroup& n2) {
  if (n1.order() != n2.order()) return false;
  if (n1.order() > 60) throw Error("holomorph_equal: order above 60 is not supported");
  const auto h1 = holomorph(n1);
  const auto h2 = holomorph(n2);
  if (h1->hol_order != h2->hol_order) return false;
  const auto g2 = std::make_shared<AbstractGroup>(n2);

  bool equal = false;
  EmbeddingQuery q;
  q.constraint = Constraint::Regular;
  q.accept = [&](const Embedding& e) {
    // Point x is identified with the element r of N2 whose image maps 0 to x.
    const std::size_t d = n2.order();
    std::vector<Point> relabel(d);
    for (std::size_t r = 0; r < d; ++r) relabel[e.images_all[r](0)] = static_cast<Point>(r);
    const Perm pi(relabel);
    const Perm pi_inv = pi.inverse();
    std::vector<Perm> moved;
    for (const auto& g : h1->hol.generators()) moved.push_back(pi * g * pi_inv);
    const PermGroup relabeled(d, moved);
    for (const auto& g : moved)
      if (!h2->hol.contains(g)) return false;
    for (const auto& g : h2->hol.generators())
      if (!relabeled.contains(g)) return false;
    equal = true;
    return true;
  };
  find_embeddings(g2, h1->hol, q);
  return equal;
}

}  // namespace hgc
