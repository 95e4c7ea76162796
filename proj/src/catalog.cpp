#include "hgc/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "hgc/construct.hpp"
#include "hgc/iso.hpp"

namespace hgc {

namespace {

std::size_t factorial(std::size_t k) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

// Invariant factor sequences d1 | d2 | ... | dr with product n, lex ascending.
std::vector<std::vector<std::uint64_t>> invariant_sequences(std::uint64_t n) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> cur;
  std::function<void(std::uint64_t, std::uint64_t)> rec = [&](std::uint64_t rest, std::uint64_t prev) {
    if (rest == 1) {
      out.push_back(cur);
      return;
    }
    for (std::uint64_t d = 2; d <= rest; ++d) {
      if (rest % d || d % prev) continue;
      // remaining factors must be multiples of d
      std::uint64_t r = rest / d;
      if (r != 1 && r % d) continue;
      cur.push_back(d);
      rec(r, d);
      cur.pop_back();
    }
  };
  if (n == 1) return {{}};
  rec(n, 1);
  std::sort(out.begin(), out.end());
  return out;
}

AbstractGroup abelian_from_invariants(const std::vector<std::uint64_t>& inv) {
  AbstractGroup g = cyclic(1);
  for (auto d : inv) g = direct_product(g, cyclic(d));
  return g;
}

struct Builder {
  std::recursive_mutex mu;
  std::map<std::size_t, std::vector<GroupPtr>> lists;
};

Builder& builder() {
  static Builder b;
  return b;
}

bool add_unique(std::vector<GroupPtr>& list, AbstractGroup g) {
  const auto& fp = g.fingerprint();
  for (const auto& e : list)
    if (e->fingerprint() == fp && find_isomorphism(*e, g)) return false;
  list.push_back(std::make_shared<AbstractGroup>(std::move(g)));
  return true;
}

std::vector<std::pair<std::string, AbstractGroup>> named_groups(std::size_t n) {
  std::vector<std::pair<std::string, AbstractGroup>> out;
  for (std::size_t k = 3; k <= 6; ++k)
    if (factorial(k) == n) out.emplace_back("S" + std::to_string(k), symmetric(k));
  for (std::size_t k = 4; k <= 6; ++k)
    if (factorial(k) / 2 == n) out.emplace_back("A" + std::to_string(k), alternating(k));
  if (n == 24) out.emplace_back("SL(2,3)", special_linear2(3));
  if (n == 120) out.emplace_back("SL(2,5)", special_linear2(5));
  for (std::size_t k = 4; k <= 5; ++k)
    if (factorial(k) == n) out.emplace_back("A" + std::to_string(k) + "xC2", direct_product(alternating(k), cyclic(2)));
  if (n == 8) out.emplace_back("Q8", quaternion8());
  if (n % 4 == 0 && n / 4 >= 3) out.emplace_back("Dic" + std::to_string(n / 4), dicyclic(n / 4));
  return out;
}

void append_semidirects(std::vector<GroupPtr>& list, std::size_t p_order, std::size_t h_order) {
  const auto& ps = group_list(p_order);
  const auto& hs = group_list(h_order);
  for (const auto& P : ps) {
    const auto autos = all_automorphisms(*P);
    std::vector<Perm> aut_perms;
    for (const auto& a : autos) {
      std::vector<Point> img(a.begin(), a.end());
      aut_perms.push_back(Perm::unchecked(std::move(img)));
    }
    const AbstractGroup aut = AbstractGroup::from_perms(aut_perms);
    for (const auto& H : hs) {
      std::size_t action_no = 0;
      for_each_homomorphism(*H, generating_sequence(*H), aut, {}, [&](const std::vector<Elem>& phi) {
        ++action_no;
        std::vector<Perm> act;
        act.reserve(phi.size());
        for (Elem x : phi) act.push_back(aut_perms[x]);
        AbstractGroup g = semidirect_product_full(*P, *H, act);
        g.structure = "(" + P->display_name() + "):(" + H->display_name() + ") [action " +
                      std::to_string(action_no) + "]";
        add_unique(list, std::move(g));
        return true;
      });
    }
  }
}

// Direct-product candidate names for nonabelian groups, in preference order.
std::vector<std::pair<std::string, AbstractGroup>> name_candidates(std::size_t n) {
  std::vector<std::pair<std::string, AbstractGroup>> out;
  for (auto& [name, g] : named_groups(n)) out.emplace_back(name, std::move(g));
  if (n >= 6 && n % 2 == 0) out.emplace_back("D" + std::to_string(n), dihedral(n));
  std::vector<std::size_t> divisors;
  for (std::size_t a = 2; a < n; ++a)
    if (n % a == 0) divisors.push_back(a);
  for (std::size_t a : divisors) {
    for (const auto& x : group_list(a)) {
      if (x->is_abelian() || x->names.empty()) continue;
      for (const auto& y : group_list(n / a))
        if (y->is_abelian()) out.emplace_back(x->names.front() + "x" + y->names.front(), direct_product(*x, *y));
    }
  }
  for (std::size_t a : divisors) {
    if (a * a > n) continue;
    for (const auto& x : group_list(a)) {
      if (x->is_abelian() || x->names.empty()) continue;
      for (const auto& y : group_list(n / a))
        if (!y->is_abelian() && !y->names.empty())
          out.emplace_back(x->names.front() + "x" + y->names.front(), direct_product(*x, *y));
    }
  }
  return out;
}

std::vector<GroupPtr> build_list(std::size_t n) {
  std::vector<GroupPtr> list;
  for (auto& [name, g] : named_groups(n)) add_unique(list, std::move(g));
  for (const auto& inv : invariant_sequences(n)) add_unique(list, abelian_from_invariants(inv));

  const auto primes = prime_factors(n);
  for (auto p : primes) {
    std::size_t pa = 1;
    while (n % (pa * p) == 0) pa *= p;
    if (pa == n) {
      for (std::size_t pk = p; pk < n; pk *= p) append_semidirects(list, pk, n / pk);
    } else {
      append_semidirects(list, pa, n / pa);
    }
  }

  // Ids and display names.
  std::vector<std::vector<std::string>> names(list.size());
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i]->is_abelian()) names[i].push_back(abelian_name(abelian_invariants(*list[i])));
  for (auto& [name, g] : name_candidates(n)) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i]->is_abelian() || list[i]->fingerprint() != g.fingerprint()) continue;
      if (std::find(names[i].begin(), names[i].end(), name) != names[i].end()) break;
      if (find_isomorphism(*list[i], g)) {
        names[i].push_back(name);
        break;
      }
    }
  }
  std::vector<GroupPtr> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    auto g = std::make_shared<AbstractGroup>(*list[i]);
    g->catalog_id = "o" + std::to_string(n) + "#" + std::to_string(i + 1);
    g->names = names[i];
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

bool catalog_supported(std::size_t order) {
  return (order >= 1 && order <= 16) || order == 24 || order == 40 || order == 60 || order == 120;
}

const std::vector<GroupPtr>& group_list(std::size_t order) {
  if (order < 1 || order > 120) throw Error("group_list: order " + std::to_string(order) + " out of range");
  Builder& b = builder();
  std::lock_guard lock(b.mu);
  auto it = b.lists.find(order);
  if (it != b.lists.end()) return it->second;
  auto list = build_list(order);
  return b.lists.emplace(order, std::move(list)).first->second;
}

const std::vector<GroupPtr>& catalog(std::size_t order) {
  if (!catalog_supported(order))
    throw Error("catalog: unsupported order " + std::to_string(order) +
                " (supported: 1..16, 24, 40, 60, 120)");
  return group_list(order);
}

GroupPtr identify(const AbstractGroup& g) {
  if (g.order() < 1 || g.order() > 120) return nullptr;
  for (const auto& e : group_list(g.order()))
    if (e->fingerprint() == g.fingerprint() && find_isomorphism(*e, g)) return e;
  return nullptr;
}

std::string abelian_name(const std::vector<std::uint64_t>& inv_in) {
  std::vector<std::uint64_t> inv;
  for (auto d : inv_in)
    if (d > 1) inv.push_back(d);
  if (inv.empty()) return "C1";
  if (inv.size() == 1) return "C" + std::to_string(inv[0]);
  const bool all_equal = std::all_of(inv.begin(), inv.end(), [&](auto d) { return d == inv[0]; });
  const auto ps = prime_factors(inv[0]);
  if (all_equal && ps.size() == 1 && ps[0] == inv[0]) {
    if (inv[0] == 2 && inv.size() == 2) return "V4";
    std::uint64_t q = 1;
    for (auto d : inv) q *= d;
    if (inv.size() >= 3) return "E" + std::to_string(q);
  }
  if (inv.size() == 2 && inv[0] == 2 && inv[1] % 4 == 2) return "C" + std::to_string(inv[1] / 2) + "xV4";
  if (inv.size() == 3 && inv[0] == 2 && inv[1] == 2) return "C" + std::to_string(inv[2]) + "xV4";
  std::string s;
  for (std::size_t i = 0; i < inv.size(); ++i) s += (i ? "x" : "") + ("C" + std::to_string(inv[i]));
  return s;
}

}  // namespace hgc
