#include "hgc/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace hgc {

namespace {

bool latin_with_identity(const std::vector<Elem>& t, std::size_t n) {
  if (t.size() != n * n || n == 0) return false;
  for (std::size_t a = 0; a < n; ++a) {
    if (t[a] != a || t[a * n] != a) return false;
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      const Elem r = t[a * n + b], c = t[b * n + a];
      if (r >= n || c >= n || row[r] || col[c]) return false;
      row[r] = col[c] = true;
    }
  }
  return true;
}

std::vector<bool> as_mask(const Subgroup& s, std::size_t n) {
  std::vector<bool> m(n, false);
  for (Elem x : s) m[x] = true;
  return m;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

bool satisfies_group_axioms(const std::vector<Elem>& t, std::size_t n) {
  if (!latin_with_identity(t, n)) return false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Elem ab = t[a * n + b];
      for (std::size_t c = 0; c < n; ++c)
        if (t[ab * n + c] != t[a * n + t[b * n + c]]) return false;
    }
  return true;
}

AbstractGroup::AbstractGroup(std::vector<Elem> table, std::size_t order, bool verify)
    : n_(order), table_(std::move(table)), fp_(std::make_shared<FingerprintSlot>()) {
  if (verify) {
    const bool ok = n_ <= 256 ? satisfies_group_axioms(table_, n_) : latin_with_identity(table_, n_);
    if (!ok) throw Error("AbstractGroup: table does not define a group with identity 0");
  }
  inverse_.assign(n_, 0);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (table_[a * n_ + b] == 0) {
        inverse_[a] = static_cast<Elem>(b);
        break;
      }
  orders_.assign(n_, 1);
  for (std::size_t a = 1; a < n_; ++a) {
    Elem x = static_cast<Elem>(a);
    std::uint32_t k = 1;
    while (x != 0) {
      x = table_[x * n_ + a];
      ++k;
    }
    orders_[a] = k;
  }
}

AbstractGroup AbstractGroup::from_perms(const std::vector<Perm>& elements) {
  const std::size_t n = elements.size();
  if (n == 0 || !elements.front().is_identity())
    throw Error("AbstractGroup::from_perms: identity must come first");
  std::unordered_map<Perm, Elem, PermHash> index;
  for (std::size_t i = 0; i < n; ++i)
    if (!index.emplace(elements[i], static_cast<Elem>(i)).second)
      throw Error("AbstractGroup::from_perms: duplicate element");
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find(elements[a] * elements[b]);
      if (it == index.end()) throw Error("AbstractGroup::from_perms: not closed");
      t[a * n + b] = it->second;
    }
  return AbstractGroup(std::move(t), n, false);
}

bool AbstractGroup::is_abelian() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      if (table_[a * n_ + b] != table_[b * n_ + a]) return false;
  return true;
}

std::string AbstractGroup::display_name() const {
  if (!names.empty()) return names.front();
  if (catalog_id) return *catalog_id;
  if (!structure.empty()) return structure;
  return "group of order " + std::to_string(n_);
}

const Fingerprint& AbstractGroup::fingerprint() const {
  std::call_once(fp_->once, [this] {
    auto f = std::make_unique<Fingerprint>();
    f->order = n_;
    for (std::size_t a = 0; a < n_; ++a) ++f->element_orders[orders_[a]];
    f->center_order = center(*this).size();
    const Subgroup d = hgc::derived_subgroup(*this);
    f->derived_order = d.size();
    f->abelian_invariants = abelian_invariants(quotient(*this, d));
    for (auto p : prime_factors(n_)) f->sylow_normal[p] = sylow_normal(*this, p).has_value();
    for (const auto& c : conjugacy_classes(*this)) ++f->class_sizes[c.size()];
    fp_->value = std::move(f);
  });
  return *fp_->value;
}

std::string Fingerprint::to_string() const {
  std::ostringstream os;
  os << "n=" << order << ";orders=";
  for (auto [o, c] : element_orders) os << o << ':' << c << ',';
  os << ";Z=" << center_order << ";D=" << derived_order << ";ab=";
  for (auto d : abelian_invariants) os << d << ',';
  os << ";syl=";
  for (auto [p, b] : sylow_normal) os << p << ':' << b << ',';
  os << ";cls=";
  for (auto [s, c] : class_sizes) os << s << ':' << c << ',';
  return os.str();
}

std::uint64_t Fingerprint::digest() const {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : to_string()) h = (h ^ c) * 1099511628211ull;
  return h;
}

std::vector<Perm> left_regular_perms(const AbstractGroup& g) {
  const std::size_t n = g.order();
  std::vector<Perm> out;
  out.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<Point> img(n);
    for (std::size_t x = 0; x < n; ++x) img[x] = static_cast<Point>(g.mul(static_cast<Elem>(a), static_cast<Elem>(x)));
    out.push_back(Perm::unchecked(std::move(img)));
  }
  return out;
}

std::vector<Perm> right_regular_perms(const AbstractGroup& g) {
  const std::size_t n = g.order();
  std::vector<Perm> out;
  out.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    const Elem ai = g.inv(static_cast<Elem>(a));
    std::vector<Point> img(n);
    for (std::size_t x = 0; x < n; ++x) img[x] = static_cast<Point>(g.mul(static_cast<Elem>(x), ai));
    out.push_back(Perm::unchecked(std::move(img)));
  }
  return out;
}

Subgroup generated_subgroup(const AbstractGroup& g, const std::vector<Elem>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> list{0};
  in[0] = true;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (Elem s : gens) {
      const Elem y = g.mul(list[i], s);
      if (!in[y]) {
        in[y] = true;
        list.push_back(y);
      }
    }
  std::sort(list.begin(), list.end());
  return list;
}

bool is_subgroup(const AbstractGroup& g, const Subgroup& s) {
  if (s.empty() || s.front() != 0) return false;
  auto m = as_mask(s, g.order());
  for (Elem a : s)
    for (Elem b : s)
      if (!m[g.mul(a, b)]) return false;
  return true;
}

Subgroup conjugate_subgroup(const AbstractGroup& g, const Subgroup& s, Elem x) {
  Subgroup out;
  out.reserve(s.size());
  const Elem xi = g.inv(x);
  for (Elem a : s) out.push_back(g.mul(g.mul(x, a), xi));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_normal(const AbstractGroup& g, const Subgroup& s) {
  auto m = as_mask(s, g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    const Elem xi = g.inv(static_cast<Elem>(x));
    for (Elem a : s)
      if (!m[g.mul(g.mul(static_cast<Elem>(x), a), xi)]) return false;
  }
  return true;
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  Subgroup out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Subgroup normal_closure(const AbstractGroup& g, const Subgroup& s) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Elem> gens;
  for (Elem a : s)
    for (std::size_t x = 0; x < g.order(); ++x) {
      const Elem c = g.mul(g.mul(static_cast<Elem>(x), a), g.inv(static_cast<Elem>(x)));
      if (!seen[c]) {
        seen[c] = true;
        gens.push_back(c);
      }
    }
  return generated_subgroup(g, gens);
}

Subgroup center(const AbstractGroup& g) {
  Subgroup z;
  for (std::size_t a = 0; a < g.order(); ++a) {
    bool central = true;
    for (std::size_t b = 0; b < g.order() && central; ++b)
      central = g.mul(static_cast<Elem>(a), static_cast<Elem>(b)) == g.mul(static_cast<Elem>(b), static_cast<Elem>(a));
    if (central) z.push_back(static_cast<Elem>(a));
  }
  return z;
}

Subgroup derived_subgroup(const AbstractGroup& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<Elem> comms;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Elem c = g.mul(g.mul(g.inv(static_cast<Elem>(a)), g.inv(static_cast<Elem>(b))),
                           g.mul(static_cast<Elem>(a), static_cast<Elem>(b)));
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  return generated_subgroup(g, comms);
}

Subgroup core(const AbstractGroup& g, const Subgroup& s) {
  auto m = as_mask(s, g.order());
  Subgroup out;
  for (Elem a : s) {
    bool all = true;
    for (std::size_t y = 0; y < g.order() && all; ++y)
      all = m[g.mul(g.mul(g.inv(static_cast<Elem>(y)), a), static_cast<Elem>(y))];
    if (all) out.push_back(a);
  }
  return out;
}

bool is_solvable(const AbstractGroup& g) {
  AbstractGroup cur = g;
  while (cur.order() > 1) {
    Subgroup d = derived_subgroup(cur);
    if (d.size() == cur.order()) return false;
    cur = subgroup_as_group(cur, d);
  }
  return true;
}

std::vector<std::vector<Elem>> conjugacy_classes(const AbstractGroup& g) {
  const std::size_t n = g.order();
  std::vector<bool> done(n, false);
  std::vector<std::vector<Elem>> out;
  for (std::size_t a = 0; a < n; ++a) {
    if (done[a]) continue;
    std::vector<Elem> cls;
    for (std::size_t x = 0; x < n; ++x) {
      const Elem c = g.mul(g.mul(static_cast<Elem>(x), static_cast<Elem>(a)), g.inv(static_cast<Elem>(x)));
      if (!done[c]) {
        done[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<std::size_t> class_size_of(const AbstractGroup& g) {
  std::vector<std::size_t> out(g.order());
  for (const auto& c : conjugacy_classes(g))
    for (Elem x : c) out[x] = c.size();
  return out;
}

std::vector<Subgroup> all_subgroups(const AbstractGroup& g) {
  const std::size_t n = g.order();
  // One generator per cyclic subgroup.
  std::set<Subgroup> cyclic_set;
  std::vector<Elem> cyclic_gens;
  for (std::size_t a = 0; a < n; ++a) {
    auto c = generated_subgroup(g, {static_cast<Elem>(a)});
    if (cyclic_set.insert(c).second) cyclic_gens.push_back(static_cast<Elem>(a));
  }
  std::set<Subgroup> found(cyclic_set.begin(), cyclic_set.end());
  std::vector<std::pair<Subgroup, std::vector<Elem>>> work;
  for (Elem a : cyclic_gens) work.push_back({generated_subgroup(g, {a}), {a}});
  for (std::size_t i = 0; i < work.size(); ++i) {
    const auto mask = as_mask(work[i].first, n);
    for (Elem c : cyclic_gens) {
      if (mask[c]) continue;
      auto gens = work[i].second;
      gens.push_back(c);
      auto s = generated_subgroup(g, gens);
      if (found.insert(s).second) work.push_back({std::move(s), std::move(gens)});
    }
  }
  std::vector<Subgroup> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const Subgroup& a, const Subgroup& b) { return a.size() < b.size(); });
  return out;
}

std::vector<Subgroup> normal_subgroups(const AbstractGroup& g) {
  std::set<Subgroup> found;
  for (const auto& cls : conjugacy_classes(g)) found.insert(normal_closure(g, {cls.front()}));
  std::vector<Subgroup> list(found.begin(), found.end());
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<Elem> gens = list[i];
      gens.insert(gens.end(), list[j].begin(), list[j].end());
      auto s = generated_subgroup(g, gens);
      if (found.insert(s).second) list.push_back(std::move(s));
    }
  std::vector<Subgroup> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const Subgroup& a, const Subgroup& b) { return a.size() < b.size(); });
  return out;
}

std::vector<std::vector<Subgroup>> subgroup_classes(const AbstractGroup& g,
                                                    const std::vector<Subgroup>& subgroups) {
  std::set<Subgroup> pending(subgroups.begin(), subgroups.end());
  std::vector<std::vector<Subgroup>> out;
  for (const auto& s : subgroups) {
    if (!pending.count(s)) continue;
    std::set<Subgroup> cls;
    for (std::size_t x = 0; x < g.order(); ++x) cls.insert(conjugate_subgroup(g, s, static_cast<Elem>(x)));
    for (const auto& c : cls) pending.erase(c);
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(static_cast<std::uint32_t>(p));
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(static_cast<std::uint32_t>(n));
  return ps;
}

std::optional<Subgroup> sylow_normal(const AbstractGroup& g, std::uint32_t p) {
  std::size_t pa = 1, m = g.order();
  while (m % p == 0) {
    m /= p;
    pa *= p;
  }
  Subgroup s;
  for (std::size_t a = 0; a < g.order(); ++a) {
    std::uint32_t o = g.element_order(static_cast<Elem>(a));
    while (o % p == 0) o /= p;
    if (o == 1) s.push_back(static_cast<Elem>(a));
  }
  if (s.size() != pa) return std::nullopt;
  return s;
}

std::optional<Subgroup> unique_normal_of_index(const AbstractGroup& g, std::size_t d) {
  if (d == 0 || g.order() % d != 0) return std::nullopt;
  std::optional<Subgroup> hit;
  for (auto& s : normal_subgroups(g)) {
    if (s.size() * d != g.order()) continue;
    if (hit) return std::nullopt;
    hit = std::move(s);
  }
  return hit;
}

bool is_core_free(const AbstractGroup& g, const Subgroup& s) { return core(g, s).size() == 1; }

std::vector<Subgroup> normal_complements(const AbstractGroup& g, const Subgroup& s) {
  std::vector<Subgroup> out;
  for (auto& h : normal_subgroups(g))
    if (h.size() * s.size() == g.order() && intersection(h, s).size() == 1) out.push_back(std::move(h));
  return out;
}

AbstractGroup quotient(const AbstractGroup& g, const Subgroup& n) {
  if (!is_subgroup(g, n) || !is_normal(g, n)) throw Error("quotient: subgroup is not normal");
  const std::size_t order = g.order();
  std::vector<Elem> coset(order, ~Elem{0});
  std::vector<Elem> reps;
  for (std::size_t x = 0; x < order; ++x) {
    if (coset[x] != ~Elem{0}) continue;
    const Elem id = static_cast<Elem>(reps.size());
    reps.push_back(static_cast<Elem>(x));
    for (Elem a : n) coset[g.mul(static_cast<Elem>(x), a)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<Elem> t(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) t[i * q + j] = coset[g.mul(reps[i], reps[j])];
  return AbstractGroup(std::move(t), q, false);
}

AbstractGroup subgroup_as_group(const AbstractGroup& g, const Subgroup& s) {
  std::vector<Elem> idx(g.order(), ~Elem{0});
  for (std::size_t i = 0; i < s.size(); ++i) idx[s[i]] = static_cast<Elem>(i);
  const std::size_t k = s.size();
  std::vector<Elem> t(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Elem v = idx[g.mul(s[i], s[j])];
      if (v == ~Elem{0}) throw Error("subgroup_as_group: not closed");
      t[i * k + j] = v;
    }
  return AbstractGroup(std::move(t), k, false);
}

std::vector<std::uint64_t> abelian_invariants(const AbstractGroup& g) {
  if (!g.is_abelian()) throw Error("abelian_invariants: group is not abelian");
  // Per prime: s_k = log_p #{x : x^(p^k) = 1} = sum_i min(k, e_i).
  std::vector<std::vector<unsigned>> exps;  // per prime, exponents descending
  std::vector<std::uint32_t> primes = prime_factors(g.order());
  for (auto p : primes) {
    std::vector<unsigned> s{0};
    for (unsigned k = 1;; ++k) {
      const std::uint64_t pk = ipow(p, k);
      std::size_t cnt = 0;
      for (std::size_t a = 0; a < g.order(); ++a)
        if (pk % g.element_order(static_cast<Elem>(a)) == 0) ++cnt;
      unsigned sk = 0;
      for (std::size_t c = cnt; c > 1; c /= p) ++sk;
      if (sk == s.back()) break;
      s.push_back(sk);
    }
    // m_k = #{i : e_i >= k}
    std::vector<unsigned> e;
    for (std::size_t k = 1; k < s.size(); ++k) {
      const unsigned mk = s[k] - s[k - 1];
      const unsigned mk1 = k + 1 < s.size() ? s[k + 1] - s[k] : 0;
      for (unsigned r = 0; r < mk - mk1; ++r) e.push_back(static_cast<unsigned>(k));
    }
    std::sort(e.rbegin(), e.rend());
    exps.push_back(std::move(e));
  }
  std::size_t rank = 0;
  for (const auto& e : exps) rank = std::max(rank, e.size());
  std::vector<std::uint64_t> inv(rank, 1);
  for (std::size_t pi = 0; pi < primes.size(); ++pi)
    for (std::size_t i = 0; i < exps[pi].size(); ++i) inv[rank - 1 - i] *= ipow(primes[pi], exps[pi][i]);
  return inv;
}

}  // namespace hgc
