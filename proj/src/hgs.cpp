#include "hgc/hgs.hpp"

#include <algorithm>
#include <cstring>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>

#include "hgc/catalog.hpp"
#include "hgc/iso.hpp"

namespace hgc {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Occurs: return "occurs";
    case Verdict::RuledOut: return "ruled_out";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(Constraint c) {
  switch (c) {
    case Constraint::None: return "none";
    case Constraint::Transitive: return "transitive";
    case Constraint::Regular: return "regular";
    case Constraint::StabilizerMatches: return "stabilizer";
  }
  return "?";
}

CosetAction coset_action(GroupPtr g, const Subgroup& sub) {
  if (!is_subgroup(*g, sub)) throw Error("coset_action: not a subgroup");
  CosetAction ca;
  ca.group = g;
  ca.subgroup = sub;
  const std::size_t n = g->order();
  std::vector<Elem> coset_of(n, ~Elem{0});
  for (std::size_t x = 0; x < n; ++x) {
    if (coset_of[x] != ~Elem{0}) continue;
    std::vector<Elem> c;
    for (Elem s : sub) c.push_back(g->mul(static_cast<Elem>(x), s));
    std::sort(c.begin(), c.end());
    for (Elem y : c) coset_of[y] = static_cast<Elem>(ca.cosets.size());
    ca.cosets.push_back(std::move(c));
  }
  ca.degree = ca.cosets.size();
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Point> img(ca.degree);
    for (std::size_t i = 0; i < ca.degree; ++i)
      img[i] = static_cast<Point>(coset_of[g->mul(static_cast<Elem>(x), ca.cosets[i].front())]);
    ca.lambda.push_back(Perm::unchecked(std::move(img)));
  }
  std::vector<Perm> gens;
  for (Elem x : generating_sequence(*g)) gens.push_back(ca.lambda[x]);
  ca.image = PermGroup(ca.degree, std::move(gens));
  ca.kernel_order = static_cast<std::size_t>(
      std::count_if(ca.lambda.begin(), ca.lambda.end(), [](const Perm& p) { return p.is_identity(); }));
  return ca;
}

namespace {

bool orbit_of_zero_is_all(const std::vector<Perm>& gens, std::size_t d) {
  if (d == 0) return true;
  return orbit(PermGroup(d, gens), 0).size() == d;
}

Subgroup stabilizer_of_zero(const std::vector<Perm>& images_all) {
  Subgroup s;
  for (std::size_t x = 0; x < images_all.size(); ++x)
    if (images_all[x](0) == 0) s.push_back(static_cast<Elem>(x));
  return s;
}

std::set<Subgroup> automorphic_images(const AbstractGroup& g, const Subgroup& sub) {
  std::set<Subgroup> out;
  for (const auto& a : all_automorphisms(g)) {
    Subgroup s;
    for (Elem x : sub) s.push_back(a[x]);
    std::sort(s.begin(), s.end());
    out.insert(std::move(s));
  }
  return out;
}

}  // namespace

EmbeddingResult find_embeddings(GroupPtr gp, const PermGroup& h, const EmbeddingQuery& q) {
  const AbstractGroup& g = *gp;
  EmbeddingResult res;
  const std::size_t n = g.order(), d = h.degree();
  const std::uint64_t ho = h.order();
  if (ho % n) return res;
  const bool needs_transitive = q.constraint != Constraint::None;
  if (q.constraint == Constraint::Regular && n != d) return res;
  if (needs_transitive && (d == 0 || n % d)) return res;
  if (q.constraint == Constraint::StabilizerMatches && q.stabilizer.size() * d != n) return res;
  if (ho > 5'000'000) throw Error("find_embeddings: target group too large to enumerate");

  const std::vector<Perm> helems = h.elements();
  const std::vector<Elem> gens = generating_sequence(g);
  const WordTree tree(g, gens);
  const std::size_t k = gens.size();

  std::vector<std::uint64_t> horder(helems.size());
  for (std::size_t i = 0; i < helems.size(); ++i) horder[i] = element_order(helems[i]);
  std::vector<std::vector<std::size_t>> cand(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < helems.size(); ++j)
      if (horder[j] == g.element_order(gens[i])) cand[i].push_back(j);

  if (!q.all && k > 0) {
    // One representative per H-class for the first generator.
    std::unordered_map<Perm, std::size_t, PermHash> where;
    for (std::size_t c : cand[0]) where.emplace(helems[c], c);
    std::vector<bool> seen(helems.size(), false);
    std::vector<std::size_t> reps;
    for (std::size_t c : cand[0]) {
      if (seen[c]) continue;
      reps.push_back(c);
      std::vector<std::size_t> queue{c};
      seen[c] = true;
      for (std::size_t qi = 0; qi < queue.size(); ++qi)
        for (const auto& s : h.generators()) {
          const std::size_t t = where.at(conjugate(s, helems[queue[qi]]));
          if (!seen[t]) {
            seen[t] = true;
            queue.push_back(t);
          }
        }
    }
    cand[0] = std::move(reps);
  }

  std::set<Subgroup> stab_orbit;
  if (q.constraint == Constraint::StabilizerMatches) stab_orbit = automorphic_images(g, q.stabilizer);
  const std::size_t max_fix = needs_transitive ? n / d : n;

  std::vector<Point> buf(n * d);
  std::vector<std::uint32_t> stamp_of(n, 0);
  std::uint32_t stamp = 0;
  std::vector<std::size_t> img(k, 0);
  std::vector<Point> v(d);

  auto check_prefix = [&](std::size_t j) {
    ++stamp;
    for (std::size_t p = 0; p < d; ++p) buf[p] = static_cast<Point>(p);
    stamp_of[0] = stamp;
    std::size_t fixcount = 1;
    for (Elem x : tree.prefix_elements(j)) {
      const Point* px = &buf[x * d];
      for (std::size_t i = 0; i < j; ++i) {
        const Elem y = g.mul(x, gens[i]);
        const auto hi = helems[img[i]].images();
        for (std::size_t p = 0; p < d; ++p) v[p] = px[hi[p]];
        Point* py = &buf[y * d];
        if (stamp_of[y] == stamp) {
          if (std::memcmp(py, v.data(), d * sizeof(Point)) != 0) return false;
          continue;
        }
        if (y != 0) {
          bool identity = true, has_fixed = false;
          for (std::size_t p = 0; p < d; ++p)
            if (v[p] == p) has_fixed = true;
            else identity = false;
          if (identity) return false;
          if (q.constraint == Constraint::Regular && has_fixed) return false;
          if (v[0] == 0 && ++fixcount > max_fix) return false;
        }
        std::memcpy(py, v.data(), d * sizeof(Point));
        stamp_of[y] = stamp;
      }
    }
    return true;
  };

  bool stop = false;
  std::function<void(std::size_t)> recurse = [&](std::size_t j) {
    if (j == k) {
      Embedding e;
      e.domain = gp;
      e.generators = gens;
      e.constraint = q.constraint;
      for (std::size_t i = 0; i < k; ++i) e.images.push_back(helems[img[i]]);
      e.images_all.reserve(n);
      for (std::size_t x = 0; x < n; ++x)
        e.images_all.push_back(Perm::unchecked(std::vector<Point>(buf.begin() + x * d, buf.begin() + (x + 1) * d)));
      if (needs_transitive && !orbit_of_zero_is_all(e.images, d)) return;
      if (q.constraint == Constraint::StabilizerMatches && !stab_orbit.count(stabilizer_of_zero(e.images_all)))
        return;
      if (q.accept && !q.accept(e)) return;
      res.found.push_back(std::move(e));
      if (!q.all) stop = true;
      return;
    }
    for (std::size_t c : cand[j]) {
      if (q.budget && res.nodes >= q.budget) {
        res.budget_exhausted = true;
        stop = true;
        return;
      }
      ++res.nodes;
      img[j] = c;
      if (!check_prefix(j + 1)) continue;
      recurse(j + 1);
      if (stop) return;
    }
  };
  if (k == 0) {
    // Trivial group: the identity map.
    Embedding e;
    e.domain = gp;
    e.constraint = q.constraint;
    e.images_all.push_back(Perm(d));
    const bool ok = !needs_transitive || d == 1;
    if (ok && (!q.accept || q.accept(e))) res.found.push_back(std::move(e));
    return res;
  }
  recurse(0);
  return res;
}

bool verify_embedding(const Embedding& e, const PermGroup& h, Constraint c, const Subgroup& stabilizer) {
  const AbstractGroup& g = *e.domain;
  const std::size_t n = g.order(), d = h.degree();
  if (e.images_all.size() != n) return false;
  for (const auto& p : e.images_all)
    if (p.degree() != d || !h.contains(p)) return false;
  for (std::size_t a = 0; a < n; ++a) {
    if (a != 0 && e.images_all[a].is_identity()) return false;
    for (std::size_t b = 0; b < n; ++b)
      if (e.images_all[g.mul(static_cast<Elem>(a), static_cast<Elem>(b))] != e.images_all[a] * e.images_all[b])
        return false;
  }
  for (std::size_t i = 0; i < e.generators.size(); ++i)
    if (e.images.size() != e.generators.size() || e.images_all[e.generators[i]] != e.images[i]) return false;
  if (c == Constraint::None) return true;
  if (!orbit_of_zero_is_all(e.images_all, d)) return false;
  if (c == Constraint::Regular) return n == d;
  if (c == Constraint::StabilizerMatches)
    return automorphic_images(g, stabilizer).count(stabilizer_of_zero(e.images_all)) > 0;
  return true;
}

ByottResult byott_exists(GroupPtr g, const Subgroup& sub, GroupPtr n, std::uint64_t budget) {
  if (n->order() * sub.size() != g->order()) throw Error("byott_exists: |N| must equal [G:G']");
  ByottResult r;
  const auto hol = holomorph(n);
  r.hol_order = hol->hol_order;
  EmbeddingQuery q;
  q.constraint = sub.size() == 1 ? Constraint::Regular : Constraint::StabilizerMatches;
  q.stabilizer = sub;
  q.budget = budget;
  auto found = find_embeddings(g, hol->hol, q);
  r.nodes = found.nodes;
  if (!found.found.empty()) {
    r.verdict = Verdict::Occurs;
    r.witness = std::move(found.found.front());
  } else {
    r.verdict = found.budget_exhausted ? Verdict::Inconclusive : Verdict::RuledOut;
  }
  return r;
}

AbstractGroup structure_group(const std::vector<Perm>& elements) {
  const std::size_t d = elements.size();
  std::vector<Elem> t(d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) t[x * d + y] = elements[x](static_cast<Point>(y));
  return AbstractGroup(std::move(t), d, false);
}

namespace {

struct RegularMemo {
  std::mutex mu;
  std::map<std::size_t, std::vector<std::vector<Perm>>> subs;
  std::map<std::size_t, std::vector<GroupPtr>> types;
};

RegularMemo& regular_memo() {
  static RegularMemo m;
  return m;
}

// Extends a semiregular group, stored as slots[point] = element mapping 0
// there, by a new element. Fails when two elements agree at 0 or the group
// grows past d.
bool close_with(std::vector<std::optional<Perm>>& slots, const std::vector<Perm>& gens) {
  std::vector<Perm> list;
  for (const auto& s : slots)
    if (s) list.push_back(*s);
  for (std::size_t i = 0; i < list.size(); ++i)
    for (const auto& s : gens) {
      Perm f = s * list[i];
      const Point p = f(0);
      if (!slots[p]) {
        slots[p] = f;
        list.push_back(std::move(f));
      } else if (*slots[p] != f) {
        return false;
      }
    }
  return true;
}

void enumerate_regular(std::size_t d, std::vector<std::optional<Perm>>& slots, std::vector<Perm>& gens,
                       std::vector<std::vector<Perm>>& out) {
  std::size_t x = 0;
  while (x < d && slots[x]) ++x;
  if (x == d) {
    std::vector<Perm> elems;
    for (auto& s : slots) elems.push_back(*s);
    out.push_back(std::move(elems));
    return;
  }
  std::vector<bool> covered(d, false);
  for (std::size_t p = 0; p < d; ++p) covered[p] = slots[p].has_value();
  // Candidate n_x: n_x(0) = x, fixed-point free, and it moves covered
  // points outside the covered set.
  std::vector<Point> img(d);
  std::vector<bool> used(d, false);
  img[0] = static_cast<Point>(x);
  used[x] = true;
  std::function<void(std::size_t)> assign = [&](std::size_t p) {
    if (p == d) {
      Perm cand = Perm::unchecked(img);
      auto saved = slots;
      gens.push_back(cand);
      if (close_with(slots, gens)) enumerate_regular(d, slots, gens, out);
      gens.pop_back();
      slots = std::move(saved);
      return;
    }
    for (std::size_t val = 0; val < d; ++val) {
      if (used[val] || val == p) continue;
      if (covered[p] && covered[val]) continue;
      used[val] = true;
      img[p] = static_cast<Point>(val);
      assign(p + 1);
      used[val] = false;
    }
  };
  assign(1);
}

}  // namespace

const std::vector<std::vector<Perm>>& regular_subgroups(std::size_t degree) {
  RegularMemo& m = regular_memo();
  std::lock_guard lock(m.mu);
  auto it = m.subs.find(degree);
  if (it != m.subs.end()) return it->second;
  std::vector<std::vector<Perm>> out;
  if (degree == 1) {
    out.push_back({Perm(1)});
  } else if (degree > 1) {
    std::vector<std::optional<Perm>> slots(degree);
    slots[0] = Perm(degree);
    std::vector<Perm> gens;
    enumerate_regular(degree, slots, gens, out);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::vector<GroupPtr> types;
  for (const auto& r : out) types.push_back(identify(structure_group(r)));
  m.types[degree] = std::move(types);
  return m.subs.emplace(degree, std::move(out)).first->second;
}

namespace {

const std::vector<GroupPtr>& regular_subgroup_types(std::size_t degree) {
  regular_subgroups(degree);
  RegularMemo& m = regular_memo();
  std::lock_guard lock(m.mu);
  return m.types.at(degree);
}

}  // namespace

std::vector<HGStructure> gp_enumerate(GroupPtr g, const Subgroup& sub, std::size_t max_degree) {
  if (max_degree > 10) throw Error("gp_enumerate: degree cap cannot exceed 10");
  if (sub.empty() || g->order() % sub.size()) throw Error("gp_enumerate: bad subgroup");
  const std::size_t d = g->order() / sub.size();
  if (d > max_degree)
    throw Error("gp_enumerate: degree " + std::to_string(d) + " above cap " + std::to_string(max_degree));
  if (d > kGpDegreeCap)
    std::cerr << "warning: gp_enumerate at degree " << d << " (above the default cap of 8) may be slow\n";
  const CosetAction ca = coset_action(g, sub);
  const auto& subs = regular_subgroups(d);
  const auto& types = regular_subgroup_types(d);
  std::vector<HGStructure> out;
  for (std::size_t r = 0; r < subs.size(); ++r) {
    const auto& elems = subs[r];
    bool normalized = true;
    for (const auto& a : ca.image.generators()) {
      const Perm ai = a.inverse();
      for (const auto& nx : elems) {
        const Perm c = a * nx * ai;
        if (c != elems[c(0)]) {
          normalized = false;
          break;
        }
      }
      if (!normalized) break;
    }
    if (!normalized) continue;
    std::vector<Perm> gens;
    for (Elem x : generating_sequence(structure_group(elems))) gens.push_back(elems[x]);
    out.push_back(HGStructure{PermGroup(d, std::move(gens)), elems, types[r]});
  }
  std::sort(out.begin(), out.end(), [](const HGStructure& a, const HGStructure& b) {
    auto sa = a.elements, sb = b.elements;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa < sb;
  });
  return out;
}

std::vector<Subgroup> stable_subgroups(const HGStructure& s, const PermGroup& a) {
  const std::size_t d = s.elements.size();
  if (d > 24) throw Error("stable_subgroups: |N| above 24 is not supported");
  const AbstractGroup n = structure_group(s.elements);
  std::vector<std::vector<Point>> sigma;
  for (const auto& g : a.generators()) {
    const Perm gi = g.inverse();
    std::vector<Point> m(d);
    for (std::size_t x = 0; x < d; ++x) m[x] = (g * s.elements[x] * gi)(0);
    sigma.push_back(std::move(m));
  }
  std::vector<Subgroup> out;
  for (auto& k : all_subgroups(n)) {
    std::vector<bool> in(d, false);
    for (Elem x : k) in[x] = true;
    bool stable = true;
    for (const auto& m : sigma)
      for (Elem x : k)
        if (!in[m[x]]) stable = false;
    if (stable) out.push_back(std::move(k));
  }
  return out;
}

}  // namespace hgc
