#include "hgc/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace hgc {

namespace {

bool fixes_all(const Perm& p, const std::vector<Point>& pts, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i)
    if (p(pts[i]) != pts[i]) return false;
  return true;
}

void check_degree(std::size_t degree, const std::vector<Perm>& gens) {
  for (const auto& g : gens)
    if (g.degree() != degree) throw Error("PermGroup: generator degree mismatch");
}

}  // namespace

StabilizerChain::StabilizerChain(std::size_t degree, const std::vector<Perm>& generators,
                                 const std::vector<Point>& base_prefix)
    : degree_(degree) {
  check_degree(degree, generators);
  std::vector<Perm> strong;
  for (const auto& g : generators)
    if (!g.is_identity() && std::find(strong.begin(), strong.end(), g) == strong.end())
      strong.push_back(g);

  std::vector<Point> base;
  for (Point b : base_prefix) {
    if (b >= degree || std::find(base.begin(), base.end(), b) != base.end())
      throw Error("StabilizerChain: bad base prefix");
    base.push_back(b);
  }
  for (const auto& s : strong)
    if (fixes_all(s, base, base.size())) base.push_back(static_cast<Point>(first_moved_point(s)));

  levels_.resize(base.size());
  for (std::size_t k = 0; k < base.size(); ++k) {
    levels_[k].base = base[k];
    for (const auto& s : strong)
      if (fixes_all(s, base, k)) levels_[k].generators.push_back(s);
    rebuild_orbit(k);
  }

  // Holt's deterministic Schreier-Sims: every Schreier generator of level i
  // must sift through levels i+1.. to the identity.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    const auto lvl = static_cast<std::size_t>(i);
    for (std::size_t oi = 0; oi < levels_[lvl].orbit.size() && !restarted; ++oi) {
      const Point b = levels_[lvl].orbit[oi];
      for (std::size_t si = 0; si < levels_[lvl].generators.size(); ++si) {
        const Level& L = levels_[lvl];
        const Perm& s = L.generators[si];
        const Point c = s(b);
        Perm h = L.transversal[c]->inverse() * s * *L.transversal[b];
        if (h.is_identity()) continue;
        auto [res, j] = sift(h, lvl + 1);
        if (res.is_identity()) continue;
        if (j == levels_.size()) {
          Level nl;
          nl.base = static_cast<Point>(first_moved_point(res));
          levels_.push_back(std::move(nl));
        }
        for (std::size_t l = lvl + 1; l <= j; ++l) {
          levels_[l].generators.push_back(res);
          rebuild_orbit(l);
        }
        i = static_cast<std::ptrdiff_t>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

void StabilizerChain::rebuild_orbit(std::size_t k) {
  Level& L = levels_[k];
  L.orbit.assign(1, L.base);
  L.transversal.assign(degree_, std::nullopt);
  L.transversal[L.base] = Perm(degree_);
  for (std::size_t i = 0; i < L.orbit.size(); ++i) {
    const Point b = L.orbit[i];
    for (const auto& s : L.generators) {
      const Point c = s(b);
      if (!L.transversal[c]) {
        L.transversal[c] = s * *L.transversal[b];
        L.orbit.push_back(c);
      }
    }
  }
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  for (const auto& l : levels_) b.push_back(l.base);
  return b;
}

std::uint64_t StabilizerChain::order() const noexcept {
  std::uint64_t o = 1;
  for (const auto& l : levels_) o *= l.orbit.size();
  return o;
}

std::pair<Perm, std::size_t> StabilizerChain::sift(const Perm& p, std::size_t from) const {
  Perm g = p;
  for (std::size_t k = from; k < levels_.size(); ++k) {
    const Point b = g(levels_[k].base);
    const auto& u = levels_[k].transversal[b];
    if (!u) return {g, k};
    g = u->inverse() * g;
  }
  return {g, levels_.size()};
}

bool StabilizerChain::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  return sift(p).first.is_identity();
}

std::vector<Perm> StabilizerChain::elements() const {
  std::vector<Perm> out{Perm(degree_)};
  for (std::ptrdiff_t k = static_cast<std::ptrdiff_t>(levels_.size()) - 1; k >= 0; --k) {
    const Level& L = levels_[static_cast<std::size_t>(k)];
    std::vector<Perm> next;
    next.reserve(out.size() * L.orbit.size());
    for (Point b : L.orbit)
      for (const auto& e : out) next.push_back(*L.transversal[b] * e);
    out = std::move(next);
  }
  return out;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)), slot_(std::make_shared<ChainSlot>()) {
  check_degree(degree_, generators_);
}

PermGroup PermGroup::symmetric(std::size_t degree) {
  std::vector<Perm> gens;
  if (degree >= 2) {
    std::vector<Point> cyc(degree);
    for (std::size_t i = 0; i < degree; ++i) cyc[i] = static_cast<Point>(i);
    gens.push_back(Perm::from_cycles(degree, {cyc}));
    gens.push_back(Perm::from_cycles(degree, {{0, 1}}));
  }
  return PermGroup(degree, std::move(gens));
}

const StabilizerChain& PermGroup::chain() const {
  std::call_once(slot_->once, [this] {
    slot_->chain = std::make_unique<const StabilizerChain>(degree_, generators_);
  });
  return *slot_->chain;
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_) return false;
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Perm& g) { return other.contains(g); });
}

bool PermGroup::same_group(const PermGroup& other) const {
  return order() == other.order() && is_subgroup_of(other) && other.is_subgroup_of(*this);
}

std::vector<Perm> brute_force_closure(std::size_t degree, const std::vector<Perm>& generators,
                                      std::size_t cap) {
  check_degree(degree, generators);
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> out{Perm(degree)};
  seen.insert(out.front());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : generators) {
      Perm h = g * out[i];
      if (seen.insert(h).second) {
        out.push_back(std::move(h));
        if (out.size() > cap) throw Error("brute_force_closure: order exceeds cap");
      }
    }
  }
  return out;
}

std::vector<Point> orbit(const PermGroup& g, Point x) {
  std::vector<bool> seen(g.degree(), false);
  std::vector<Point> orb{x};
  seen[x] = true;
  for (std::size_t i = 0; i < orb.size(); ++i)
    for (const auto& s : g.generators()) {
      const Point y = s(orb[i]);
      if (!seen[y]) {
        seen[y] = true;
        orb.push_back(y);
      }
    }
  return orb;
}

std::vector<std::vector<Point>> orbits(const PermGroup& g) {
  std::vector<bool> seen(g.degree(), false);
  std::vector<std::vector<Point>> out;
  for (std::size_t x = 0; x < g.degree(); ++x) {
    if (seen[x]) continue;
    auto o = orbit(g, static_cast<Point>(x));
    for (Point y : o) seen[y] = true;
    std::sort(o.begin(), o.end());
    out.push_back(std::move(o));
  }
  return out;
}

bool is_transitive(const PermGroup& g) {
  return g.degree() == 0 || orbit(g, 0).size() == g.degree();
}

bool is_regular(const PermGroup& g) { return is_transitive(g) && g.order() == g.degree(); }

PermGroup point_stabilizer(const PermGroup& g, Point x) {
  if (x >= g.degree()) throw Error("point_stabilizer: point out of range");
  StabilizerChain c(g.degree(), g.generators(), {x});
  if (c.levels().size() < 2) return PermGroup::trivial(g.degree());
  return PermGroup(g.degree(), c.levels()[1].generators);
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& gens) {
  std::vector<Perm> hgens;
  for (const auto& p : gens)
    if (!p.is_identity()) hgens.push_back(p);
  PermGroup h(g.degree(), hgens);
  for (std::size_t i = 0; i < hgens.size(); ++i) {
    for (const auto& a : g.generators()) {
      Perm c = conjugate(a, hgens[i]);
      if (!h.contains(c)) {
        hgens.push_back(std::move(c));
        h = PermGroup(g.degree(), hgens);
      }
    }
  }
  return h;
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Perm> comms;
  const auto& gs = g.generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      comms.push_back(gs[i].inverse() * gs[j].inverse() * gs[i] * gs[j]);
  return normal_closure(g, comms);
}

std::vector<PermGroup> derived_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  while (true) {
    PermGroup d = derived_subgroup(series.back());
    if (d.order() == series.back().order()) break;
    series.push_back(std::move(d));
  }
  return series;
}

bool is_solvable(const PermGroup& g) { return derived_series(g).back().order() == 1; }

bool normalizes(const PermGroup& a, const PermGroup& n) {
  if (a.degree() != n.degree()) throw Error("normalizes: degree mismatch");
  for (const auto& x : a.generators())
    for (const auto& y : n.generators())
      if (!n.contains(conjugate(x, y))) return false;
  return true;
}

}  // namespace hgc
