#include "hgc/iso.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <tuple>

namespace hgc {

namespace {

constexpr Elem kUnset = std::numeric_limits<Elem>::max();

}  // namespace

std::vector<Elem> generating_sequence(const AbstractGroup& g) {
  const std::size_t n = g.order();
  std::map<std::uint32_t, std::size_t> order_count;
  for (std::size_t x = 0; x < n; ++x) ++order_count[g.element_order(static_cast<Elem>(x))];

  std::vector<Elem> gens;
  Subgroup current{0};
  while (current.size() < n) {
    std::vector<bool> in(n, false);
    for (Elem x : current) in[x] = true;
    std::tuple<std::size_t, std::size_t, Elem> best{0, 0, 0};
    Subgroup best_sub;
    bool have = false;
    for (std::size_t x = 1; x < n; ++x) {
      if (in[x]) continue;
      auto trial = gens;
      trial.push_back(static_cast<Elem>(x));
      Subgroup s = generated_subgroup(g, trial);
      const std::tuple<std::size_t, std::size_t, Elem> key{
          std::numeric_limits<std::size_t>::max() - s.size(),
          order_count[g.element_order(static_cast<Elem>(x))], static_cast<Elem>(x)};
      if (!have || key < best) {
        best = key;
        best_sub = std::move(s);
        have = true;
      }
    }
    gens.push_back(std::get<2>(best));
    current = std::move(best_sub);
  }
  return gens;
}

WordTree::WordTree(const AbstractGroup& g, std::vector<Elem> gens)
    : order_(g.order()), gens_(std::move(gens)) {
  for (std::size_t j = 0; j <= gens_.size(); ++j) {
    std::vector<bool> seen(order_, false);
    std::vector<Elem> list{0};
    seen[0] = true;
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t k = 0; k < j; ++k) {
        const Elem y = g.mul(list[i], gens_[k]);
        if (!seen[y]) {
          seen[y] = true;
          list.push_back(y);
        }
      }
    prefix_.push_back(std::move(list));
  }
  if (prefix_.back().size() != order_) throw Error("WordTree: sequence does not generate the group");
}

void for_each_homomorphism(const AbstractGroup& g, const std::vector<Elem>& gens,
                           const AbstractGroup& h, const HomSearchOptions& options,
                           const std::function<bool(const std::vector<Elem>&)>& visit) {
  const WordTree tree(g, gens);
  const std::size_t k = gens.size();
  const std::size_t nh = h.order();

  std::vector<std::size_t> gsize, hsize;
  if (options.match_class_sizes) {
    gsize = class_size_of(g);
    hsize = class_size_of(h);
  }
  std::vector<std::vector<Elem>> candidates(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint32_t o = g.element_order(gens[i]);
    for (std::size_t y = 0; y < nh; ++y) {
      const std::uint32_t oy = h.element_order(static_cast<Elem>(y));
      if (options.injective ? oy != o : o % oy != 0) continue;
      if (options.match_class_sizes && gsize[gens[i]] != hsize[y]) continue;
      candidates[i].push_back(static_cast<Elem>(y));
    }
  }

  std::vector<Elem> images(k, 0);
  std::vector<Elem> phi(g.order(), kUnset);
  std::vector<std::uint32_t> used(nh, 0);
  std::uint32_t stamp = 0;
  std::uint64_t nodes = 0;

  // Evaluates phi on <g_0..g_{j-1}>; false on a relation or injectivity clash.
  auto check_prefix = [&](std::size_t j) {
    const auto& elems = tree.prefix_elements(j);
    for (Elem x : elems) phi[x] = kUnset;
    ++stamp;
    phi[0] = 0;
    used[0] = stamp;
    for (Elem x : elems) {
      const Elem px = phi[x];
      for (std::size_t i = 0; i < j; ++i) {
        const Elem y = g.mul(x, gens[i]);
        const Elem v = h.mul(px, images[i]);
        if (phi[y] == kUnset) {
          if (options.injective) {
            if (used[v] == stamp) return false;
            used[v] = stamp;
          }
          phi[y] = v;
        } else if (phi[y] != v) {
          return false;
        }
      }
    }
    return true;
  };

  bool stop = false;
  std::function<void(std::size_t)> recurse = [&](std::size_t j) {
    if (j == k) {
      if (!visit(phi)) stop = true;
      return;
    }
    for (Elem c : candidates[j]) {
      if (options.budget && ++nodes > options.budget)
        throw BudgetExhausted("homomorphism search: budget exhausted");
      images[j] = c;
      if (!check_prefix(j + 1)) continue;
      recurse(j + 1);
      if (stop) return;
    }
  };
  if (k == 0) {
    phi.assign(1, 0);
    visit(phi);
    return;
  }
  recurse(0);
}

bool is_homomorphism(const AbstractGroup& g, const AbstractGroup& h, const std::vector<Elem>& map) {
  if (map.size() != g.order()) return false;
  for (Elem x : map)
    if (x >= h.order()) return false;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (map[g.mul(static_cast<Elem>(a), static_cast<Elem>(b))] != h.mul(map[a], map[b])) return false;
  return true;
}

std::optional<std::vector<Elem>> find_isomorphism(const AbstractGroup& g, const AbstractGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (!(g.fingerprint() == h.fingerprint())) return std::nullopt;
  std::optional<std::vector<Elem>> found;
  HomSearchOptions opt;
  opt.injective = true;
  opt.match_class_sizes = true;
  for_each_homomorphism(g, generating_sequence(g), h, opt, [&](const std::vector<Elem>& m) {
    found = m;
    return false;
  });
  return found;
}

std::vector<std::vector<Elem>> all_automorphisms(const AbstractGroup& g, std::uint64_t budget) {
  std::vector<std::vector<Elem>> out;
  HomSearchOptions opt;
  opt.injective = true;
  opt.match_class_sizes = true;
  opt.budget = budget;
  for_each_homomorphism(g, generating_sequence(g), g, opt, [&](const std::vector<Elem>& m) {
    out.push_back(m);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hgc
