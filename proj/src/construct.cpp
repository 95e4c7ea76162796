#include "hgc/construct.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "hgc/catalog.hpp"

namespace hgc {

namespace {

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

bool is_prime_power(std::size_t q) {
  if (q < 2) return false;
  const auto ps = prime_factors(q);
  return ps.size() == 1;
}

std::vector<Elem> product_table(std::size_t n, auto&& mul) {
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Elem>(mul(a, b));
  return t;
}

// Full action table phi(h) for every h, from generator images; verifies the
// homomorphism property.
std::vector<Perm> extend_action(const AbstractGroup& p, const AbstractGroup& h,
                                const SemidirectAction& action) {
  if (action.h_generators.size() != action.images.size())
    throw Error("semidirect_product: generator/image count mismatch");
  const std::size_t np = p.order();
  for (const auto& a : action.images) {
    if (a.degree() != np || a(0) != 0) throw Error("semidirect_product: image is not an automorphism");
    for (std::size_t x = 0; x < np; ++x)
      for (std::size_t y = 0; y < np; ++y)
        if (a(static_cast<Point>(p.mul(static_cast<Elem>(x), static_cast<Elem>(y)))) !=
            p.mul(a(static_cast<Point>(x)), a(static_cast<Point>(y))))
          throw Error("semidirect_product: image is not an automorphism");
  }
  std::vector<std::optional<Perm>> phi(h.order());
  phi[0] = Perm(np);
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem x = queue[i];
    for (std::size_t g = 0; g < action.h_generators.size(); ++g) {
      const Elem y = h.mul(x, action.h_generators[g]);
      Perm v = *phi[x] * action.images[g];
      if (!phi[y]) {
        phi[y] = std::move(v);
        queue.push_back(y);
      } else if (*phi[y] != v) {
        throw Error("semidirect_product: action is not a homomorphism");
      }
    }
  }
  std::vector<Perm> out;
  for (auto& v : phi) {
    if (!v) throw Error("semidirect_product: listed elements do not generate H");
    out.push_back(std::move(*v));
  }
  return out;
}

}  // namespace

AbstractGroup cyclic(std::size_t n) {
  if (n == 0) throw Error("cyclic: order must be positive");
  return AbstractGroup(product_table(n, [n](std::size_t a, std::size_t b) { return (a + b) % n; }), n, false);
}

AbstractGroup dihedral(std::size_t n) {
  if (n < 4 || n % 2) throw Error("dihedral: order must be even and at least 4");
  const std::size_t m = n / 2;
  // a^i s^j -> i + m j, s a = a^-1 s.
  auto mul = [m](std::size_t x, std::size_t y) {
    const std::size_t i = x % m, j = x / m, k = y % m, l = y / m;
    const std::size_t r = j ? (i + m - k) % m : (i + k) % m;
    return r + m * ((j + l) % 2);
  };
  return AbstractGroup(product_table(n, mul), n, false);
}

AbstractGroup dicyclic(std::size_t n) {
  if (n == 0) throw Error("dicyclic: parameter must be positive");
  const std::size_t m = 2 * n;
  // a^i x^j -> i + m j, x a x^-1 = a^-1, x^2 = a^n.
  auto mul = [m, n](std::size_t x, std::size_t y) {
    const std::size_t i = x % m, j = x / m, k = y % m, l = y / m;
    std::size_t r = j ? (i + m - k) % m : (i + k) % m;
    std::size_t e = j + l;
    if (e == 2) {
      r = (r + n) % m;
      e = 0;
    }
    return r + m * e;
  };
  return AbstractGroup(product_table(2 * m, mul), 2 * m, false);
}

AbstractGroup elementary_abelian(std::size_t q) {
  if (!is_prime_power(q)) throw Error("elementary_abelian: order must be a prime power");
  const std::size_t p = prime_factors(q).front();
  auto mul = [p](std::size_t a, std::size_t b) {
    std::size_t r = 0, scale = 1;
    while (a || b) {
      r += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return r;
  };
  return AbstractGroup(product_table(q, mul), q, false);
}

std::vector<Perm> symmetric_elements(std::size_t k) {
  std::vector<Point> img(k);
  for (std::size_t i = 0; i < k; ++i) img[i] = static_cast<Point>(i);
  std::vector<Perm> out;
  do out.push_back(Perm::unchecked(img));
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<Perm> alternating_elements(std::size_t k) {
  std::vector<Perm> out;
  for (auto& p : symmetric_elements(k)) {
    std::size_t even = 0;
    for (const auto& c : p.cycles()) even += c.size() - 1;
    if (even % 2 == 0) out.push_back(std::move(p));
  }
  return out;
}

AbstractGroup symmetric(std::size_t k) {
  if (k < 1 || k > 6) throw Error("symmetric: degree must be in 1..6");
  return AbstractGroup::from_perms(symmetric_elements(k));
}

AbstractGroup alternating(std::size_t k) {
  if (k < 1 || k > 6) throw Error("alternating: degree must be in 1..6");
  return AbstractGroup::from_perms(alternating_elements(k));
}

AbstractGroup quaternion8() { return dicyclic(2); }

AbstractGroup special_linear2(std::size_t p) {
  if (!is_prime(p)) throw Error("special_linear2: p must be prime");
  using M = std::array<std::size_t, 4>;
  std::vector<M> mats;
  const M id{1, 0, 0, 1};
  mats.push_back(id);
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b)
      for (std::size_t c = 0; c < p; ++c)
        for (std::size_t d = 0; d < p; ++d) {
          M m{a, b, c, d};
          if ((a * d + p * p - (b * c) % (p * p)) % p == 1 && m != id) mats.push_back(m);
        }
  std::map<M, std::size_t> index;
  for (std::size_t i = 0; i < mats.size(); ++i) index[mats[i]] = i;
  auto mul = [&](std::size_t x, std::size_t y) {
    const M& u = mats[x];
    const M& v = mats[y];
    M r{(u[0] * v[0] + u[1] * v[2]) % p, (u[0] * v[1] + u[1] * v[3]) % p,
        (u[2] * v[0] + u[3] * v[2]) % p, (u[2] * v[1] + u[3] * v[3]) % p};
    return index.at(r);
  };
  return AbstractGroup(product_table(mats.size(), mul), mats.size(), false);
}

AbstractGroup direct_product(const AbstractGroup& a, const AbstractGroup& b) {
  const std::size_t na = a.order(), nb = b.order();
  auto mul = [&](std::size_t x, std::size_t y) {
    return a.mul(static_cast<Elem>(x % na), static_cast<Elem>(y % na)) +
           na * b.mul(static_cast<Elem>(x / na), static_cast<Elem>(y / na));
  };
  return AbstractGroup(product_table(na * nb, mul), na * nb, false);
}

AbstractGroup semidirect_product_full(const AbstractGroup& p, const AbstractGroup& h,
                                      const std::vector<Perm>& phi) {
  const std::size_t np = p.order(), nh = h.order();
  auto mul = [&](std::size_t x, std::size_t y) {
    const Elem p1 = static_cast<Elem>(x % np), h1 = static_cast<Elem>(x / np);
    const Elem p2 = static_cast<Elem>(y % np), h2 = static_cast<Elem>(y / np);
    return p.mul(p1, phi[h1](static_cast<Point>(p2))) + np * h.mul(h1, h2);
  };
  return AbstractGroup(product_table(np * nh, mul), np * nh, false);
}

AbstractGroup semidirect_product(const AbstractGroup& p, const AbstractGroup& h,
                                 const SemidirectAction& action) {
  return semidirect_product_full(p, h, extend_action(p, h, action));
}

GroupExpr GroupExpr::product(GroupExpr a, GroupExpr b) {
  GroupExpr e;
  e.kind = Kind::Product;
  e.children = {std::move(a), std::move(b)};
  return e;
}

std::string GroupExpr::to_string() const {
  switch (kind) {
    case Kind::Cyclic: return "C" + std::to_string(param);
    case Kind::Dihedral: return "D" + std::to_string(param);
    case Kind::Dicyclic: return "Dic" + std::to_string(param);
    case Kind::Elementary: return "E" + std::to_string(param);
    case Kind::V4: return "V4";
    case Kind::Alternating: return "A" + std::to_string(param);
    case Kind::Symmetric: return "S" + std::to_string(param);
    case Kind::Q8: return "Q8";
    case Kind::SL23: return "SL(2,3)";
    case Kind::SL25: return "SL(2,5)";
    case Kind::CatalogId: return "o" + std::to_string(param) + "#" + std::to_string(index);
    case Kind::Product: return children.at(0).to_string() + "x" + children.at(1).to_string();
    case Kind::Semidirect: return "(" + children.at(0).to_string() + "):(" + children.at(1).to_string() + ")";
  }
  return {};
}

void check_leaf(GroupExpr::Kind kind, std::size_t param) {
  using K = GroupExpr::Kind;
  switch (kind) {
    case K::Cyclic:
      if (param < 1 || param > 1000) throw Error("C<k>: k must be in 1..1000");
      break;
    case K::Dihedral:
      if (param < 4 || param % 2 || param > 1000) throw Error("D<k>: dihedral order k must be even and >= 4");
      break;
    case K::Dicyclic:
      if (param < 1 || param > 250) throw Error("Dic<k>: k must be in 1..250");
      break;
    case K::Elementary:
      if (!is_prime_power(param) || param > 1000) throw Error("E<k>: k must be a prime power");
      break;
    case K::Alternating:
    case K::Symmetric:
      if (param < 1 || param > 6) throw Error("A<k>/S<k>: k must be in 1..6");
      break;
    default: break;
  }
}

AbstractGroup construct(const GroupExpr& e) {
  using K = GroupExpr::Kind;
  switch (e.kind) {
    case K::Cyclic: check_leaf(e.kind, e.param); return cyclic(e.param);
    case K::Dihedral: check_leaf(e.kind, e.param); return dihedral(e.param);
    case K::Dicyclic: check_leaf(e.kind, e.param); return dicyclic(e.param);
    case K::Elementary: check_leaf(e.kind, e.param); return elementary_abelian(e.param);
    case K::V4: return elementary_abelian(4);
    case K::Alternating: check_leaf(e.kind, e.param); return alternating(e.param);
    case K::Symmetric: check_leaf(e.kind, e.param); return symmetric(e.param);
    case K::Q8: return quaternion8();
    case K::SL23: return special_linear2(3);
    case K::SL25: return special_linear2(5);
    case K::CatalogId: {
      const auto& cat = catalog(e.param);
      if (e.index < 1 || e.index > cat.size())
        throw Error("catalog id o" + std::to_string(e.param) + "#" + std::to_string(e.index) + " out of range");
      return *cat[e.index - 1];
    }
    case K::Product: return direct_product(construct(e.children.at(0)), construct(e.children.at(1)));
    case K::Semidirect:
      return semidirect_product(construct(e.children.at(0)), construct(e.children.at(1)), e.action);
  }
  throw Error("construct: unknown expression kind");
}

}  // namespace hgc
