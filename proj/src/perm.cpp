#include "hgc/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hgc {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw Error("Perm: image list is not a bijection");
    seen[x] = true;
  }
}

Perm Perm::unchecked(std::vector<Point> images) {
  Perm r;
  r.images_ = std::move(images);
  return r;
}

Perm Perm::from_cycles(std::size_t degree,
                       const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      Point a = c[i];
      if (a >= degree || used[a]) throw Error("Perm: bad cycle notation");
      used[a] = true;
      img[a] = c[(i + 1) % c.size()];
    }
  }
  return Perm(std::move(img));
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<Point> c;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Perm::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw Error("Perm: degree mismatch");
  std::vector<Point> img(q.degree());
  auto pi = p.images();
  auto qi = q.images();
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = pi[qi[i]];
  return Perm::unchecked(std::move(img));
}

Perm compose(const Perm& p, const Perm& q) { return p * q; }

Perm conjugate(const Perm& p, const Perm& q) { return p * q * p.inverse(); }

std::uint64_t element_order(const Perm& p) {
  std::uint64_t ord = 1;
  for (const auto& c : p.cycles()) ord = std::lcm(ord, static_cast<std::uint64_t>(c.size()));
  return ord;
}

bool is_fixed_point_free(const Perm& p) {
  for (std::size_t i = 0; i < p.degree(); ++i)
    if (p(static_cast<Point>(i)) == i) return false;
  return true;
}

std::size_t first_moved_point(const Perm& p) {
  for (std::size_t i = 0; i < p.degree(); ++i)
    if (p(static_cast<Point>(i)) != i) return i;
  return p.degree();
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) h = (h ^ x) * 1099511628211ull;
  return h;
}

}  // namespace hgc
