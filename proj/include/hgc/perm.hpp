#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgc {

using Point = std::uint16_t;

/// Error raised for malformed input to the group engines (degree mismatch,
/// non-bijective images, unsupported parameters, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A permutation of {0, ..., d-1}, stored as its image list.
///
/// Composition follows function notation: (p * q)(x) = p(q(x)), i.e. q is
/// applied first.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  explicit Perm(std::vector<Point> images);

  /// Trusts the caller that images is a bijection.
  static Perm unchecked(std::vector<Point> images);

  /// Builds a permutation from 0-indexed disjoint cycles.
  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Perm inverse() const;

  /// Cycle notation, fixed points omitted; "()" for the identity.
  std::string to_cycle_string() const;
  std::vector<std::vector<Point>> cycles() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<Point> images_;
};

Perm operator*(const Perm& p, const Perm& q);
Perm compose(const Perm& p, const Perm& q);
/// p q p^-1
Perm conjugate(const Perm& p, const Perm& q);
std::uint64_t element_order(const Perm& p);
bool is_fixed_point_free(const Perm& p);
/// Smallest point moved by p, or degree() for the identity.
std::size_t first_moved_point(const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace hgc
