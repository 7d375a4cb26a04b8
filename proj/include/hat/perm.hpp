#pragma once

/**
 * @file perm.hpp
 * @brief Permutations of {0, ..., n-1} stored as full image arrays.
 *
 * Permutations act on the right: x^(gh) = (x^g)^h, so `g * h` applies g
 * first and then h. Conjugation follows the same convention,
 * s^g = g^-1 s g.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hat {

using Point = std::uint32_t;

class Perm {
 public:
  Perm() = default;

  /// Throws Error(BadParameter) unless `images` is a bijection.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  std::span<const Point> images() const noexcept { return images_; }

  /// Image of x.
  Point operator()(Point x) const { return images_[x]; }

  /// Right-action product: apply *this, then h.
  Perm operator*(const Perm& h) const;
  Perm inverse() const;
  Perm pow(long long e) const;
  /// g^-1 * this * g.
  Perm conjugate_by(const Perm& g) const;

  bool is_identity() const noexcept;
  std::size_t order() const;
  std::size_t fixed_point_count() const noexcept;
  std::size_t hash() const noexcept;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  struct Unchecked {};
  Perm(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept { return p.hash(); }
};

/// Cycle notation, e.g. "(0 1 2)(3 4)"; identity prints as "()".
std::string to_cycle_string(const Perm& p);

}  // namespace hat
