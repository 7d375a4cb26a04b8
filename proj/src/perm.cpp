#include "hat/perm.hpp"

#include <numeric>
#include <sstream>

#include "hat/error.hpp"

namespace hat {

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y])
      throw Error(Errc::BadParameter, "image array is not a bijection");
    seen[y] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Perm(std::move(images), Unchecked{});
}

Perm Perm::operator*(const Perm& h) const {
  if (h.degree() != degree())
    throw Error(Errc::DomainMismatch, "composing permutations of different degree");
  std::vector<Point> out(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    out[x] = h.images_[images_[x]];
  return Perm(std::move(out), Unchecked{});
}

Perm Perm::inverse() const {
  std::vector<Point> out(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    out[images_[x]] = static_cast<Point>(x);
  return Perm(std::move(out), Unchecked{});
}

Perm Perm::pow(long long e) const {
  Perm base = e < 0 ? inverse() : *this;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e)
                               : static_cast<unsigned long long>(e);
  Perm result = identity(degree());
  while (n) {
    if (n & 1u)
      result = result * base;
    base = base * base;
    n >>= 1u;
  }
  return result;
}

Perm Perm::conjugate_by(const Perm& g) const {
  // x^(g^-1 s g): with y = x^(g^-1), the image is (y^s)^g.
  // Equivalently image[x^g] = (x^s)^g.
  std::vector<Point> out(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    out[g.images_[x]] = g.images_[images_[x]];
  return Perm(std::move(out), Unchecked{});
}

bool Perm::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x)
      return false;
  return true;
}

std::size_t Perm::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t result = 1;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x])
      continue;
    std::size_t len = 0;
    for (Point y = static_cast<Point>(x); !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::size_t Perm::fixed_point_count() const noexcept {
  std::size_t count = 0;
  for (std::size_t x = 0; x < images_.size(); ++x)
    count += images_[x] == x;
  return count;
}

std::size_t Perm::hash() const noexcept {
  // FNV-1a over the image array.
  std::size_t h = 1469598103934665603ull;
  for (Point y : images_) {
    h ^= y;
    h *= 1099511628211ull;
  }
  return h;
}

std::string to_cycle_string(const Perm& p) {
  std::ostringstream out;
  std::vector<bool> seen(p.degree(), false);
  bool any = false;
  for (Point x = 0; x < p.degree(); ++x) {
    if (seen[x] || p(x) == x)
      continue;
    any = true;
    out << '(';
    for (Point y = x; !seen[y]; y = p(y)) {
      seen[y] = true;
      if (y != x)
        out << ' ';
      out << y;
    }
    out << ')';
  }
  if (!any)
    out << "()";
  return out.str();
}

}  // namespace hat
