#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mobius {

using Point = std::uint32_t;

/// A bijection of the points 1..degree.
///
/// Composition follows the convention that `compose(a, b)` applies `b` first
/// and then `a`, i.e. `compose(a, b)(x) == a(b(x))`. Ordering is lexicographic
/// on the image sequence, which gives every element set a canonical order.
class Permutation {
 public:
  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree = 1);

  /// `images[i]` is the image of point `i + 1`. Throws if not a bijection of
  /// 1..images.size().
  static Permutation from_images(std::vector<Point> images);

  std::size_t degree() const { return images_.size(); }

  /// Image of a 1-based point.
  Point operator()(Point x) const { return images_[x - 1]; }

  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Least common multiple of the cycle lengths.
  std::size_t order() const;

  /// Cycle lengths in non-increasing order; fixed points appear as 1s.
  std::vector<std::size_t> cycle_type() const;

  /// Nontrivial cycles, each starting at its smallest point, sorted by that
  /// point.
  std::vector<std::vector<Point>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    if (a.images_.size() != b.images_.size()) {
      return a.images_.size() <=> b.images_.size();
    }
    return a.images_ <=> b.images_;
  }

 private:
  friend Permutation compose(const Permutation& a, const Permutation& b);
  struct Unchecked {};
  Permutation(Unchecked, std::vector<Point> images)
      : images_(std::move(images)) {}

  std::vector<Point> images_;
};

/// Builds a permutation from disjoint cycles; points absent from every cycle
/// are fixed. Throws std::invalid_argument on a repeated or out-of-range
/// point.
Permutation perm_from_cycles(const std::vector<std::vector<Point>>& cycles,
                             std::size_t degree);

/// Applies `b` first, then `a`. Throws std::invalid_argument when the degrees
/// differ.
Permutation compose(const Permutation& a, const Permutation& b);

inline Permutation operator*(const Permutation& a, const Permutation& b) {
  return compose(a, b);
}

inline std::size_t order_of(const Permutation& p) { return p.order(); }
inline std::vector<std::size_t> cycle_type(const Permutation& p) {
  return p.cycle_type();
}

/// `c * p * c^-1`
Permutation conjugate(const Permutation& p, const Permutation& c);

/// Cycle notation with whitespace-separated points, e.g. "(1 2 3)(4 5 6)";
/// the identity prints as "()".
std::string to_cycle_string(const Permutation& p);

/// Inverse of to_cycle_string. Accepts arbitrary whitespace and any number of
/// "()" groups. Throws std::invalid_argument on malformed text.
Permutation parse_cycles(std::string_view text, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace mobius
