#include "mobius/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace mobius {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree == 0) {
    throw std::invalid_argument("permutation degree must be at least 1");
  }
  std::iota(images_.begin(), images_.end(), Point{1});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  if (images.empty()) {
    throw std::invalid_argument("permutation degree must be at least 1");
  }
  std::vector<bool> seen(images.size(), false);
  for (Point x : images) {
    if (x < 1 || x > images.size() || seen[x - 1]) {
      throw std::invalid_argument("image sequence is not a bijection");
    }
    seen[x - 1] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv.images_[images_[i] - 1] = static_cast<Point>(i + 1);
  }
  return inv;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  for (std::size_t len : cycle_type()) result = std::lcm(result, len);
  return result;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t x = start; !seen[x]; x = images_[x] - 1) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start + 1) continue;
    std::vector<Point> cycle;
    for (std::size_t x = start; !seen[x]; x = images_[x] - 1) {
      seen[x] = true;
      cycle.push_back(static_cast<Point>(x + 1));
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

Permutation perm_from_cycles(const std::vector<std::vector<Point>>& cycles,
                             std::size_t degree) {
  Permutation id(degree);
  std::vector<Point> images = id.images();
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x < 1 || x > degree) {
        throw std::invalid_argument("cycle point " + std::to_string(x) +
                                    " out of range 1.." +
                                    std::to_string(degree));
      }
      if (used[x - 1]) {
        throw std::invalid_argument("point " + std::to_string(x) +
                                    " repeated in cycles");
      }
      used[x - 1] = true;
      images[x - 1] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation::from_images(std::move(images));
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("cannot compose permutations of degree " +
                                std::to_string(a.degree()) + " and " +
                                std::to_string(b.degree()));
  }
  std::vector<Point> images(a.degree());
  const auto& bi = b.images();
  const auto& ai = a.images();
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = ai[bi[i] - 1];
  return Permutation(Permutation::Unchecked{}, std::move(images));
}

Permutation conjugate(const Permutation& p, const Permutation& c) {
  return compose(c, compose(p, c.inverse()));
}

std::string to_cycle_string(const Permutation& p) {
  auto cycles = p.cycles();
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& cycle : cycles) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("malformed cycle notation at offset " +
                                std::to_string(pos) + ": " + what);
  };
  auto skip_space = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  skip_space();
  if (pos == text.size()) fail("empty input");
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<Point> cycle;
    skip_space();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        fail("expected a point");
      }
      std::uint64_t value = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (value > degree) fail("point exceeds degree");
        ++pos;
      }
      cycle.push_back(static_cast<Point>(value));
      skip_space();
    }
    if (pos == text.size()) fail("unterminated cycle");
    ++pos;
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return perm_from_cycles(cycles, degree);
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image sequence.
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace mobius
