#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cdg/errors.hpp"

namespace cdg {

/// A permutation of {0, ..., degree-1}, stored as its image list.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `images` is a bijection.
  explicit Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::uint32_t x : images_) {
      if (x >= images_.size() || seen[x])
        throw InvalidPermutation("image list is not a bijection on the stated degree");
      seen[x] = true;
    }
  }

  static Permutation identity(std::uint32_t degree) {
    std::vector<std::uint32_t> im(degree);
    for (std::uint32_t i = 0; i < degree; ++i) im[i] = i;
    return Permutation(std::move(im));
  }

  std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
  std::uint32_t operator()(std::uint32_t p) const { return images_[p]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  /// Composition "this first, then other".
  Permutation then(const Permutation& other) const {
    std::vector<std::uint32_t> im(images_.size());
    for (std::size_t p = 0; p < images_.size(); ++p) im[p] = other.images_[images_[p]];
    Permutation r;
    r.images_ = std::move(im);  // bijection by construction
    return r;
  }

  Permutation inverse() const {
    std::vector<std::uint32_t> im(images_.size());
    for (std::uint32_t p = 0; p < images_.size(); ++p) im[images_[p]] = p;
    Permutation r;
    r.images_ = std::move(im);
    return r;
  }

  bool is_identity() const {
    for (std::uint32_t p = 0; p < images_.size(); ++p)
      if (images_[p] != p) return false;
    return true;
  }

  bool operator==(const Permutation& o) const { return images_ == o.images_; }

  /// Disjoint-cycle notation with 1-based points; identity prints "()".
  std::string cycle_string() const {
    std::string out;
    std::vector<bool> done(images_.size(), false);
    for (std::uint32_t start = 0; start < images_.size(); ++start) {
      if (done[start] || images_[start] == start) continue;
      out += '(';
      std::uint32_t p = start;
      bool first = true;
      do {
        if (!first) out += ' ';
        out += std::to_string(p + 1);
        done[p] = true;
        p = images_[p];
        first = false;
      } while (p != start);
      out += ')';
    }
    if (out.empty()) out = "()";
    return out;
  }

 private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace cdg
