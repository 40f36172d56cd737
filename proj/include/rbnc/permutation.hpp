#pragma once

#include <span>
#include <vector>

namespace rbnc {

/// A bijection of {0, ..., n-1}. One-based views exist only for text I/O.
class Permutation {
 public:
  Permutation() = default;

  /// images[i] is the image of i. Throws PreconditionError unless bijective.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation from_one_based(std::span<const int> images);
  static Permutation transposition(int n, int a, int b);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  std::span<const int> images() const noexcept { return images_; }

  Permutation inverse() const;

  /// (*this ∘ other)(i) = (*this)(other(i)).
  Permutation after(const Permutation& other) const;

  /// Orbits, each listed from its smallest element along the permutation.
  std::vector<std::vector<int>> cycles() const;

  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace rbnc
