#pragma once

// The lattice of set partitions of {0, ..., n-1} ordered by refinement.
//
// In memory every ground set is zero-based. Text renderings are one-based:
// "134/2" for n <= 9 and "{1,3,4}/{2}" once some element needs two digits.

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rbnc/permutation.hpp"
#include "rbnc/rational.hpp"

namespace rbnc {

/// Weakly decreasing sequence of positive integers.
class IntPartition {
 public:
  IntPartition() = default;
  /// Sorts the parts; throws PreconditionError on a non-positive part.
  explicit IntPartition(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  int size() const noexcept { return static_cast<int>(parts_.size()); }
  int weight() const noexcept;
  std::string to_string() const;  // "(2,1)"

  friend auto operator<=>(const IntPartition&, const IntPartition&) = default;
  friend bool operator==(const IntPartition&, const IntPartition&) = default;

 private:
  std::vector<int> parts_;
};

class SetPartition {
 public:
  using Mask = std::uint32_t;
  static constexpr int kMaxSize = 32;

  /// The unique partition of the empty set.
  SetPartition() = default;

  /// Blocks given as bitmasks over {0..n-1}. Validates disjointness and cover.
  static SetPartition from_masks(int n, std::vector<Mask> blocks);
  /// Blocks given as zero-based element lists.
  static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
  /// labels[i] names the block of element i; any integer labels work.
  static SetPartition from_labels(std::span<const int> labels);

  static SetPartition singletons(int n);    // the bottom element 0̂
  static SetPartition single_block(int n);  // the top element 1̂

  /// One-based text: "134/2" or "{1,3,4}/{2}". The empty string is Π_0.
  static SetPartition parse(std::string_view text);

  int size() const noexcept { return n_; }
  int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
  std::span<const Mask> blocks() const noexcept { return blocks_; }
  std::vector<int> block_elements(int b) const;
  int block_of(int element) const;

  std::string to_string() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  /// Ground size first, then lexicographic on the canonical block lists.
  friend std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b);

 private:
  SetPartition(int n, std::vector<Mask> blocks) : n_(n), blocks_(std::move(blocks)) {}

  int n_ = 0;
  std::vector<Mask> blocks_;  // sorted by lowest element
};

/// Every set partition of {0..n-1} once, ascending. 1 <= n <= 12.
std::vector<SetPartition> enumerate_partitions(int n);

/// Same as enumerate_partitions but also accepts n == 0 (returns {Π_0}).
std::vector<SetPartition> partitions_of(int n);

/// sigma <= pi: every block of sigma sits inside a block of pi.
bool refines(const SetPartition& sigma, const SetPartition& pi);

/// Möbius function of [sigma, pi] via the block product formula.
Integer mobius(const SetPartition& sigma, const SetPartition& pi);

/// μ(0̂, pi).
Integer mobius_from_bottom(const SetPartition& pi);

IntPartition lambda_of(const SetPartition& pi);

/// |π| = r_1! r_2! ... where r_i counts blocks of size i.
Integer multiplicity_weight(const SetPartition& pi);

/// π! = product of |B|! over blocks.
Integer factorial_weight(const SetPartition& pi);

/// π + (n): the new element n joins the block holding n-1.
SetPartition insert_last(const SetPartition& pi);

/// δ(π): blocks mapped elementwise by delta.
SetPartition apply_perm(const Permutation& delta, const SetPartition& pi);

/// Type(σ): blocks are the orbits of sigma.
SetPartition cycle_type_partition(const Permutation& sigma);

/// All σ with pi <= σ, ascending.
std::vector<SetPartition> coarsenings(const SetPartition& pi);

/// All σ with σ <= pi, ascending.
std::vector<SetPartition> refinements(const SetPartition& pi);

/// Concatenation: blocks of right shifted up by left.size().
SetPartition shift_union(const SetPartition& left, const SetPartition& right);

}  // namespace rbnc

template <>
struct std::hash<rbnc::SetPartition> {
  std::size_t operator()(const rbnc::SetPartition& pi) const noexcept;
};
