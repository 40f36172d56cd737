#include "rbnc/setpart.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <numeric>

#include "rbnc/errors.hpp"

namespace rbnc {

namespace {

using Mask = SetPartition::Mask;

Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

int lowest(Mask m) { return std::countr_zero(m); }

void check_size(int n) {
  if (n < 0 || n > SetPartition::kMaxSize)
    throw SizeLimitError("set partitions support ground sets of size 0.." +
                         std::to_string(SetPartition::kMaxSize));
}

// Restricted growth strings of length k: labels[0] = 0 and
// labels[i] <= 1 + max(labels[0..i-1]). Each one is a set partition of [k].
template <typename Fn>
void for_each_rgs(int k, Fn&& fn) {
  std::vector<int> labels(static_cast<std::size_t>(k), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(k), 0);
  if (k == 0) {
    fn(std::span<const int>(labels));
    return;
  }
  while (true) {
    fn(std::span<const int>(labels));
    int i = k - 1;
    while (i > 0 && labels[static_cast<std::size_t>(i)] > prefix_max[static_cast<std::size_t>(i - 1)]) --i;
    if (i == 0) return;
    ++labels[static_cast<std::size_t>(i)];
    prefix_max[static_cast<std::size_t>(i)] =
        std::max(prefix_max[static_cast<std::size_t>(i - 1)], labels[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < k; ++j) {
      labels[static_cast<std::size_t>(j)] = 0;
      prefix_max[static_cast<std::size_t>(j)] = prefix_max[static_cast<std::size_t>(i)];
    }
  }
}

// Lexicographic comparison of two sets read as ascending element lists.
std::strong_ordering compare_sets(Mask a, Mask b) {
  if (a == b) return std::strong_ordering::equal;
  const Mask diff = a ^ b;
  const Mask d = diff & (~diff + 1);
  const Mask above = ~(d | (d - 1));
  if (a & d) return (b & above) ? std::strong_ordering::less : std::strong_ordering::greater;
  return (a & above) ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::vector<int> labels_of(const SetPartition& pi) {
  std::vector<int> labels(static_cast<std::size_t>(pi.size()), -1);
  for (int b = 0; b < pi.block_count(); ++b) {
    for (Mask m = pi.blocks()[static_cast<std::size_t>(b)]; m; m &= m - 1)
      labels[static_cast<std::size_t>(lowest(m))] = b;
  }
  return labels;
}

// Every partition of the elements of `set`, as lists of block masks.
std::vector<std::vector<Mask>> partitions_of_set(Mask set) {
  std::vector<int> elements;
  for (Mask m = set; m; m &= m - 1) elements.push_back(lowest(m));
  std::vector<std::vector<Mask>> out;
  for_each_rgs(static_cast<int>(elements.size()), [&](std::span<const int> labels) {
    std::vector<Mask> blocks;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const auto b = static_cast<std::size_t>(labels[i]);
      if (b == blocks.size()) blocks.push_back(0);
      blocks[b] |= Mask{1} << elements[i];
    }
    out.push_back(std::move(blocks));
  });
  return out;
}

void require_same_size(const SetPartition& a, const SetPartition& b) {
  if (a.size() != b.size())
    throw DegreeMismatchError("set partitions of " + std::to_string(a.size()) + " and " +
                              std::to_string(b.size()) + " elements");
}

}  // namespace

IntPartition::IntPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw PreconditionError("integer partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int IntPartition::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string IntPartition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

SetPartition SetPartition::from_masks(int n, std::vector<Mask> blocks) {
  check_size(n);
  Mask seen = 0;
  for (Mask b : blocks) {
    if (b == 0) throw PreconditionError("set partition blocks must be nonempty");
    if (b & ~full_mask(n)) throw PreconditionError("set partition element out of range");
    if (b & seen) throw PreconditionError("set partition blocks must be disjoint");
    seen |= b;
  }
  if (seen != full_mask(n)) throw PreconditionError("set partition blocks must cover the ground set");
  std::sort(blocks.begin(), blocks.end(), [](Mask a, Mask b) { return lowest(a) < lowest(b); });
  return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  check_size(n);
  std::vector<Mask> masks;
  masks.reserve(blocks.size());
  for (const auto& block : blocks) {
    Mask m = 0;
    for (int e : block) {
      if (e < 0 || e >= n) throw PreconditionError("set partition element out of range");
      if (m & (Mask{1} << e)) throw PreconditionError("repeated element in a block");
      m |= Mask{1} << e;
    }
    masks.push_back(m);
  }
  return from_masks(n, std::move(masks));
}

SetPartition SetPartition::from_labels(std::span<const int> labels) {
  const int n = static_cast<int>(labels.size());
  check_size(n);
  std::map<int, Mask> groups;
  for (int i = 0; i < n; ++i) groups[labels[static_cast<std::size_t>(i)]] |= Mask{1} << i;
  std::vector<Mask> masks;
  masks.reserve(groups.size());
  for (const auto& [label, mask] : groups) masks.push_back(mask);
  return from_masks(n, std::move(masks));
}

SetPartition SetPartition::singletons(int n) {
  check_size(n);
  std::vector<Mask> masks;
  for (int i = 0; i < n; ++i) masks.push_back(Mask{1} << i);
  return SetPartition(n, std::move(masks));
}

SetPartition SetPartition::single_block(int n) {
  check_size(n);
  if (n == 0) return SetPartition();
  return SetPartition(n, {full_mask(n)});
}

SetPartition SetPartition::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return SetPartition();
  const std::string whole(text);

  std::vector<std::vector<int>> blocks;
  const bool braced = text.find('{') != std::string_view::npos;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t slash = text.find('/', pos);
    if (slash == std::string_view::npos) slash = text.size();
    std::string_view chunk = text.substr(pos, slash - pos);
    std::vector<int> block;
    if (braced) {
      if (chunk.size() < 2 || chunk.front() != '{' || chunk.back() != '}')
        throw ParseError("malformed set partition '" + whole + "'");
      chunk = chunk.substr(1, chunk.size() - 2);
      std::size_t p = 0;
      while (p <= chunk.size()) {
        std::size_t comma = chunk.find(',', p);
        if (comma == std::string_view::npos) comma = chunk.size();
        const std::string_view num = chunk.substr(p, comma - p);
        if (num.empty() || num.size() > 3 ||
            !std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
          throw ParseError("malformed set partition '" + whole + "'");
        block.push_back(std::stoi(std::string(num)) - 1);
        p = comma + 1;
      }
    } else {
      if (chunk.empty()) throw ParseError("empty block in set partition '" + whole + "'");
      for (char c : chunk) {
        if (c < '1' || c > '9') throw ParseError("malformed set partition '" + whole + "'");
        block.push_back(c - '1');
      }
    }
    blocks.push_back(std::move(block));
    pos = slash + 1;
  }

  int n = 0;
  for (const auto& b : blocks)
    for (int e : b) n = std::max(n, e + 1);
  if (n > kMaxSize) throw ParseError("set partition '" + whole + "' is too large");
  try {
    return from_blocks(n, blocks);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string(e.what()) + " in '" + whole + "'");
  }
}

std::vector<int> SetPartition::block_elements(int b) const {
  std::vector<int> out;
  for (Mask m = blocks_.at(static_cast<std::size_t>(b)); m; m &= m - 1) out.push_back(lowest(m));
  return out;
}

int SetPartition::block_of(int element) const {
  for (int b = 0; b < block_count(); ++b)
    if (blocks_[static_cast<std::size_t>(b)] & (Mask{1} << element)) return b;
  throw PreconditionError("element outside the ground set");
}

std::string SetPartition::to_string() const {
  std::string out;
  const bool braced = n_ > 9;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out += '/';
    if (braced) out += '{';
    bool first = true;
    for (Mask m = blocks_[b]; m; m &= m - 1) {
      if (braced && !first) out += ',';
      out += std::to_string(lowest(m) + 1);
      first = false;
    }
    if (braced) out += '}';
  }
  return out;
}

std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  const std::size_t common = std::min(a.blocks_.size(), b.blocks_.size());
  for (std::size_t i = 0; i < common; ++i)
    if (auto c = compare_sets(a.blocks_[i], b.blocks_[i]); c != 0) return c;
  return a.blocks_.size() <=> b.blocks_.size();
}

std::vector<SetPartition> enumerate_partitions(int n) {
  if (n < 1 || n > 12) throw SizeLimitError("enumerate_partitions needs 1 <= n <= 12");
  return partitions_of(n);
}

std::vector<SetPartition> partitions_of(int n) {
  if (n < 0 || n > 12) throw SizeLimitError("partitions_of needs 0 <= n <= 12");
  std::vector<SetPartition> out;
  for (auto& blocks : partitions_of_set(full_mask(n))) out.push_back(SetPartition::from_masks(n, std::move(blocks)));
  std::sort(out.begin(), out.end());
  return out;
}

bool refines(const SetPartition& sigma, const SetPartition& pi) {
  require_same_size(sigma, pi);
  const auto labels = labels_of(pi);
  for (Mask b : sigma.blocks()) {
    const Mask container = pi.blocks()[static_cast<std::size_t>(labels[static_cast<std::size_t>(lowest(b))])];
    if ((b & container) != b) return false;
  }
  return true;
}

Integer mobius(const SetPartition& sigma, const SetPartition& pi) {
  if (!refines(sigma, pi))
    throw OrderViolationError("mobius(" + sigma.to_string() + ", " + pi.to_string() + "): not in order");
  Integer result = 1;
  for (Mask big : pi.blocks()) {
    int k = 0;
    for (Mask small : sigma.blocks())
      if (small & big) ++k;
    result *= factorial(k - 1);
    if ((k - 1) % 2) result = -result;
  }
  return result;
}

Integer mobius_from_bottom(const SetPartition& pi) {
  Integer result = 1;
  for (Mask b : pi.blocks()) {
    const int k = std::popcount(b);
    result *= factorial(k - 1);
    if ((k - 1) % 2) result = -result;
  }
  return result;
}

IntPartition lambda_of(const SetPartition& pi) {
  std::vector<int> sizes;
  for (Mask b : pi.blocks()) sizes.push_back(std::popcount(b));
  return IntPartition(std::move(sizes));
}

Integer multiplicity_weight(const SetPartition& pi) {
  std::map<int, int> multiplicity;
  for (Mask b : pi.blocks()) ++multiplicity[std::popcount(b)];
  Integer result = 1;
  for (const auto& [size, r] : multiplicity) result *= factorial(r);
  return result;
}

Integer factorial_weight(const SetPartition& pi) {
  Integer result = 1;
  for (Mask b : pi.blocks()) result *= factorial(std::popcount(b));
  return result;
}

SetPartition insert_last(const SetPartition& pi) {
  const int n = pi.size();
  if (n < 1) throw PreconditionError("insert_last needs a nonempty ground set");
  if (n + 1 > SetPartition::kMaxSize) throw SizeLimitError("insert_last would exceed the ground-set limit");
  std::vector<Mask> blocks(pi.blocks().begin(), pi.blocks().end());
  for (Mask& b : blocks)
    if (b & (Mask{1} << (n - 1))) b |= Mask{1} << n;
  return SetPartition::from_masks(n + 1, std::move(blocks));
}

SetPartition apply_perm(const Permutation& delta, const SetPartition& pi) {
  if (delta.size() != pi.size())
    throw DegreeMismatchError("permutation of degree " + std::to_string(delta.size()) +
                              " applied to a partition of " + std::to_string(pi.size()));
  std::vector<Mask> blocks;
  blocks.reserve(static_cast<std::size_t>(pi.block_count()));
  for (Mask b : pi.blocks()) {
    Mask image = 0;
    for (Mask m = b; m; m &= m - 1) image |= Mask{1} << delta(lowest(m));
    blocks.push_back(image);
  }
  return SetPartition::from_masks(pi.size(), std::move(blocks));
}

SetPartition cycle_type_partition(const Permutation& sigma) {
  return SetPartition::from_blocks(sigma.size(), sigma.cycles());
}

std::vector<SetPartition> coarsenings(const SetPartition& pi) {
  std::vector<SetPartition> out;
  const auto blocks = pi.blocks();
  for_each_rgs(pi.block_count(), [&](std::span<const int> labels) {
    std::vector<Mask> merged;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const auto b = static_cast<std::size_t>(labels[i]);
      if (b == merged.size()) merged.push_back(0);
      merged[b] |= blocks[i];
    }
    out.push_back(SetPartition::from_masks(pi.size(), std::move(merged)));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SetPartition> refinements(const SetPartition& pi) {
  std::vector<std::vector<Mask>> partial{{}};
  for (Mask b : pi.blocks()) {
    const auto pieces = partitions_of_set(b);
    std::vector<std::vector<Mask>> next;
    next.reserve(partial.size() * pieces.size());
    for (const auto& prefix : partial) {
      for (const auto& piece : pieces) {
        auto combined = prefix;
        combined.insert(combined.end(), piece.begin(), piece.end());
        next.push_back(std::move(combined));
      }
    }
    partial = std::move(next);
  }
  std::vector<SetPartition> out;
  out.reserve(partial.size());
  for (auto& blocks : partial) out.push_back(SetPartition::from_masks(pi.size(), std::move(blocks)));
  std::sort(out.begin(), out.end());
  return out;
}

SetPartition shift_union(const SetPartition& left, const SetPartition& right) {
  const int n = left.size() + right.size();
  if (n > SetPartition::kMaxSize) throw SizeLimitError("product degree exceeds the ground-set limit");
  std::vector<Mask> blocks(left.blocks().begin(), left.blocks().end());
  for (Mask b : right.blocks()) blocks.push_back(b << left.size());
  return SetPartition::from_masks(n, std::move(blocks));
}

}  // namespace rbnc

std::size_t std::hash<rbnc::SetPartition>::operator()(const rbnc::SetPartition& pi) const noexcept {
  std::size_t h = static_cast<std::size_t>(pi.size());
  for (auto b : pi.blocks()) h = h * 1000003u ^ b;
  return h;
}
