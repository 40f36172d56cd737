#include "rbnc/redeiberge.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <optional>
#include <numeric>
#include <set>

#include "rbnc/errors.hpp"

namespace rbnc {

namespace {

using Mask = SetPartition::Mask;

Mask bit(int v) { return Mask{1} << v; }

void guard(const Digraph& x, int limit, const char* what) {
  if (x.vertex_count() > limit)
    throw SizeLimitError(std::string(what) + " supports at most " + std::to_string(limit) + " vertices");
}

// Listings are built in color order: the next vertex must carry the least
// color still unplaced, which is exactly what keeps the listing weakly
// increasing once every vertex has to appear.
void friendly_search(const Digraph& x, std::span<const int> colors, int last, Mask used, Mask all,
                     std::uint64_t& count) {
  if (used == all) {
    ++count;
    return;
  }
  int least = std::numeric_limits<int>::max();
  for (Mask m = all & ~used; m; m &= m - 1) least = std::min(least, colors[static_cast<std::size_t>(std::countr_zero(m))]);
  for (Mask m = all & ~used; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    if (colors[static_cast<std::size_t>(v)] != least) continue;
    if (last >= 0 && x.has_edge(last, v) && colors[static_cast<std::size_t>(last)] == least) continue;
    friendly_search(x, colors, v, used | bit(v), all, count);
  }
}

bool cycle_in(const Digraph& g, std::span<const int> cycle) {
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  return true;
}

// Builds σ ∈ S_V(X, X̄) one cycle at a time. Each cycle starts at the least
// unused vertex and grows along edges of X or along edges of X̄ only, so no
// permutation outside the set is ever materialised.
class SignedPermutationSearch {
 public:
  SignedPermutationSearch(const Digraph& x, const std::function<void(const SetPartition&, int)>& visit)
      : x_(x), xbar_(complement(x)), n_(x.vertex_count()), visit_(visit) {
    all_ = n_ == 32 ? ~Mask{0} : bit(n_) - 1;
  }

  void run() { next_cycle(0); }

 private:
  void next_cycle(Mask used) {
    if (used == all_) {
      visit_(SetPartition::from_masks(n_, blocks_), phi_);
      return;
    }
    const int start = std::countr_zero(~used & all_);
    const int fixed[] = {start};
    // A fixed point is a loop of exactly one of X, X̄ and never changes φ.
    classify(fixed);
    blocks_.push_back(bit(start));
    next_cycle(used | bit(start));
    blocks_.pop_back();

    for (const bool in_x : {true, false}) {
      const Digraph& g = in_x ? x_ : xbar_;
      path_ = {start};
      for (Mask m = g.out_neighbors(start) & ~used & ~bit(start); m; m &= m - 1) {
        const int t = std::countr_zero(m);
        path_.push_back(t);
        extend(g, in_x, used | bit(start) | bit(t));
        path_.pop_back();
      }
    }
  }

  void extend(const Digraph& g, bool in_x, Mask used) {
    const int start = path_.front();
    const int last = path_.back();
    if (g.has_edge(last, start)) {
      if (classify(path_) != in_x) throw InvariantViolation("cycle classified against its search mode");
      Mask block = 0;
      for (int v : path_) block |= bit(v);
      const int weight = in_x ? static_cast<int>(path_.size()) - 1 : 0;
      const std::vector<int> saved = path_;
      blocks_.push_back(block);
      phi_ += weight;
      next_cycle(used);
      phi_ -= weight;
      blocks_.pop_back();
      path_ = saved;
    }
    for (Mask m = g.out_neighbors(last) & ~used; m; m &= m - 1) {
      const int t = std::countr_zero(m);
      path_.push_back(t);
      extend(g, in_x, used | bit(t));
      path_.pop_back();
    }
  }

  // True for a cycle of X, false for a cycle of X̄. Anything else is a bug.
  bool classify(std::span<const int> cycle) const {
    const bool in_x = cycle_in(x_, cycle);
    const bool in_xbar = cycle_in(xbar_, cycle);
    if (in_x == in_xbar) throw InvariantViolation("cycle lies in both or neither of X and its complement");
    return in_x;
  }

  const Digraph& x_;
  Digraph xbar_;
  int n_;
  Mask all_ = 0;
  const std::function<void(const SetPartition&, int)>& visit_;
  std::vector<Mask> blocks_;
  std::vector<int> path_;
  int phi_ = 0;
};

// S_V(X) restricted to odd cycles; nontrivial cycles follow edges of X.
class OddCycleSearch {
 public:
  explicit OddCycleSearch(const Digraph& x) : x_(x), n_(x.vertex_count()), out_(n_, Basis::P) {
    all_ = n_ == 32 ? ~Mask{0} : bit(n_) - 1;
  }

  NCSymElement run() {
    next_cycle(0, 1);
    return out_;
  }

 private:
  void next_cycle(Mask used, const Integer& weight) {
    if (used == all_) {
      out_.add_term(SetPartition::from_masks(n_, blocks_), Rational(weight));
      return;
    }
    const int start = std::countr_zero(~used & all_);
    blocks_.push_back(bit(start));
    next_cycle(used | bit(start), weight);
    blocks_.pop_back();

    path_ = {start};
    extend(used | bit(start), weight);
  }

  void extend(Mask used, const Integer& weight) {
    const int start = path_.front();
    const int last = path_.back();
    if (path_.size() >= 3 && path_.size() % 2 == 1 && x_.has_edge(last, start)) {
      Mask block = 0;
      for (int v : path_) block |= bit(v);
      const std::vector<int> saved = path_;
      blocks_.push_back(block);
      next_cycle(used, weight * 2);
      blocks_.pop_back();
      path_ = saved;
    }
    for (Mask m = x_.out_neighbors(last) & ~used; m; m &= m - 1) {
      const int t = std::countr_zero(m);
      path_.push_back(t);
      extend(used | bit(t), weight);
      path_.pop_back();
    }
  }

  const Digraph& x_;
  int n_;
  Mask all_ = 0;
  NCSymElement out_;
  std::vector<Mask> blocks_;
  std::vector<int> path_;
};

NCSymElement deletion_contraction(const Digraph& x, EdgeRule rule) {
  const int n = x.vertex_count();
  std::vector<Edge> candidates;
  for (const Edge& e : x.edges())
    if (!e.is_loop()) candidates.push_back(e);
  if (candidates.empty()) return discrete_expansion(n);

  const Edge e = rule == EdgeRule::LexSmallest ? candidates.front() : candidates.back();
  const Permutation delta = move_edge_to_end(n, e);

  const Digraph y = relabel(delta, x);
  const NCSymElement deleted = deletion_contraction(delete_edge(y, {n - 2, n - 1}), rule);
  const NCSymElement contracted = induct(deletion_contraction(contract_last_edge(y), rule));
  return act(delta.inverse(), deleted - contracted);
}

}  // namespace

Permutation move_edge_to_end(int n, Edge e) {
  if (e.is_loop() || e.from < 0 || e.to < 0 || e.from >= n || e.to >= n)
    throw PreconditionError("move_edge_to_end needs a non-loop edge inside the vertex range");
  std::vector<int> images(static_cast<std::size_t>(n));
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (v != e.from && v != e.to) images[static_cast<std::size_t>(v)] = next++;
  images[static_cast<std::size_t>(e.from)] = n - 2;
  images[static_cast<std::size_t>(e.to)] = n - 1;
  return Permutation(std::move(images));
}

Coloring::Coloring(std::vector<int> colors) : colors_(std::move(colors)) {
  for (int c : colors_)
    if (c < 1) throw PreconditionError("colors must be positive integers");
}

std::uint64_t count_friendly(const Digraph& x, const Coloring& f) {
  if (f.size() != x.vertex_count())
    throw DegreeMismatchError("coloring of " + std::to_string(f.size()) + " vertices for a digraph on " +
                              std::to_string(x.vertex_count()));
  const int n = x.vertex_count();
  const Mask all = n == 32 ? ~Mask{0} : bit(n) - 1;
  std::uint64_t count = 0;
  friendly_search(x, f.colors(), -1, 0, all, count);
  return count;
}

NCSymElement w_by_definition(const Digraph& x) {
  guard(x, 8, "w_by_definition");
  const int n = x.vertex_count();
  if (n == 0) return NCSymElement::one(Basis::M);
  NCSymElement out(n, Basis::M);
  std::vector<int> colors(static_cast<std::size_t>(n));
  for (const SetPartition& pi : enumerate_partitions(n)) {
    const int k = pi.block_count();
    std::vector<int> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), 0);
    std::optional<std::uint64_t> common;
    do {
      for (int j = 0; j < k; ++j)
        for (Mask m = pi.blocks()[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])]; m; m &= m - 1)
          colors[static_cast<std::size_t>(std::countr_zero(m))] = j + 1;
      const std::uint64_t count = count_friendly(x, Coloring(colors));
      if (common && *common != count)
        throw SymmetryViolation("coefficient of m[" + pi.to_string() + "] depends on the order of block colors for " +
                                describe(x));
      common = count;
    } while (std::next_permutation(order.begin(), order.end()));
    out.add_term(pi, Rational(*common));
  }
  return out;
}

void for_each_signed_permutation(const Digraph& x, const std::function<void(const SetPartition&, int)>& visit) {
  guard(x, 8, "the permutation expansion");
  SignedPermutationSearch(x, visit).run();
}

NCSymElement w_by_permutations(const Digraph& x) {
  guard(x, 8, "w_by_permutations");
  std::map<SetPartition, long long> sums;
  for_each_signed_permutation(x, [&](const SetPartition& type, int phi) { sums[type] += phi % 2 ? -1 : 1; });
  NCSymElement out(x.vertex_count(), Basis::P);
  for (const auto& [type, c] : sums) out.add_term(type, Rational(c));
  return out;
}

NCSymElement w_by_deletion_contraction(const Digraph& x, EdgeRule rule) {
  guard(x, 7, "w_by_deletion_contraction");
  return deletion_contraction(x, rule);
}

NCSymElement w_tournament(const Digraph& x) {
  if (!is_tournament(x)) throw PreconditionError("w_tournament needs a tournament");
  guard(x, 8, "w_tournament");
  return OddCycleSearch(x).run();
}

NCSymElement discrete_expansion(int n) {
  NCSymElement out(n, Basis::M);
  for (const SetPartition& pi : partitions_of(n)) out.add_term(pi, Rational(factorial_weight(pi)));
  return out;
}

Integer m_coefficient_formula(const Digraph& x, const SetPartition& pi) {
  if (pi.size() != x.vertex_count()) throw DegreeMismatchError("partition and digraph sizes differ");
  Integer total = 0;
  for_each_signed_permutation(x, [&](const SetPartition& type, int phi) {
    if (refines(type, pi)) total += phi % 2 ? -1 : 1;
  });
  return total;
}

Rational e_coefficient_formula(const Digraph& x, const SetPartition& pi) {
  if (pi.size() != x.vertex_count()) throw DegreeMismatchError("partition and digraph sizes differ");
  Rational total = 0;
  for_each_signed_permutation(x, [&](const SetPartition& type, int phi) {
    if (!refines(pi, type)) return;
    const Rational term = Rational(mobius(pi, type)) / Rational(mobius_from_bottom(type));
    total += phi % 2 ? -term : term;
  });
  return total;
}

QSymElement descent_aggregate(const Digraph& x) {
  guard(x, 8, "descent_aggregate");
  const int n = x.vertex_count();
  QSymElement out;
  out.degree = n;
  std::vector<int> listing(static_cast<std::size_t>(n));
  std::iota(listing.begin(), listing.end(), 0);
  do {
    std::uint32_t descents = 0;
    for (int i = 0; i + 1 < n; ++i)
      if (x.has_edge(listing[static_cast<std::size_t>(i)], listing[static_cast<std::size_t>(i + 1)]))
        descents |= std::uint32_t{1} << i;
    out.terms[descents] += 1;
  } while (std::next_permutation(listing.begin(), listing.end()));
  return out;
}

namespace {

// Monomials of F_I in n variables: words 1 <= i_1 <= ... <= i_n <= n with a
// strict ascent after every position in I. Keyed by exponent vector.
void expand_fundamental(int n, std::uint32_t descents, const Integer& coeff, int position, int previous,
                        std::vector<int>& exponents, std::map<std::vector<int>, Integer>& out) {
  if (position == n) {
    out[exponents] += coeff;
    return;
  }
  int lowest_letter = 1;
  if (position > 0) {
    const bool strict = (descents >> (position - 1)) & 1U;
    lowest_letter = previous + (strict ? 1 : 0);
  }
  for (int letter = lowest_letter; letter <= n; ++letter) {
    ++exponents[static_cast<std::size_t>(letter - 1)];
    expand_fundamental(n, descents, coeff, position + 1, letter, exponents, out);
    --exponents[static_cast<std::size_t>(letter - 1)];
  }
}

}  // namespace

CSymElement u_by_descents(const Digraph& x) {
  const QSymElement aggregate = descent_aggregate(x);
  const int n = aggregate.degree;
  CSymElement out(n, Basis::M);
  if (n == 0) {
    out.add_term(IntPartition(), 1);
    return out;
  }

  std::map<std::vector<int>, Integer> monomials;
  std::vector<int> exponents(static_cast<std::size_t>(n), 0);
  for (const auto& [descents, coeff] : aggregate.terms)
    expand_fundamental(n, descents, coeff, 0, 0, exponents, monomials);

  auto lookup = [&](const std::vector<int>& key) {
    auto it = monomials.find(key);
    return it == monomials.end() ? Integer(0) : it->second;
  };

  std::set<std::vector<int>> shapes;
  for (const auto& [key, coeff] : monomials) {
    if (coeff == 0) continue;
    auto shape = key;
    std::sort(shape.begin(), shape.end(), std::greater<>());
    shapes.insert(shape);
  }
  for (const auto& shape : shapes) {
    const Integer reference = lookup(shape);
    auto arrangement = shape;
    std::sort(arrangement.begin(), arrangement.end());
    do {
      if (lookup(arrangement) != reference)
        throw SymmetryViolation("descent expansion of " + describe(x) + " is not symmetric");
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));

    std::vector<int> parts;
    for (int a : shape)
      if (a > 0) parts.push_back(a);
    out.add_term(IntPartition(std::move(parts)), Rational(reference));
  }
  return out;
}

}  // namespace rbnc
