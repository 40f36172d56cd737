#pragma once

// The Redei-Berge function W_X of a labeled digraph in noncommuting
// variables, computed three independent ways, plus the commutative U_X
// computed from X-descent sets.

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "rbnc/digraph.hpp"
#include "rbnc/ncsym.hpp"
#include "rbnc/setpart.hpp"

namespace rbnc {

/// f : V -> positive integers, indexed by vertex.
class Coloring {
 public:
  /// Throws PreconditionError on a color below 1.
  explicit Coloring(std::vector<int> colors);

  int size() const noexcept { return static_cast<int>(colors_.size()); }
  int operator[](int v) const { return colors_[static_cast<std::size_t>(v)]; }
  std::span<const int> colors() const noexcept { return colors_; }

 private:
  std::vector<int> colors_;
};

/// Σ_{I ⊆ [n-1]} c_I F_I. Bit i-1 of a key marks position i.
struct QSymElement {
  int degree = 0;
  std::map<std::uint32_t, Integer> terms;
};

/// #Σ_V(f, X): listings weakly increasing in f and strictly increasing
/// across every consecutive pair that is an edge.
std::uint64_t count_friendly(const Digraph& x, const Coloring& f);

/// Monomial expansion straight from friendly listings. n <= 8.
/// Throws SymmetryViolation if some coefficient depends on block order.
NCSymElement w_by_definition(const Digraph& x);

/// Signed sum over permutations whose cycles are all cycles of X or of X̄.
/// Power-sum basis. n <= 8.
NCSymElement w_by_permutations(const Digraph& x);

/// δ with δ(e.from) = n-2, δ(e.to) = n-1, order-preserving elsewhere.
Permutation move_edge_to_end(int n, Edge e);

enum class EdgeRule { LexSmallest, LexLargest };

/// Deletion-contraction down to edgeless digraphs. Monomial basis. n <= 7.
NCSymElement w_by_deletion_contraction(const Digraph& x, EdgeRule rule = EdgeRule::LexSmallest);

/// 2^ψ-weighted sum over odd-cycle permutations; X must be a tournament.
NCSymElement w_tournament(const Digraph& x);

/// Σ over listings of F_{XDes(σ)}. n <= 8.
QSymElement descent_aggregate(const Digraph& x);

/// U_X in the commutative monomial basis, expanded from descent_aggregate.
/// Throws SymmetryViolation if the expansion is not symmetric.
CSymElement u_by_descents(const Digraph& x);

/// Calls visit(Type(σ), φ(σ)) for every σ in S_V(X, X̄). n <= 8.
void for_each_signed_permutation(const Digraph& x,
                                 const std::function<void(const SetPartition&, int)>& visit);

/// [m_π] W_X by the closed form over S_V(X, X̄).
Integer m_coefficient_formula(const Digraph& x, const SetPartition& pi);
/// [e_π] W_X by the closed form over S_V(X, X̄).
Rational e_coefficient_formula(const Digraph& x, const SetPartition& pi);

/// Σ_{π ∈ Π_n} π! m_π, the value for every digraph without non-loop edges.
NCSymElement discrete_expansion(int n);

}  // namespace rbnc
