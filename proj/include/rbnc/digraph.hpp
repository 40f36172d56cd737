#pragma once

// Labeled digraphs on vertices 0..n-1 (v_1..v_n in one-based text form).
// Loops are ordinary edges. Equality is exact: same n, same edge set.

#include <compare>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rbnc/permutation.hpp"

namespace rbnc {

struct Edge {
  int from = 0;
  int to = 0;

  bool is_loop() const noexcept { return from == to; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Digraph {
 public:
  using Mask = std::uint32_t;
  static constexpr int kMaxVertices = 32;

  Digraph() = default;
  explicit Digraph(int n);
  /// Throws PreconditionError on out-of-range endpoints or duplicate edges.
  Digraph(int n, std::span<const Edge> edges);
  Digraph(int n, std::initializer_list<Edge> edges) : Digraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept;
  bool has_edge(int u, int v) const;
  bool has_edge(Edge e) const { return has_edge(e.from, e.to); }
  Mask out_neighbors(int u) const { return out_[static_cast<std::size_t>(u)]; }
  /// Edges in lexicographic order.
  std::vector<Edge> edges() const;
  bool has_loops() const;

  void add_edge(Edge e);
  void remove_edge(Edge e);

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<Mask> out_;
};

/// (V×V) ∖ E, loops included.
Digraph complement(const Digraph& x);
Digraph opposite(const Digraph& x);
Digraph without_loops(const Digraph& x);
/// Throws MissingEdgeError when some edge of s is absent.
Digraph delete_edges(const Digraph& x, std::span<const Edge> s);
Digraph delete_edge(const Digraph& x, Edge e);

/// X/e for e = (v_{n-1}, v_n); the merged vertex takes label n-1.
/// Never produces a loop. Throws MissingEdgeError when e is absent.
Digraph contract_last_edge(const Digraph& x);

/// δ(X): edge (u, v) becomes (δ(u), δ(v)).
Digraph relabel(const Permutation& delta, const Digraph& x);

/// X·Y: Y shifted after X, plus every edge from X to Y.
Digraph product(const Digraph& x, const Digraph& y);

bool is_tournament(const Digraph& x);
/// Loopless, in/out-degree at most 1, no directed cycle.
bool is_disjoint_union_of_paths(const Digraph& x);

/// A directed cycle in traversal order. Loops only count when allow_loops.
std::optional<std::vector<Edge>> find_directed_cycle(const Digraph& x, bool allow_loops = false);

/// True when some simple directed cycle has even length (2 included).
bool has_even_directed_cycle(const Digraph& x);

/// Number of listings whose consecutive pairs are all edges. n <= 9.
std::uint64_t hamiltonian_path_count(const Digraph& x);

// Generators.
Digraph complete_digraph(int n);  // all n² pairs, loops included
Digraph discrete_digraph(int n);
Digraph path_digraph(int n);
Digraph cycle_digraph(int n);  // n >= 2
Digraph transitive_tournament(int n);
/// Every ordered pair, loops included, kept independently with probability p.
Digraph random_digraph(int n, double p, std::uint64_t seed);
Digraph random_tournament(int n, std::uint64_t seed);

/// Text format: "n <count>" then one "u v" per line, one-based; '#' comments.
Digraph parse_digraph(std::istream& in);
Digraph parse_digraph(std::string_view text);
Digraph read_digraph_file(const std::string& path);
std::string format_digraph(const Digraph& x);

/// "{(1,2),(2,3)}" on n vertices, one-based.
std::string describe(const Digraph& x);

}  // namespace rbnc
