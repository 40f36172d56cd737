#include "rbnc/digraph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <random>
#include <sstream>

#include "rbnc/errors.hpp"

namespace rbnc {

namespace {

using Mask = Digraph::Mask;

Mask bit(int v) { return Mask{1} << v; }

// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void count_paths(const Digraph& x, int last, Mask used, Mask all, std::uint64_t& count) {
  if (used == all) {
    ++count;
    return;
  }
  for (Mask next = x.out_neighbors(last) & ~used; next; next &= next - 1) {
    const int v = std::countr_zero(next);
    count_paths(x, v, used | bit(v), all, count);
  }
}

bool even_cycle_from(const Digraph& x, int start, int last, Mask used, int length) {
  const Mask out = x.out_neighbors(last);
  if (length >= 2 && (out & bit(start)) && length % 2 == 0) return true;
  // Only vertices above start, so each cycle is explored from its minimum.
  const Mask allowed = start + 1 >= 32 ? 0 : ~used & ~(bit(start + 1) - 1);
  for (Mask next = out & allowed; next; next &= next - 1) {
    const int v = std::countr_zero(next);
    if (even_cycle_from(x, start, v, used | bit(v), length + 1)) return true;
  }
  return false;
}

}  // namespace

Digraph::Digraph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw SizeLimitError("digraphs support 0.." + std::to_string(kMaxVertices) + " vertices");
  out_.assign(static_cast<std::size_t>(n), 0);
}

Digraph::Digraph(int n, std::span<const Edge> edges) : Digraph(n) {
  for (const Edge& e : edges) {
    check_vertex(e.from);
    check_vertex(e.to);
    if (has_edge(e)) throw PreconditionError("duplicate edge");
    add_edge(e);
  }
}

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
}

std::size_t Digraph::edge_count() const noexcept {
  std::size_t total = 0;
  for (Mask m : out_) total += static_cast<std::size_t>(std::popcount(m));
  return total;
}

bool Digraph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (out_[static_cast<std::size_t>(u)] & bit(v)) != 0;
}

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (Mask m = out_[static_cast<std::size_t>(u)]; m; m &= m - 1) out.push_back({u, std::countr_zero(m)});
  return out;
}

bool Digraph::has_loops() const {
  for (int u = 0; u < n_; ++u)
    if (out_[static_cast<std::size_t>(u)] & bit(u)) return true;
  return false;
}

void Digraph::add_edge(Edge e) {
  check_vertex(e.from);
  check_vertex(e.to);
  out_[static_cast<std::size_t>(e.from)] |= bit(e.to);
}

void Digraph::remove_edge(Edge e) {
  check_vertex(e.from);
  check_vertex(e.to);
  out_[static_cast<std::size_t>(e.from)] &= ~bit(e.to);
}

Digraph complement(const Digraph& x) {
  const int n = x.vertex_count();
  Digraph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (!x.has_edge(u, v)) out.add_edge({u, v});
  return out;
}

Digraph opposite(const Digraph& x) {
  Digraph out(x.vertex_count());
  for (const Edge& e : x.edges()) out.add_edge({e.to, e.from});
  return out;
}

Digraph without_loops(const Digraph& x) {
  Digraph out = x;
  for (int v = 0; v < x.vertex_count(); ++v) out.remove_edge({v, v});
  return out;
}

Digraph delete_edges(const Digraph& x, std::span<const Edge> s) {
  Digraph out = x;
  for (const Edge& e : s) {
    if (e.from < 0 || e.to < 0 || e.from >= x.vertex_count() || e.to >= x.vertex_count() || !x.has_edge(e))
      throw MissingEdgeError("edge (" + std::to_string(e.from + 1) + "," + std::to_string(e.to + 1) +
                             ") is not in the digraph");
    out.remove_edge(e);
  }
  return out;
}

Digraph delete_edge(const Digraph& x, Edge e) { return delete_edges(x, std::span<const Edge>(&e, 1)); }

Digraph contract_last_edge(const Digraph& x) {
  const int n = x.vertex_count();
  if (n < 2 || !x.has_edge(n - 2, n - 1))
    throw MissingEdgeError("contraction needs the edge (v_{n-1}, v_n)");
  const int u = n - 2;
  const int v = n - 1;
  Digraph out(n - 1);
  for (int a = 0; a < u; ++a) {
    for (int b = 0; b < u; ++b)
      if (x.has_edge(a, b)) out.add_edge({a, b});
    if (x.has_edge(a, u)) out.add_edge({a, u});
    if (x.has_edge(v, a)) out.add_edge({u, a});
  }
  return out;
}

Digraph relabel(const Permutation& delta, const Digraph& x) {
  if (delta.size() != x.vertex_count())
    throw DegreeMismatchError("relabeling " + std::to_string(x.vertex_count()) +
                              " vertices with a permutation of degree " + std::to_string(delta.size()));
  Digraph out(x.vertex_count());
  for (const Edge& e : x.edges()) out.add_edge({delta(e.from), delta(e.to)});
  return out;
}

Digraph product(const Digraph& x, const Digraph& y) {
  const int nx = x.vertex_count();
  Digraph out(nx + y.vertex_count());
  for (const Edge& e : x.edges()) out.add_edge(e);
  for (const Edge& e : y.edges()) out.add_edge({e.from + nx, e.to + nx});
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < y.vertex_count(); ++b) out.add_edge({a, nx + b});
  return out;
}

bool is_tournament(const Digraph& x) {
  const int n = x.vertex_count();
  for (int u = 0; u < n; ++u) {
    if (x.has_edge(u, u)) return false;
    for (int v = u + 1; v < n; ++v)
      if (x.has_edge(u, v) == x.has_edge(v, u)) return false;
  }
  return true;
}

bool is_disjoint_union_of_paths(const Digraph& x) {
  const int n = x.vertex_count();
  std::vector<int> in_degree(static_cast<std::size_t>(n), 0);
  for (const Edge& e : x.edges()) {
    if (e.is_loop()) return false;
    ++in_degree[static_cast<std::size_t>(e.to)];
  }
  for (int v = 0; v < n; ++v) {
    if (std::popcount(x.out_neighbors(v)) > 1 || in_degree[static_cast<std::size_t>(v)] > 1) return false;
  }
  return !find_directed_cycle(x).has_value();
}

std::optional<std::vector<Edge>> find_directed_cycle(const Digraph& x, bool allow_loops) {
  const int n = x.vertex_count();
  enum class Mark { Unseen, Active, Done };
  std::vector<Mark> mark(static_cast<std::size_t>(n), Mark::Unseen);
  std::vector<int> stack;

  // Iterative DFS; the stack holds the current path. Each frame remembers
  // which out-neighbours it has not yet tried.
  std::vector<Mask> pending(static_cast<std::size_t>(n), 0);
  for (int root = 0; root < n; ++root) {
    if (mark[static_cast<std::size_t>(root)] != Mark::Unseen) continue;
    stack.push_back(root);
    mark[static_cast<std::size_t>(root)] = Mark::Active;
    pending[static_cast<std::size_t>(root)] = x.out_neighbors(root) & ~bit(root);
    while (!stack.empty()) {
      const int u = stack.back();
      Mask& todo = pending[static_cast<std::size_t>(u)];
      if (todo == 0) {
        mark[static_cast<std::size_t>(u)] = Mark::Done;
        stack.pop_back();
        continue;
      }
      const int v = std::countr_zero(todo);
      todo &= todo - 1;
      if (mark[static_cast<std::size_t>(v)] == Mark::Active) {
        std::vector<Edge> cycle;
        auto it = std::find(stack.begin(), stack.end(), v);
        for (; it + 1 != stack.end(); ++it) cycle.push_back({*it, *(it + 1)});
        cycle.push_back({u, v});
        return cycle;
      }
      if (mark[static_cast<std::size_t>(v)] == Mark::Unseen) {
        mark[static_cast<std::size_t>(v)] = Mark::Active;
        pending[static_cast<std::size_t>(v)] = x.out_neighbors(v) & ~bit(v);
        stack.push_back(v);
      }
    }
  }
  if (allow_loops) {
    for (int v = 0; v < n; ++v)
      if (x.has_edge(v, v)) return std::vector<Edge>{{v, v}};
  }
  return std::nullopt;
}

bool has_even_directed_cycle(const Digraph& x) {
  for (int s = 0; s < x.vertex_count(); ++s)
    if (even_cycle_from(x, s, s, bit(s), 1)) return true;
  return false;
}

std::uint64_t hamiltonian_path_count(const Digraph& x) {
  const int n = x.vertex_count();
  if (n > 9) throw SizeLimitError("hamiltonian_path_count supports n <= 9");
  if (n == 0) return 1;
  const Mask all = bit(n) - 1;
  std::uint64_t count = 0;
  for (int start = 0; start < n; ++start) count_paths(x, start, bit(start), all, count);
  return count;
}

Digraph complete_digraph(int n) {
  Digraph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) out.add_edge({u, v});
  return out;
}

Digraph discrete_digraph(int n) { return Digraph(n); }

Digraph path_digraph(int n) {
  Digraph out(n);
  for (int v = 0; v + 1 < n; ++v) out.add_edge({v, v + 1});
  return out;
}

Digraph cycle_digraph(int n) {
  if (n < 2) throw PreconditionError("a directed cycle needs at least 2 vertices");
  Digraph out = path_digraph(n);
  out.add_edge({n - 1, 0});
  return out;
}

Digraph transitive_tournament(int n) {
  Digraph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) out.add_edge({u, v});
  return out;
}

Digraph random_digraph(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  Digraph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (unit_uniform(rng) < p) out.add_edge({u, v});
  return out;
}

Digraph random_tournament(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Digraph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (rng() >> 63)
        out.add_edge({u, v});
      else
        out.add_edge({v, u});
    }
  return out;
}

Digraph parse_digraph(std::istream& in) {
  std::string raw;
  int line_no = 0;
  std::optional<Digraph> graph;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::string first;
    if (!(line >> first)) continue;

    if (!graph) {
      long long count = 0;
      std::string extra;
      if (first != "n" || !(line >> count) || (line >> extra))
        throw ParseError("expected header 'n <count>'", line_no);
      if (count < 0 || count > Digraph::kMaxVertices)
        throw ParseError("vertex count must lie in 0.." + std::to_string(Digraph::kMaxVertices), line_no);
      graph.emplace(static_cast<int>(count));
      continue;
    }

    long long u = 0;
    long long v = 0;
    std::string extra;
    std::istringstream edge_line(raw);
    if (!(edge_line >> u >> v) || (edge_line >> extra)) throw ParseError("expected an edge 'u v'", line_no);
    const int n = graph->vertex_count();
    if (u < 1 || v < 1 || u > n || v > n)
      throw ParseError("edge endpoint out of range 1.." + std::to_string(n), line_no);
    const Edge e{static_cast<int>(u - 1), static_cast<int>(v - 1)};
    if (graph->has_edge(e)) throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v), line_no);
    graph->add_edge(e);
  }
  if (!graph) throw ParseError("missing header 'n <count>'", line_no > 0 ? line_no : 1);
  return *graph;
}

Digraph parse_digraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_digraph(in);
}

Digraph read_digraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open digraph file '" + path + "'");
  return parse_digraph(in);
}

std::string format_digraph(const Digraph& x) {
  std::string out = "n " + std::to_string(x.vertex_count()) + "\n";
  for (const Edge& e : x.edges()) out += std::to_string(e.from + 1) + " " + std::to_string(e.to + 1) + "\n";
  return out;
}

std::string describe(const Digraph& x) {
  std::string out = "n=" + std::to_string(x.vertex_count()) + " E={";
  bool first = true;
  for (const Edge& e : x.edges()) {
    if (!first) out += ",";
    out += "(" + std::to_string(e.from + 1) + "," + std::to_string(e.to + 1) + ")";
    first = false;
  }
  return out + "}";
}

}  // namespace rbnc
