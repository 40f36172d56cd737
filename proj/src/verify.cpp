#include "rbnc/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

#include "rbnc/errors.hpp"
#include "rbnc/redeiberge.hpp"

namespace rbnc {

namespace {

constexpr int kExpansionLimit = 8;

struct Context {
  const Digraph& x;
  const VerifyOptions& options;
  std::string instance;
};

VerificationReport pass(const std::string& check, const std::string& instance) {
  return {check, instance, CheckStatus::Pass, {}};
}

VerificationReport fail(const std::string& check, const std::string& instance, std::string witness) {
  if (witness.empty()) witness = "check failed without further detail";
  return {check, instance, CheckStatus::Fail, std::move(witness)};
}

VerificationReport skip(const std::string& check, const std::string& instance, std::string reason) {
  return {check, instance, CheckStatus::Skipped, std::move(reason)};
}

NCSymElement w(const Digraph& x) { return w_by_permutations(x); }

// Compares in the power-sum basis.
VerificationReport compare(const std::string& check, const std::string& instance, const NCSymElement& lhs,
                           const NCSymElement& rhs, const std::string& lhs_name, const std::string& rhs_name) {
  const NCSymElement a = to_basis(lhs, Basis::P);
  const NCSymElement b = to_basis(rhs, Basis::P);
  if (a == b) return pass(check, instance);
  return fail(check, instance, lhs_name + " = " + a.to_string() + " but " + rhs_name + " = " + b.to_string());
}

std::string edge_name(Edge e) { return "(" + std::to_string(e.from + 1) + "," + std::to_string(e.to + 1) + ")"; }

// Σ_{S ⊆ edges, S ≠ ∅} (−1)^{|S|−1} W_{X∖S}
NCSymElement alternating_deletion_sum(const Digraph& x, const std::vector<Edge>& edges) {
  NCSymElement total(x.vertex_count(), Basis::P);
  const std::uint32_t subsets = std::uint32_t{1} << edges.size();
  for (std::uint32_t s = 1; s < subsets; ++s) {
    std::vector<Edge> removed;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (s & (std::uint32_t{1} << i)) removed.push_back(edges[i]);
    const NCSymElement term = w(delete_edges(x, removed));
    total = std::popcount(s) % 2 ? total + term : total - term;
  }
  return total;
}

std::optional<std::vector<Edge>> find_triangle(const Digraph& x) {
  const int n = x.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (a == b || b == c || a == c) continue;
        if (x.has_edge(a, b) && x.has_edge(b, c) && x.has_edge(c, a)) return std::vector<Edge>{{a, b}, {b, c}, {c, a}};
      }
  return std::nullopt;
}

VerificationReport run_cross_algorithm(const Context& ctx, const std::string& name) {
  const NCSymElement by_permutations = to_basis(w(ctx.x), Basis::M);
  const int n = ctx.x.vertex_count();
  if (n <= 6) {
    const NCSymElement by_definition = w_by_definition(ctx.x);
    if (by_definition != by_permutations)
      return fail(name, ctx.instance,
                  "definition gives " + by_definition.to_string() + ", permutations give " + by_permutations.to_string());
  }
  if (n <= 7) {
    const NCSymElement by_recursion = w_by_deletion_contraction(ctx.x);
    if (by_recursion != by_permutations)
      return fail(name, ctx.instance,
                  "deletion-contraction gives " + by_recursion.to_string() + ", permutations give " +
                      by_permutations.to_string());
  }
  return pass(name, ctx.instance);
}

VerificationReport run_closed_form(const Context& ctx, const std::string& name) {
  const int n = ctx.x.vertex_count();
  if (n >= 1 && ctx.x == complete_digraph(n)) {
    return compare(name, ctx.instance, w(ctx.x), NCSymElement::basis_element(Basis::E, SetPartition::single_block(n)),
                   "W_X", "e[" + SetPartition::single_block(n).to_string() + "]");
  }
  if (ctx.x.edge_count() == 0 || without_loops(ctx.x).edge_count() == 0)
    return compare(name, ctx.instance, w(ctx.x), discrete_expansion(n), "W_X", "sum of pi! m[pi]");
  return skip(name, ctx.instance, "hypothesis unmet: neither complete nor free of non-loop edges");
}

VerificationReport run_opposite(const Context& ctx, const std::string& name) {
  return compare(name, ctx.instance, w(ctx.x), w(opposite(ctx.x)), "W_X", "W_{X^op}");
}

VerificationReport run_tournament_complement(const Context& ctx, const std::string& name) {
  if (!is_tournament(ctx.x)) return skip(name, ctx.instance, "hypothesis unmet: not a tournament");
  return compare(name, ctx.instance, w(ctx.x), w(complement(ctx.x)), "W_X", "W_{complement X}");
}

VerificationReport run_tournament_formula(const Context& ctx, const std::string& name) {
  if (!is_tournament(ctx.x)) return skip(name, ctx.instance, "hypothesis unmet: not a tournament");
  const NCSymElement formula = w_tournament(ctx.x);
  for (const auto& [pi, c] : formula.terms())
    if (c < 0 || !is_integer(c))
      return fail(name, ctx.instance, "coefficient of p[" + pi.to_string() + "] is " + to_string(c));
  return compare(name, ctx.instance, formula, w(ctx.x), "tournament formula", "W_X");
}

VerificationReport run_relabeling(const Context& ctx, const std::string& name) {
  const int n = ctx.x.vertex_count();
  if (n < 2) return skip(name, ctx.instance, "hypothesis unmet: fewer than 2 vertices");
  std::vector<int> shift(static_cast<std::size_t>(n));
  std::vector<int> reversal(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    shift[static_cast<std::size_t>(i)] = (i + 1) % n;
    reversal[static_cast<std::size_t>(i)] = n - 1 - i;
  }
  const NCSymElement base = w(ctx.x);
  for (const Permutation& delta : {Permutation(shift), Permutation(reversal)}) {
    auto report = compare(name, ctx.instance, act(delta, base), w(relabel(delta, ctx.x)), "delta o W_X", "W_{delta(X)}");
    if (report.failed()) return report;
  }
  return pass(name, ctx.instance);
}

VerificationReport run_product(const Context& ctx, const std::string& name) {
  std::vector<Digraph> partners = ctx.options.product_partners;
  if (partners.empty()) partners = {discrete_digraph(1), path_digraph(2), cycle_digraph(3)};
  int checked = 0;
  for (const Digraph& y : partners) {
    if (ctx.x.vertex_count() + y.vertex_count() > kExpansionLimit) continue;
    for (auto report : {check_product(ctx.x, y, ctx.instance), check_product(y, ctx.x, ctx.instance)}) {
      report.check = name;
      if (report.failed()) return report;
    }
    ++checked;
  }
  if (checked == 0) return skip(name, ctx.instance, "every product would exceed " + std::to_string(kExpansionLimit) + " vertices");
  return pass(name, ctx.instance);
}

VerificationReport run_deletion_contraction(const Context& ctx, const std::string& name) {
  int checked = 0;
  for (const Edge& e : ctx.x.edges()) {
    if (e.is_loop()) continue;
    auto report = check_deletion_contraction_at(ctx.x, e, ctx.instance);
    report.check = name;
    if (report.failed()) return report;
    ++checked;
  }
  if (checked == 0) return skip(name, ctx.instance, "hypothesis unmet: no non-loop edge");
  return pass(name, ctx.instance);
}

VerificationReport run_subset_decomposition(const Context& ctx, const std::string& name) {
  if (is_disjoint_union_of_paths(ctx.x)) return skip(name, ctx.instance, "hypothesis unmet: disjoint union of paths");
  const auto edges = ctx.x.edges();
  if (static_cast<int>(edges.size()) > ctx.options.max_subset_edges)
    return skip(name, ctx.instance, "limit: more than " + std::to_string(ctx.options.max_subset_edges) + " edges");
  return compare(name, ctx.instance, w(ctx.x), alternating_deletion_sum(ctx.x, edges), "W_X",
                 "alternating sum over edge subsets");
}

VerificationReport run_cycle_decomposition(const Context& ctx, const std::string& name) {
  const auto cycle = find_directed_cycle(ctx.x);
  if (!cycle) return skip(name, ctx.instance, "hypothesis unmet: no directed cycle");
  std::string label = "alternating sum over subsets of the cycle";
  for (const Edge& e : *cycle) label += " " + edge_name(e);
  return compare(name, ctx.instance, w(ctx.x), alternating_deletion_sum(ctx.x, *cycle), "W_X", label);
}

VerificationReport run_triangle(const Context& ctx, const std::string& name) {
  const auto triangle = find_triangle(ctx.x);
  if (!triangle) return skip(name, ctx.instance, "hypothesis unmet: no directed triangle");
  const Edge e1 = (*triangle)[0];
  const Edge e2 = (*triangle)[1];
  const Edge e3 = (*triangle)[2];
  auto without = [&](std::initializer_list<Edge> s) {
    return w(delete_edges(ctx.x, std::span<const Edge>(s.begin(), s.size())));
  };
  const NCSymElement rhs = without({e1}) + without({e2}) + without({e3}) - without({e1, e2}) - without({e2, e3}) -
                           without({e3, e1}) + without({e1, e2, e3});
  return compare(name, ctx.instance, w(ctx.x), rhs, "W_X",
                 "seven-term expansion over " + edge_name(e1) + edge_name(e2) + edge_name(e3));
}

VerificationReport run_counting_lemma(const Context& ctx, const std::string& name) {
  const Digraph& x = ctx.x;
  const int n = x.vertex_count();
  if (is_disjoint_union_of_paths(x)) return skip(name, ctx.instance, "hypothesis unmet: disjoint union of paths");
  const auto edges = x.edges();
  const int m = static_cast<int>(edges.size());
  if (m > ctx.options.max_lemma_edges || n > ctx.options.max_lemma_vertices)
    return skip(name, ctx.instance, "limit: counting lemma capped at n <= " + std::to_string(ctx.options.max_lemma_vertices) +
                                        " and |E| <= " + std::to_string(ctx.options.max_lemma_edges));

  const std::uint32_t subsets = std::uint32_t{1} << m;
  auto subgraph_without = [&](std::uint32_t s) {
    std::vector<Edge> removed;
    for (int i = 0; i < m; ++i)
      if (s & (std::uint32_t{1} << i)) removed.push_back(edges[static_cast<std::size_t>(i)]);
    return delete_edges(x, removed);
  };
  std::vector<Digraph> reduced;
  std::vector<bool> qualifying(subsets);
  reduced.reserve(subsets);
  for (std::uint32_t s = 0; s < subsets; ++s) {
    reduced.push_back(subgraph_without(s));
    // (V, F) with F = edges in s
    Digraph f_graph(n);
    for (int i = 0; i < m; ++i)
      if (s & (std::uint32_t{1} << i)) f_graph.add_edge(edges[static_cast<std::size_t>(i)]);
    qualifying[s] = !is_disjoint_union_of_paths(f_graph);
  }

  std::vector<int> colors(static_cast<std::size_t>(n), 1);
  std::vector<long long> counts(subsets);
  while (true) {
    const Coloring f(colors);
    for (std::uint32_t s = 0; s < subsets; ++s) counts[s] = static_cast<long long>(count_friendly(reduced[s], f));
    for (std::uint32_t big = 1; big < subsets; ++big) {
      if (!qualifying[big]) continue;
      long long rhs = 0;
      for (std::uint32_t s = big; s; s = (s - 1) & big) rhs += std::popcount(s) % 2 ? counts[s] : -counts[s];
      if (rhs != counts[0]) {
        std::string coloring;
        for (int c : colors) coloring += std::to_string(c);
        return fail(name, ctx.instance,
                    "coloring " + coloring + ", F mask " + std::to_string(big) + ": #friendly = " +
                        std::to_string(counts[0]) + " but alternating sum = " + std::to_string(rhs));
      }
    }
    int i = n - 1;
    while (i >= 0 && colors[static_cast<std::size_t>(i)] == n) colors[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) break;
    ++colors[static_cast<std::size_t>(i)];
  }
  return pass(name, ctx.instance);
}

VerificationReport run_commutative(const Context& ctx, const std::string& name) {
  const CSymElement image = commutative_image(to_basis(w(ctx.x), Basis::M));
  const CSymElement descents = u_by_descents(ctx.x);
  if (image == descents) return pass(name, ctx.instance);
  return fail(name, ctx.instance, "commutative image " + image.to_string() + " but U_X = " + descents.to_string());
}

VerificationReport run_integrality(const Context& ctx, const std::string& name) {
  const NCSymElement p = w(ctx.x);
  const NCSymElement m = to_basis(p, Basis::M);
  if (!p.has_integer_coefficients()) return fail(name, ctx.instance, "non-integer p-expansion " + p.to_string());
  if (!m.has_integer_coefficients()) return fail(name, ctx.instance, "non-integer m-expansion " + m.to_string());
  return pass(name, ctx.instance);
}

VerificationReport run_p_nonnegativity(const Context& ctx, const std::string& name) {
  if (has_even_directed_cycle(ctx.x)) return skip(name, ctx.instance, "hypothesis unmet: has an even directed cycle");
  const NCSymElement p = w(ctx.x);
  for (const auto& [pi, c] : p.terms())
    if (c < 0) return fail(name, ctx.instance, "p[" + pi.to_string() + "] has coefficient " + to_string(c));
  const SetPartition bottom = SetPartition::singletons(ctx.x.vertex_count());
  if (p.coefficient(bottom) < 1)
    return fail(name, ctx.instance, "p[" + bottom.to_string() + "] has coefficient " + to_string(p.coefficient(bottom)));
  return pass(name, ctx.instance);
}

VerificationReport run_coefficient_formulas(const Context& ctx, const std::string& name) {
  const int n = ctx.x.vertex_count();
  if (n < 1 || n > 6) return skip(name, ctx.instance, "limit: closed-form coefficients checked for 1 <= n <= 6");
  const NCSymElement p = w(ctx.x);
  const NCSymElement m = to_basis(p, Basis::M);
  const NCSymElement e = to_basis(p, Basis::E);
  for (const SetPartition& pi : enumerate_partitions(n)) {
    const Rational m_formula(m_coefficient_formula(ctx.x, pi));
    if (m_formula != m.coefficient(pi))
      return fail(name, ctx.instance, "[m_" + pi.to_string() + "]: formula " + to_string(m_formula) + ", expansion " +
                                          to_string(m.coefficient(pi)));
    const Rational e_formula = e_coefficient_formula(ctx.x, pi);
    if (e_formula != e.coefficient(pi))
      return fail(name, ctx.instance, "[e_" + pi.to_string() + "]: formula " + to_string(e_formula) + ", expansion " +
                                          to_string(e.coefficient(pi)));
  }
  return pass(name, ctx.instance);
}

VerificationReport run_berge_parity(const Context& ctx, const std::string& name) {
  if (ctx.x.vertex_count() > 9) return skip(name, ctx.instance, "limit: n <= 9");
  const Digraph simple = without_loops(ctx.x);
  const auto a = hamiltonian_path_count(simple);
  const auto b = hamiltonian_path_count(without_loops(complement(ctx.x)));
  if (a % 2 == b % 2) return pass(name, ctx.instance);
  return fail(name, ctx.instance, "ham(X) = " + std::to_string(a) + ", ham(complement) = " + std::to_string(b));
}

VerificationReport run_redei_parity(const Context& ctx, const std::string& name) {
  if (!is_tournament(ctx.x)) return skip(name, ctx.instance, "hypothesis unmet: not a tournament");
  if (ctx.x.vertex_count() > 9) return skip(name, ctx.instance, "limit: n <= 9");
  const auto count = hamiltonian_path_count(ctx.x);
  if (count % 2 == 1) return pass(name, ctx.instance);
  return fail(name, ctx.instance, "tournament has " + std::to_string(count) + " Hamiltonian paths");
}

using Runner = VerificationReport (*)(const Context&, const std::string&);

struct CheckEntry {
  std::string name;
  Runner run;
  bool needs_expansion;
};

const std::vector<CheckEntry>& registry() {
  static const std::vector<CheckEntry> entries = {
      {"cross-algorithm", run_cross_algorithm, true},
      {"closed-form", run_closed_form, true},
      {"opposite", run_opposite, true},
      {"tournament-complement", run_tournament_complement, true},
      {"tournament-formula", run_tournament_formula, true},
      {"relabeling", run_relabeling, true},
      {"product", run_product, true},
      {"deletion-contraction", run_deletion_contraction, true},
      {"subset-decomposition", run_subset_decomposition, true},
      {"cycle-decomposition", run_cycle_decomposition, true},
      {"triangle", run_triangle, true},
      {"counting-lemma", run_counting_lemma, false},
      {"commutative", run_commutative, true},
      {"integrality", run_integrality, true},
      {"p-nonnegativity", run_p_nonnegativity, true},
      {"coefficient-formulas", run_coefficient_formulas, true},
      {"berge-parity", run_berge_parity, false},
      {"redei-parity", run_redei_parity, false},
  };
  return entries;
}

}  // namespace

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "?";
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : registry()) out.push_back(entry.name);
    return out;
  }();
  return names;
}

std::vector<VerificationReport> check_identities(const Digraph& x, std::span<const std::string> checks,
                                                 const VerifyOptions& options) {
  std::vector<std::string> wanted;
  for (const std::string& c : checks) {
    if (c == "all") {
      wanted = check_names();
      break;
    }
    if (std::find(check_names().begin(), check_names().end(), c) == check_names().end())
      throw PreconditionError("unknown check '" + c + "'");
    if (std::find(wanted.begin(), wanted.end(), c) == wanted.end()) wanted.push_back(c);
  }

  const Context ctx{x, options, options.instance.empty() ? describe(x) : options.instance};
  std::vector<VerificationReport> reports;
  for (const auto& entry : registry()) {
    if (std::find(wanted.begin(), wanted.end(), entry.name) == wanted.end()) continue;
    if (entry.needs_expansion && x.vertex_count() > kExpansionLimit) {
      reports.push_back(skip(entry.name, ctx.instance, "limit: n <= " + std::to_string(kExpansionLimit)));
      continue;
    }
    try {
      reports.push_back(entry.run(ctx, entry.name));
    } catch (const InvariantViolation& e) {
      reports.push_back(fail(entry.name, ctx.instance, e.what()));
    }
  }
  return reports;
}

VerificationReport check_product(const Digraph& x, const Digraph& y, const std::string& instance) {
  const std::string label = instance.empty() ? describe(x) + " * " + describe(y) : instance;
  const Digraph xy = product(x, y);
  if (xy.vertex_count() > kExpansionLimit) return skip("product", label, "limit: n <= 8");
  return compare("product", label, w(xy), multiply(w(x), w(y)), "W_{X.Y} for Y = " + describe(y), "W_X W_Y");
}

VerificationReport check_deletion_contraction_at(const Digraph& x, Edge e, const std::string& instance) {
  const std::string label = instance.empty() ? describe(x) : instance;
  const int n = x.vertex_count();
  if (e.is_loop()) return skip("deletion-contraction", label, "hypothesis unmet: loop edge");
  if (!x.has_edge(e)) throw MissingEdgeError("edge " + edge_name(e) + " is not in the digraph");
  const Permutation delta = move_edge_to_end(n, e);
  const Digraph y = relabel(delta, x);
  const NCSymElement rhs = w(delete_edge(y, {n - 2, n - 1})) - induct(w(contract_last_edge(y)));
  auto report = compare("deletion-contraction", label, w(y), rhs, "W at edge " + edge_name(e),
                        "W_{X\\e} - W_{X/e}^");
  if (report.failed()) return report;
  return compare("deletion-contraction", label, w(x), act(delta.inverse(), rhs), "W_X",
                 "relabeled recursion at " + edge_name(e));
}

}  // namespace rbnc
