// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "../oracles.hpp"
#include "rbnc/errors.hpp"
#include "rbnc/redeiberge.hpp"
#include "rbnc/verify.hpp"

using namespace rbnc;

namespace {

struct Outcome {
  bool ok = true;
  std::string summary;  // what was covered
  std::string witness;  // first failure

  void fail(const std::string& what) {
    if (ok) witness = what;
    ok = false;
  }
};

NCSymElement in_m(const NCSymElement& x) { return to_basis(x, Basis::M); }

std::uint64_t seed_for(int criterion, int n, int i) {
  return static_cast<std::uint64_t>(criterion) * 1'000'000 + static_cast<std::uint64_t>(n) * 1'000 +
         static_cast<std::uint64_t>(i);
}

void compare_algorithms(const Digraph& x, Outcome& out) {
  const auto by_definition = w_by_definition(x);
  const auto by_permutations = in_m(w_by_permutations(x));
  const auto by_recursion = w_by_deletion_contraction(x);
  if (by_definition != by_permutations || by_recursion != by_permutations)
    out.fail(describe(x) + ": definition " + by_definition.to_string() + ", permutations " +
             by_permutations.to_string() + ", deletion-contraction " + by_recursion.to_string());
}

Outcome criterion1() {
  Outcome out;
  int count = 0;
  int loopless = 0;
  oracle::for_each_digraph(3, true, [&](const Digraph& x) {
    ++count;
    if (!x.has_loops()) ++loopless;
    compare_algorithms(x, out);
  });
  out.summary = std::to_string(count) + " digraphs on 3 vertices (" + std::to_string(loopless) + " loopless)";
  return out;
}

Outcome criterion2() {
  Outcome out;
  int count = 0;
  for (int n = 4; n <= 6; ++n)
    for (int i = 0; i < 200; ++i) {
      compare_algorithms(random_digraph(n, 0.3, seed_for(2, n, i)), out);
      ++count;
    }
  out.summary = std::to_string(count) + " seeded digraphs, n = 4..6, p = 0.3";
  return out;
}

Outcome criterion3() {
  Outcome out;
  for (int n = 1; n <= 6; ++n) {
    const auto kn = complete_digraph(n);
    const auto top = NCSymElement::basis_element(Basis::E, SetPartition::single_block(n));
    for (const auto& w : {w_by_permutations(kn), w_by_definition(kn)})
      if (to_basis(w, Basis::E) != top) out.fail("W_{K_" + std::to_string(n) + "} = " + to_basis(w, Basis::E).to_string());

    const auto dn = discrete_digraph(n);
    NCSymElement expected(n, Basis::M);
    for (const auto& pi : enumerate_partitions(n)) expected.add_term(pi, Rational(factorial_weight(pi)));
    for (const auto& w : {in_m(w_by_permutations(dn)), w_by_definition(dn), w_by_deletion_contraction(dn)})
      if (w != expected) out.fail("W_{D_" + std::to_string(n) + "} = " + w.to_string());

    // Commutative images: n! e_(n) and n! Σ_λ m_λ.
    const Rational nfact(factorial(n));
    CSymElement e_image(n, Basis::E);
    e_image.add_term(IntPartition({n}), nfact);
    if (commutative_image(to_basis(w_by_permutations(kn), Basis::E)) != e_image)
      out.fail("commutative image of W_{K_" + std::to_string(n) + "}");
    CSymElement m_image(n, Basis::M);
    std::set<IntPartition> types;
    for (const auto& pi : enumerate_partitions(n)) types.insert(lambda_of(pi));
    for (const auto& lambda : types) m_image.add_term(lambda, nfact);
    if (commutative_image(in_m(w_by_permutations(dn))) != m_image || u_by_descents(dn) != m_image)
      out.fail("commutative image of W_{D_" + std::to_string(n) + "}");
    if (commutative_image(in_m(w_by_permutations(kn))) != u_by_descents(kn))
      out.fail("U_{K_" + std::to_string(n) + "} from descents");
  }
  out.summary = "K_n and D_n for n = 1..6, noncommutative and commutative";
  return out;
}

void check_tournament(const Digraph& t, Outcome& out) {
  const auto w = w_by_permutations(t);
  if (w_tournament(t) != w) out.fail(describe(t) + ": tournament formula " + w_tournament(t).to_string() + " vs " + w.to_string());
  for (const auto& [pi, c] : w.terms())
    if (c < 0 || !is_integer(c)) out.fail(describe(t) + ": p[" + pi.to_string() + "] = " + to_string(c));
  if (w_by_permutations(complement(t)) != w) out.fail(describe(t) + ": W_X differs from W of the complement");
  if (hamiltonian_path_count(t) % 2 != 1) out.fail(describe(t) + ": even Hamiltonian path count");
}

Outcome criterion4() {
  Outcome out;
  int count = 0;
  oracle::for_each_tournament(4, [&](const Digraph& t) {
    check_tournament(t, out);
    ++count;
  });
  const int exhaustive = count;
  for (int n = 5; n <= 6; ++n)
    for (int i = 0; i < 100; ++i) {
      check_tournament(random_tournament(n, seed_for(4, n, i)), out);
      ++count;
    }
  out.summary = std::to_string(exhaustive) + " tournaments on 4 vertices + " + std::to_string(count - exhaustive) +
                " seeded at n = 5, 6";
  return out;
}

Outcome criterion5() {
  Outcome out;
  const std::vector<std::string> checks{"opposite", "deletion-contraction", "subset-decomposition",
                                        "cycle-decomposition"};
  std::map<std::string, int> applied;
  int instances = 0;
  auto battery = [&](const Digraph& x) {
    ++instances;
    for (const auto& r : check_identities(x, checks)) {
      if (r.failed()) out.fail(r.check + " on " + r.instance + ": " + r.detail);
      if (r.passed()) ++applied[r.check];
    }
  };
  for (int n = 0; n <= 3; ++n) oracle::for_each_digraph(n, true, battery);
  for (int n = 4; n <= 5; ++n)
    for (int i = 0; i < 100; ++i) battery(random_digraph(n, 0.3, seed_for(5, n, i)));

  int pairs = 0;
  for (int n1 = 1; n1 <= 6; ++n1)
    for (int n2 = 1; n1 + n2 <= 7; ++n2)
      for (int i = 0; i < 5; ++i) {
        const auto x = random_digraph(n1, 0.4, seed_for(5, 10 * n1 + n2, 2 * i));
        const auto y = random_digraph(n2, 0.4, seed_for(5, 10 * n1 + n2, 2 * i + 1));
        const auto r = check_product(x, y);
        if (!r.passed()) out.fail("product " + r.instance + ": " + std::string(to_string(r.status)) + " " + r.detail);
        ++pairs;
      }

  // The seven-term triangle expansion on C_3, written out term by term.
  const auto c3 = cycle_digraph(3);
  const Edge e12{0, 1}, e23{1, 2}, e31{2, 0};
  auto w_minus = [&](std::vector<Edge> s) { return w_by_permutations(delete_edges(c3, s)); };
  const auto seven = w_minus({e12}) + w_minus({e23}) + w_minus({e31}) - w_minus({e12, e23}) - w_minus({e23, e31}) -
                     w_minus({e12, e31}) + w_minus({e12, e23, e31});
  if (seven != w_by_permutations(c3)) out.fail("triangle: seven-term sum " + seven.to_string());
  const std::vector<std::string> triangle{"triangle"};
  if (!check_identities(c3, triangle).front().passed()) out.fail("triangle check on C_3 did not pass");

  std::ostringstream s;
  s << instances << " instances (n <= 3 exhaustive, 100 each at n = 4, 5);";
  for (const auto& name : checks) s << " " << name << " " << applied[name];
  s << "; " << pairs << " product pairs; C_3 triangle";
  out.summary = s.str();
  return out;
}

void check_commutative(const Digraph& x, Outcome& out) {
  try {
    const auto image = commutative_image(in_m(w_by_permutations(x)));
    const auto u = u_by_descents(x);
    if (image != u) out.fail(describe(x) + ": image " + image.to_string() + ", descents " + u.to_string());
  } catch (const SymmetryViolation& e) {
    out.fail(e.what());
  }
}

Outcome criterion6() {
  Outcome out;
  int count = 0;
  for (int n = 0; n <= 3; ++n)
    oracle::for_each_digraph(n, true, [&](const Digraph& x) {
      check_commutative(x, out);
      ++count;
    });
  for (int n = 4; n <= 5; ++n)
    for (int i = 0; i < 100; ++i) {
      check_commutative(random_digraph(n, 0.3, seed_for(6, n, i)), out);
      ++count;
    }
  out.summary = std::to_string(count) + " digraphs (n <= 3 exhaustive, 100 each at n = 4, 5)";
  return out;
}

void check_berge(const Digraph& x, Outcome& out) {
  const auto a = hamiltonian_path_count(x);
  const auto b = hamiltonian_path_count(without_loops(complement(x)));
  if (a % 2 != b % 2) out.fail(describe(x) + ": " + std::to_string(a) + " vs " + std::to_string(b));
}

Outcome criterion7() {
  Outcome out;
  int count = 0;
  for (int n = 1; n <= 4; ++n)
    oracle::for_each_digraph(n, false, [&](const Digraph& x) {
      check_berge(x, out);
      ++count;
    });
  for (int n = 5; n <= 6; ++n)
    for (int i = 0; i < 200; ++i) {
      check_berge(without_loops(random_digraph(n, 0.5, seed_for(7, n, i))), out);
      ++count;
    }
  out.summary = std::to_string(count) + " loopless digraphs (n <= 4 exhaustive, 200 each at n = 5, 6)";
  return out;
}

Outcome criterion8() {
  Outcome out;
  std::mt19937_64 rng(seed_for(8, 0, 0));
  int round_trips = 0;
  for (int n = 1; n <= 5; ++n)
    for (int i = 0; i < 20; ++i)
      for (Basis from : {Basis::M, Basis::P, Basis::E}) {
        const auto x = oracle::random_element(n, from, rng);
        for (Basis via : {Basis::M, Basis::P, Basis::E}) {
          ++round_trips;
          if (to_basis(to_basis(x, via), from) != x) out.fail("round trip of " + x.to_string());
        }
      }

  const auto lattice = enumerate_partitions(4);
  int intervals = 0;
  for (const auto& a : lattice)
    for (const auto& b : lattice)
      if (refines(a, b)) {
        ++intervals;
        if (mobius(a, b) != oracle::recursive_mobius(a, b, lattice))
          out.fail("mobius(" + a.to_string() + ", " + b.to_string() + ")");
      }

  const auto bottom = SetPartition::singletons(4);
  for (const auto& pi : lattice) {
    NCSymElement by_substitution(4, Basis::P);
    for (const auto& s : lattice)
      if (refines(s, pi)) by_substitution.add_term(s, Rational(oracle::recursive_mobius(bottom, s, lattice)));
    const auto e = NCSymElement::basis_element(Basis::E, pi);
    if (to_basis(by_substitution, Basis::E) != e || to_basis(e, Basis::P) != by_substitution)
      out.fail("e-in-p inversion at " + pi.to_string());
    // And as power series in 4 letters.
    if (expand_truncated(e, 4) != expand_truncated(by_substitution, 4)) out.fail("e[" + pi.to_string() + "] words");
  }
  out.summary = std::to_string(round_trips) + " round trips (n <= 5), " + std::to_string(intervals) +
                " Mobius intervals on Pi_4, 15 e-in-p substitutions";
  return out;
}

Outcome criterion9() {
  Outcome out;
  int with_cycle = 0;
  int count = 0;
  for (int n = 4; n <= 6; ++n) {
    int found = 0;
    for (int i = 0; found < 50; ++i) {
      const auto x = random_digraph(n, 0.4, seed_for(9, n, i));
      if (has_even_directed_cycle(x)) continue;
      ++found;
      ++count;
      if (find_directed_cycle(x)) ++with_cycle;
      const auto w = w_by_permutations(x);
      for (const auto& [pi, c] : w.terms())
        if (c < 0) out.fail(describe(x) + ": p[" + pi.to_string() + "] = " + to_string(c));
      if (w.coefficient(SetPartition::singletons(n)) < 1) out.fail(describe(x) + ": singleton coefficient below 1");
    }
  }
  out.summary = std::to_string(count) + " digraphs without even cycles (" + std::to_string(with_cycle) +
                " with an odd cycle of length >= 3)";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"exhaustive cross-algorithm agreement", criterion1},
      {"randomized cross-algorithm agreement", criterion2},
      {"closed forms", criterion3},
      {"tournament suite", criterion4},
      {"identity battery", criterion5},
      {"commutative consistency", criterion6},
      {"Berge parity", criterion7},
      {"basis round trips and Mobius", criterion8},
      {"positivity", criterion9},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %zu  %s: %s [%.1f s]\n", outcome.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                outcome.summary.c_str(), seconds);
    if (!outcome.ok) {
      std::printf("      first failure: %s\n", outcome.witness.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures ? 1 : 0;
}
