#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "rbnc/errors.hpp"
#include "rbnc/redeiberge.hpp"

using namespace rbnc;
using oracle::sp;

namespace {

NCSymElement el(Basis b, int n, std::initializer_list<std::pair<const char*, int>> terms) {
  NCSymElement x(n, b);
  for (auto [key, c] : terms) x.add_term(sp(key), c);
  return x;
}

CSymElement cel(Basis b, int n, std::initializer_list<std::pair<std::vector<int>, int>> terms) {
  CSymElement x(n, b);
  for (const auto& [parts, c] : terms) x.add_term(IntPartition(parts), c);
  return x;
}

NCSymElement in_p(const NCSymElement& x) { return to_basis(x, Basis::P); }

}  // namespace

TEST_CASE("friendly listings") {
  CHECK(count_friendly(discrete_digraph(2), Coloring({1, 1})) == 2);
  CHECK(count_friendly(path_digraph(2), Coloring({1, 1})) == 1);
  CHECK(count_friendly(path_digraph(2), Coloring({1, 2})) == 1);
  CHECK_THROWS_AS(Coloring({0, 1}), PreconditionError);
  CHECK_THROWS_AS(count_friendly(path_digraph(2), Coloring({1})), DegreeMismatchError);
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> color(1, 3);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto x = random_digraph(n, 0.4, rng());
    std::vector<int> f(static_cast<std::size_t>(n));
    for (auto& c : f) c = color(rng);
    CHECK(count_friendly(x, Coloring(f)) == oracle::naive_count_friendly(x, f));
  }
}

TEST_CASE("small expansions") {
  CHECK(w_by_definition(complete_digraph(2)) == el(Basis::M, 2, {{"1/2", 1}}));
  CHECK(w_by_definition(discrete_digraph(2)) == el(Basis::M, 2, {{"1/2", 1}, {"12", 2}}));
  CHECK(w_by_definition(discrete_digraph(1)) == el(Basis::M, 1, {{"1", 1}}));
  CHECK(w_by_permutations(complete_digraph(2)) == el(Basis::P, 2, {{"1/2", 1}, {"12", -1}}));
  CHECK(w_by_permutations(discrete_digraph(2)) == el(Basis::P, 2, {{"1/2", 1}, {"12", 1}}));
  CHECK(w_by_permutations(path_digraph(2)) == el(Basis::P, 2, {{"1/2", 1}}));
  CHECK(w_by_deletion_contraction(path_digraph(2)) == el(Basis::M, 2, {{"1/2", 1}, {"12", 1}}));
  CHECK(w_by_permutations(Digraph(0)) == NCSymElement::one(Basis::P));
  CHECK(w_by_definition(Digraph(0)) == NCSymElement::one(Basis::M));
}

TEST_CASE("discrete digraphs") {
  CHECK(discrete_expansion(3) ==
        el(Basis::M, 3, {{"1/2/3", 1}, {"12/3", 2}, {"13/2", 2}, {"1/23", 2}, {"123", 6}}));
  for (int n = 1; n <= 5; ++n) {
    CHECK(w_by_definition(discrete_digraph(n)) == discrete_expansion(n));
    // Loops never matter.
    Digraph looped(n);
    for (int v = 0; v < n; v += 2) looped.add_edge({v, v});
    CHECK(w_by_deletion_contraction(looped) == discrete_expansion(n));
    CHECK(in_p(w_by_permutations(looped)) == in_p(discrete_expansion(n)));
  }
}

TEST_CASE("complete digraphs give a single elementary term") {
  for (int n = 1; n <= 5; ++n) {
    const auto e = NCSymElement::basis_element(Basis::E, SetPartition::single_block(n));
    CHECK(to_basis(w_by_permutations(complete_digraph(n)), Basis::E) == e);
    CHECK(to_basis(w_by_definition(complete_digraph(n)), Basis::E) == e);
  }
}

TEST_CASE("path recurrence") {
  const auto lhs = in_p(w_by_deletion_contraction(path_digraph(3)));
  const auto p2_d1 = Digraph(3, {{0, 1}});
  const auto rhs = in_p(w_by_permutations(p2_d1)) - in_p(induct(w_by_permutations(path_digraph(2))));
  CHECK(lhs == rhs);
  CHECK(lhs == w_by_permutations(path_digraph(3)));
}

TEST_CASE("tournaments") {
  CHECK(w_tournament(path_digraph(2)) == el(Basis::P, 2, {{"1/2", 1}}));
  CHECK(w_tournament(cycle_digraph(3)) == el(Basis::P, 3, {{"1/2/3", 1}, {"123", 2}}));
  CHECK(w_tournament(transitive_tournament(3)) == el(Basis::P, 3, {{"1/2/3", 1}}));
  CHECK_THROWS_AS(w_tournament(discrete_digraph(2)), PreconditionError);
  for (int n = 1; n <= 4; ++n)
    oracle::for_each_tournament(n, [](const Digraph& t) { CHECK(w_tournament(t) == w_by_permutations(t)); });
}

TEST_CASE("permutation search matches a full filter") {
  for (int n = 0; n <= 3; ++n)
    oracle::for_each_digraph(n, true, [](const Digraph& x) {
      CHECK(w_by_permutations(x) == oracle::w_by_permutation_filter(x));
    });
  std::mt19937_64 rng(31);
  for (int n = 4; n <= 6; ++n)
    for (int i = 0; i < 25; ++i) {
      const auto x = random_digraph(n, 0.4, rng());
      CHECK(w_by_permutations(x) == oracle::w_by_permutation_filter(x));
    }
}

TEST_CASE("expansions agree with friendly-listing word counts") {
  // The power series itself, letters 1..n: any basis and any algorithm must
  // reproduce the listing counts of every coloring.
  std::mt19937_64 rng(41);
  for (int n = 1; n <= 4; ++n)
    for (int i = 0; i < 8; ++i) {
      const auto x = random_digraph(n, 0.35, rng());
      const auto words = oracle::w_words(x, n);
      CHECK(expand_truncated(w_by_permutations(x), n) == words);
      CHECK(expand_truncated(w_by_definition(x), n) == words);
      CHECK(expand_truncated(w_by_deletion_contraction(x), n) == words);
    }
}

TEST_CASE("three algorithms agree") {
  std::mt19937_64 rng(51);
  for (int n = 1; n <= 6; ++n)
    for (int i = 0; i < 10; ++i) {
      const auto x = random_digraph(n, 0.3, rng());
      const auto p = w_by_permutations(x);
      CHECK(in_p(w_by_definition(x)) == p);
      CHECK(in_p(w_by_deletion_contraction(x, EdgeRule::LexSmallest)) == p);
      CHECK(in_p(w_by_deletion_contraction(x, EdgeRule::LexLargest)) == p);
    }
}

TEST_CASE("size limits") {
  CHECK_THROWS_AS(w_by_definition(discrete_digraph(9)), SizeLimitError);
  CHECK_THROWS_AS(w_by_permutations(discrete_digraph(9)), SizeLimitError);
  CHECK_THROWS_AS(w_by_deletion_contraction(discrete_digraph(8)), SizeLimitError);
}

TEST_CASE("move_edge_to_end") {
  const auto d = move_edge_to_end(4, {2, 0});
  CHECK(d(2) == 2);
  CHECK(d(0) == 3);
  CHECK(d(1) == 0);
  CHECK(d(3) == 1);
  CHECK_THROWS_AS(move_edge_to_end(3, {1, 1}), PreconditionError);
}

TEST_CASE("descent expansion") {
  CHECK(u_by_descents(path_digraph(2)) == cel(Basis::M, 2, {{{2}, 1}, {{1, 1}, 2}}));
  CHECK(u_by_descents(discrete_digraph(2)) == cel(Basis::M, 2, {{{2}, 2}, {{1, 1}, 2}}));
  CHECK(u_by_descents(complete_digraph(2)) == cel(Basis::M, 2, {{{1, 1}, 2}}));
  CHECK(u_by_descents(Digraph(0)) == cel(Basis::M, 0, {{{}, 1}}));
  const auto q = descent_aggregate(complete_digraph(2));
  CHECK(q.terms == std::map<std::uint32_t, Integer>{{1u, 2}});
  std::mt19937_64 rng(61);
  for (int n = 1; n <= 6; ++n)
    for (int i = 0; i < 5; ++i) {
      const auto x = random_digraph(n, 0.5, rng());
      CHECK(oracle::commuting_expansion(u_by_descents(x), n) ==
            oracle::collapse_words(oracle::w_words(x, n), n));
    }
}

TEST_CASE("coefficient formulas") {
  CHECK(m_coefficient_formula(complete_digraph(2), sp("12")) == 0);
  CHECK(m_coefficient_formula(complete_digraph(2), sp("1/2")) == 1);
  CHECK(to_basis(w_by_permutations(discrete_digraph(2)), Basis::E) == el(Basis::E, 2, {{"1/2", 2}, {"12", -1}}));
  CHECK(e_coefficient_formula(discrete_digraph(2), sp("1/2")) == 2);
  CHECK(e_coefficient_formula(discrete_digraph(2), sp("12")) == -1);
  CHECK_THROWS_AS(m_coefficient_formula(complete_digraph(2), sp("1")), DegreeMismatchError);
  std::mt19937_64 rng(71);
  for (int n = 1; n <= 5; ++n)
    for (int i = 0; i < 5; ++i) {
      const auto x = random_digraph(n, 0.4, rng());
      const auto m = w_by_definition(x);
      const auto e = to_basis(w_by_permutations(x), Basis::E);
      for (const auto& pi : enumerate_partitions(n)) {
        CHECK(Rational(m_coefficient_formula(x, pi)) == m.coefficient(pi));
        CHECK(e_coefficient_formula(x, pi) == e.coefficient(pi));
      }
    }
}

TEST_CASE("integer p coefficients and signed permutations") {
  std::mt19937_64 rng(81);
  for (int i = 0; i < 30; ++i) {
    const auto x = random_digraph(5, 0.5, rng());
    const auto w = w_by_permutations(x);
    CHECK(w.has_integer_coefficients());
    NCSymElement tally(5, Basis::P);
    for_each_signed_permutation(x, [&](const SetPartition& t, int phi) { tally.add_term(t, phi % 2 ? -1 : 1); });
    CHECK(tally == w);
  }
}
