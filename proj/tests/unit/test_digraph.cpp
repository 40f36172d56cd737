#include <doctest.h>

#include <random>
#include <sstream>

#include "../oracles.hpp"
#include "rbnc/digraph.hpp"
#include "rbnc/errors.hpp"

using namespace rbnc;

namespace {

Digraph k2() { return complete_digraph(2); }
Digraph p2() { return path_digraph(2); }
Digraph c3() { return cycle_digraph(3); }

}  // namespace

TEST_CASE("construction") {
  CHECK(k2().edge_count() == 4);
  CHECK(p2().edges() == std::vector<Edge>{{0, 1}});
  CHECK(c3().edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}});
  CHECK(discrete_digraph(3).edge_count() == 0);
  CHECK_THROWS_AS(Digraph(2, {{0, 1}, {0, 1}}), PreconditionError);
  CHECK_THROWS_AS(Digraph(2, {{0, 2}}), PreconditionError);
  CHECK_THROWS_AS(cycle_digraph(1), PreconditionError);
  CHECK(transitive_tournament(3).edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("complement and opposite") {
  CHECK(complement(complete_digraph(3)) == discrete_digraph(3));
  CHECK(complement(discrete_digraph(2)) == k2());
  CHECK(complement(p2()) == Digraph(2, {{0, 0}, {1, 1}, {1, 0}}));
  CHECK(opposite(p2()) == Digraph(2, {{1, 0}}));
  CHECK(opposite(k2()) == k2());
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_digraph(5, 0.4, rng());
    CHECK(opposite(opposite(x)) == x);
    CHECK(complement(complement(x)) == x);
    CHECK(x.edge_count() + complement(x).edge_count() == 25);
  }
}

TEST_CASE("deletion") {
  CHECK(delete_edge(p2(), {0, 1}) == discrete_digraph(2));
  CHECK(delete_edges(p2(), std::vector<Edge>{}) == p2());
  const auto all = c3().edges();
  CHECK(delete_edges(c3(), all) == discrete_digraph(3));
  CHECK_THROWS_AS(delete_edge(p2(), {1, 0}), MissingEdgeError);
}

TEST_CASE("contraction of the last edge") {
  CHECK(contract_last_edge(p2()) == discrete_digraph(1));
  CHECK(contract_last_edge(path_digraph(3)) == p2());
  // C_3 needs relabeling so that its last edge is (2,3); in label order it is.
  CHECK(contract_last_edge(c3()) == Digraph(2, {{0, 1}, {1, 0}}));
  CHECK_THROWS_AS(contract_last_edge(Digraph(2, {{1, 0}})), MissingEdgeError);
  // Merged vertex keeps an in-edge from w iff w → v_{n-1}, and an out-edge
  // iff v_n → w. Loops on the contracted pair vanish.
  const Digraph x(3, {{0, 1}, {2, 0}, {1, 2}, {1, 1}, {2, 2}, {0, 0}});
  CHECK(contract_last_edge(x) == Digraph(2, {{0, 0}, {0, 1}, {1, 0}}));
}

TEST_CASE("relabel and product") {
  CHECK(relabel(Permutation::identity(2), p2()) == p2());
  CHECK(relabel(Permutation::transposition(2, 0, 1), p2()) == Digraph(2, {{1, 0}}));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) {
    const auto x = random_digraph(4, 0.5, rng());
    const auto d = oracle::random_permutation(4, rng);
    CHECK(relabel(d.inverse(), relabel(d, x)) == x);
  }
  CHECK(product(discrete_digraph(1), discrete_digraph(1)) == p2());
  CHECK(product(c3(), Digraph(0)) == c3());
  CHECK(product(discrete_digraph(2), discrete_digraph(1)) == Digraph(3, {{0, 2}, {1, 2}}));
}

TEST_CASE("predicates") {
  CHECK(is_tournament(c3()));
  CHECK(is_tournament(p2()));
  CHECK_FALSE(is_tournament(discrete_digraph(2)));
  CHECK_FALSE(is_tournament(Digraph(2, {{0, 1}, {0, 0}})));
  CHECK(is_disjoint_union_of_paths(path_digraph(4)));
  CHECK(is_disjoint_union_of_paths(discrete_digraph(3)));
  CHECK_FALSE(is_disjoint_union_of_paths(c3()));
  CHECK_FALSE(is_disjoint_union_of_paths(Digraph(3, {{0, 1}, {0, 2}})));
  CHECK_FALSE(is_disjoint_union_of_paths(Digraph(1, {{0, 0}})));
}

TEST_CASE("cycles") {
  CHECK(find_directed_cycle(c3()) == std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}});
  CHECK_FALSE(find_directed_cycle(path_digraph(4)).has_value());
  CHECK(find_directed_cycle(Digraph(2, {{0, 1}, {1, 0}})) == std::vector<Edge>{{0, 1}, {1, 0}});
  CHECK_FALSE(find_directed_cycle(Digraph(1, {{0, 0}})).has_value());
  CHECK(find_directed_cycle(Digraph(1, {{0, 0}}), true).has_value());
  CHECK_FALSE(has_even_directed_cycle(c3()));
  CHECK(has_even_directed_cycle(Digraph(2, {{0, 1}, {1, 0}})));
  CHECK(has_even_directed_cycle(cycle_digraph(4)));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto x = random_digraph(5, 0.3, rng());
    if (auto cyc = find_directed_cycle(x)) {
      for (std::size_t j = 0; j < cyc->size(); ++j) {
        CHECK(x.has_edge((*cyc)[j]));
        CHECK((*cyc)[j].to == (*cyc)[(j + 1) % cyc->size()].from);
      }
    }
  }
}

TEST_CASE("hamiltonian paths") {
  CHECK(hamiltonian_path_count(path_digraph(3)) == 1);
  CHECK(hamiltonian_path_count(c3()) == 3);
  CHECK(hamiltonian_path_count(transitive_tournament(3)) == 1);
  // Every tournament has an odd number of Hamiltonian paths.
  oracle::for_each_tournament(4, [](const Digraph& t) { CHECK(hamiltonian_path_count(t) % 2 == 1); });
}

TEST_CASE("random generators are seeded") {
  CHECK(random_digraph(5, 0.3, 42) == random_digraph(5, 0.3, 42));
  CHECK(random_tournament(6, 9) == random_tournament(6, 9));
  CHECK(is_tournament(random_tournament(6, 9)));
  CHECK(random_digraph(4, 0.0, 1).edge_count() == 0);
  CHECK(random_digraph(4, 1.0, 1).edge_count() == 16);
}

TEST_CASE("text format") {
  const auto x = Digraph(3, {{0, 1}, {2, 2}});
  CHECK(parse_digraph(format_digraph(x)) == x);
  CHECK(parse_digraph("# comment\nn 2\n1 2 # trailing\n\n2 1\n") == Digraph(2, {{0, 1}, {1, 0}}));
  CHECK(describe(c3()) == "n=3 E={(1,2),(2,3),(3,1)}");
  try {
    parse_digraph("n 2\n1 3\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_digraph("2\n"), ParseError);
  CHECK_THROWS_AS(parse_digraph("n 2\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_digraph("n 2\n1 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(read_digraph_file("/nonexistent/graph.txt"), Error);
}
