#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "spiny/error.hpp"
#include "spiny/spine.hpp"

using namespace spiny;
using namespace spiny::testing;

TEST_CASE("spine counts") {
  CHECK(all_spines(1).size() == 1);
  CHECK(all_spines(1).front().edges() == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(all_spines(2).size() == 3);
  CHECK(all_spines(3).size() == 16);
}

TEST_CASE("spines match the edge-subset brute force") {
  for (int n = 1; n <= 4; ++n) {
    INFO("n = " << n);
    const auto oracle = trees_by_edge_subsets(n);
    std::uint64_t cayley = 1;
    for (int i = 0; i < n - 1; ++i) cayley *= static_cast<std::uint64_t>(n + 1);
    CHECK(oracle.size() == cayley);
    std::vector<std::vector<std::pair<int, int>>> ours;
    for (const auto& T : all_spines(n)) ours.push_back(T.edges());
    std::sort(ours.begin(), ours.end());
    CHECK(ours == oracle);
    CHECK(std::set(ours.begin(), ours.end()).size() == ours.size());
  }
  CHECK(all_spines(5).size() == 1296);
}

TEST_CASE("spine enumeration respects the cap") {
  CHECK_THROWS_AS(all_spines(6), PreconditionViolation);
  CHECK_NOTHROW(all_spines(6, 6));
  CHECK_THROWS_AS(all_spines(0), PreconditionViolation);
}

TEST_CASE("spine constructor rejects non-trees") {
  CHECK_THROWS_AS(Spine(2, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(Spine(3, {{0, 1}, {1, 2}}), Error);
  CHECK_THROWS_AS(Spine(2, {{0, 3}, {1, 2}}), Error);
  CHECK_NOTHROW(Spine(3, {{0, 2}, {1, 2}, {2, 3}}));
}

TEST_CASE("standard and starry spine evaluation") {
  for (const auto& inst : corpus(false)) {
    if (inst.heavy) continue;
    INFO(inst.name);
    const auto& X = inst.X;
    for (int n = 1; n <= std::min(X.truncation(), 4); ++n) {
      for (const auto& x : X.simplices(n)) {
        const auto segal = spine_eval(X, x, Spine::standard(n));
        CHECK(segal.components == x.superdiagonal());
        const auto starry = spine_eval(X, x, Spine::starry(n));
        std::vector<EdgeId> row0(x.row(0).begin() + 1, x.row(0).end());
        CHECK(starry.components == row0);
        CHECK(is_matching(X.edges(), segal));
        CHECK(is_matching(X.edges(), starry));
      }
    }
  }
}

TEST_CASE("degree-one evaluation is the edge itself") {
  const auto X = nerve_of_group(GroupTable::cyclic(3));
  for (EdgeId f = 0; f < X.edges().num_edges(); ++f) {
    const auto t = spine_eval(X, SimplexMatrix::of_edge(X.edges(), f), Spine::standard(1));
    CHECK(t.components == std::vector<EdgeId>{f});
  }
}

TEST_CASE("standard spine on f . chi") {
  const auto X = nerve_of_group(GroupTable::cyclic(3));
  const auto& E = X.edges();
  const EdgeId f = 1;
  const auto x = SimplexMatrix::of_edge(E, f).act(maps::chi());
  CHECK(spine_eval(X, x, Spine::standard(2)).components == std::vector<EdgeId>{E.inv(f), f});
}

TEST_CASE("starry spine on a C3 nerve simplex with Segal tuple (g, g, g)") {
  const auto G = GroupTable::cyclic(3);
  const auto C3 = nerve_of_group(G);
  const EdgeId g = 1;
  const auto g2 = static_cast<EdgeId>(G.mul(1, 1));
  const auto gens = C3.simplices(2);
  const auto X = closure_generate(C3.edges(), 3, gens);
  std::size_t hits = 0;
  for (const auto& x : X.simplices(3)) {
    if (x.superdiagonal() != std::vector<EdgeId>{g, g, g}) continue;
    ++hits;
    const auto t = spine_eval(X, x, Spine::starry(3));
    CHECK(t.components == std::vector<EdgeId>{g, g2, X.edges().ident(0)});
  }
  CHECK(hits == 1);
}

TEST_CASE("limit tuples of the standard spine are composable chains") {
  const auto X = nerve_of_group(GroupTable::cyclic(2));
  CHECK(limit_tuples(X, Spine::standard(2)).size() == 4);
  CHECK(limit_tuples(X, Spine::standard(1)).size() == 2);
}
