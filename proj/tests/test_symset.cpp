#include <map>
#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "spiny/error.hpp"

using namespace spiny;
using namespace spiny::testing;

namespace {

EdgeStructure c2_edges() { return nerve_of_group(GroupTable::cyclic(2)).edges(); }

}  // namespace

TEST_CASE("edge structure axioms") {
  EdgeStructure E;
  const auto a = E.add_object("a");
  const auto b = E.add_object("b");
  const auto f = E.add_edge_pair("f", "f'", a, b);
  CHECK(E.violations().empty());
  CHECK(E.inv(E.inv(f)) == f);
  CHECK(E.dom(E.inv(f)) == b);
  CHECK(E.is_identity(E.ident(a)));
  CHECK(E.edge_name(E.ident(b)) == "id:b");
  CHECK(E.num_nonidentity_edges() == 2);

  std::vector<EdgeStructure::Edge> bad{{"id:*", 0, 0, 0}, {"g", 0, 0, 2}, {"h", 0, 0, 2}};
  CHECK_FALSE(EdgeStructure({"*"}, bad, {0}).violations().empty());
}

TEST_CASE("matrix action relabels entries") {
  const auto X = nerve_of_group(GroupTable::cyclic(3));
  const auto& E = X.edges();
  for (const auto& x : X.simplices(2)) {
    CHECK(x.act(FiniteMap::identity(2)) == x);
    const auto y = x.act(maps::transposition(2, 0, 1));
    CHECK(y(0, 1) == x(1, 0));
    CHECK(y(0, 2) == x(1, 2));
    CHECK(y(1, 2) == x(0, 2));
    CHECK(y(2, 2) == x(2, 2));
    CHECK(y.violations(E).empty());
  }
}

TEST_CASE("f . chi has superdiagonal (f^-1, f) and an identity corner") {
  EdgeStructure E;
  const auto a = E.add_object("a");
  const auto b = E.add_object("b");
  const auto f = E.add_edge_pair("f", "f'", a, b);
  const auto x = SimplexMatrix::of_edge(E, f).act(maps::chi());
  CHECK(x.degree() == 2);
  CHECK(x.superdiagonal() == std::vector<EdgeId>{E.inv(f), f});
  CHECK(x(0, 2) == E.ident(b));
  CHECK(x.violations(E).empty());
}

TEST_CASE("apply_map refuses degrees above the truncation") {
  const auto X = nerve_of_group(GroupTable::cyclic(2));
  const auto x = X.simplices(1).back();
  CHECK_THROWS_AS(apply_map(X, x, FiniteMap(1, {0, 1, 1})), Error);
  CHECK(apply_map(X, x, FiniteMap(1, {1})).degree() == 0);
}

TEST_CASE("validate accepts constructor output") {
  for (const auto& inst : corpus(false)) {
    INFO(inst.name);
    CHECK(validate(inst.X).ok());
  }
}

TEST_CASE("validate reports malformed matrices") {
  const auto E = c2_edges();
  // entries[0][1] = g but entries[1][0] = identity.
  SimplexMatrix bad(2, {0, 1, 1, 0, 0, 0, 1, 0, 0});
  CHECK_FALSE(bad.violations(E).empty());
  CHECK_FALSE(validate(TruncatedSymSet(2, E, {{}, {}, {bad}})).ok());
  std::map<int, std::vector<SimplexMatrix>> listed{{2, {bad}}};
  const auto report = validate_explicit(2, E, listed);
  CHECK_FALSE(report.ok());
  CHECK(report.violations.front().kind == Violation::Kind::matrix);
}

TEST_CASE("missing degeneracy image is a closure violation naming the edge") {
  const auto E = c2_edges();
  const EdgeId g = 1;
  std::map<int, std::vector<SimplexMatrix>> listed{{2, {}}};
  const auto report = validate_explicit(2, E, listed);
  REQUIRE_FALSE(report.ok());
  bool saw_chi = false;
  for (const auto& v : report.violations) {
    CHECK(v.kind == Violation::Kind::closure);
    if (v.message.find(E.edge_name(g)) != std::string::npos &&
        v.message.find(maps::chi().to_string()) != std::string::npos) {
      saw_chi = true;
    }
  }
  CHECK(saw_chi);
}

TEST_CASE("validate and validate_explicit agree on the corpus") {
  for (const auto& inst : corpus(false)) {
    if (inst.heavy || inst.X.truncation() > 3) continue;
    INFO(inst.name);
    std::map<int, std::vector<SimplexMatrix>> listed;
    for (int n = 2; n <= inst.X.truncation(); ++n) listed[n] = inst.X.simplices(n);
    CHECK(validate_explicit(inst.X.truncation(), inst.X.edges(), listed).ok());
    CHECK(explicitly_closed(inst.X));
  }
}

TEST_CASE("closure_generate examples") {
  const auto E = c2_edges();
  const std::vector<SimplexMatrix> none;
  auto X = closure_generate(E, 1, none);
  CHECK(X.truncation() == 1);
  CHECK(X.simplex_count(1) == 2);

  X = closure_generate(E, 2, none);
  CHECK(X.simplex_count(2) == 4);
  CHECK(X.nondegenerate_count(2) == 0);
  // Degeneracies of both edges under the three surjections onto [1], and of
  // the object, deduplicated.
  std::set<SimplexMatrix> images;
  for (EdgeId f = 0; f < 2; ++f) {
    for (const auto& s : all_surjections(2, 1)) images.insert(SimplexMatrix::of_edge(E, f).act(s));
  }
  images.insert(SimplexMatrix::of_object(E, 0).act(FiniteMap(0, {0, 0, 0})));
  CHECK(X.simplices(2) == std::vector<SimplexMatrix>(images.begin(), images.end()));

  const auto C3 = nerve_of_group(GroupTable::cyclic(3));
  const SimplexMatrix gen = C3.nondegenerate(2).front();
  const auto Y = closure_generate(C3.edges(), 2, std::vector<SimplexMatrix>{gen});
  std::set<SimplexMatrix> orbit;
  for (const auto& p : all_permutations(2)) orbit.insert(gen.act(p));
  CHECK(Y.nondegenerate_count(2) == orbit.size());
  CHECK(Y == C3);
}

TEST_CASE("closure_generate rejects generators above the truncation") {
  const auto C3 = nerve_of_group(GroupTable::cyclic(3));
  const auto gens = C3.simplices(2);
  CHECK_THROWS_AS(closure_generate(C3.edges(), 1, gens), PreconditionViolation);
}

TEST_CASE("closure_generate is idempotent") {
  for (const auto& inst : corpus(false)) {
    INFO(inst.name);
    std::vector<SimplexMatrix> gens;
    for (int n = 2; n <= inst.X.truncation(); ++n) {
      for (const auto& x : inst.X.nondegenerate(n)) gens.push_back(x);
    }
    const auto again = closure_generate(inst.X.edges(), inst.X.truncation(), gens);
    CHECK(again == inst.X);
  }
}

TEST_CASE("action is contravariantly functorial") {
  for (const auto& inst : corpus(false)) {
    if (inst.heavy || inst.X.truncation() > 3) continue;
    INFO(inst.name);
    const int N = inst.X.truncation();
    for (int n = 1; n <= N; ++n) {
      for (const auto& x : inst.X.simplices(n)) {
        for (int m = 0; m <= std::min(N, 2); ++m) {
          for (const auto& a : all_maps(m, n)) {
            for (int l = 0; l <= std::min(N, 2); ++l) {
              for (const auto& b : all_maps(l, m)) {
                REQUIRE(x.act(compose(a, b)) == x.act(a).act(b));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("simplex counts follow the surjection formula") {
  for (const auto& inst : corpus(false)) {
    if (inst.heavy) continue;
    INFO(inst.name);
    const auto& X = inst.X;
    for (int n = 0; n <= X.truncation(); ++n) {
      std::uint64_t expected = 0;
      for (int k = 0; k <= n; ++k) {
        std::uint64_t nd = k == 0   ? X.edges().num_objects()
                           : k == 1 ? X.edges().num_nonidentity_edges()
                                    : X.nondegenerate_count(k);
        expected += nd * stirling2(n + 1, k + 1);
      }
      CHECK(X.simplex_count(n) == expected);
      CHECK(X.simplices(n).size() == expected);
    }
  }
}
