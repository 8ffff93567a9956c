#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "spiny/error.hpp"

using namespace spiny;
using namespace spiny::testing;

TEST_CASE("group tables") {
  for (const auto& [name, G] : small_groups()) {
    INFO(name);
    CHECK(GroupTable::violations(G.elements(), G.table()).empty());
  }
  CHECK(GroupTable::symmetric(3).order() == 6);
  CHECK(GroupTable::dihedral(4).order() == 8);
  CHECK(GroupTable::direct_product(GroupTable::cyclic(2), GroupTable::cyclic(3)).order() == 6);
  CHECK_THROWS_AS(GroupTable({"e", "a"}, {{0, 1}, {1, 1}}), InvalidInput);
  CHECK_THROWS_AS(GroupTable({"e", "a", "b"}, {{0, 1, 2}, {1, 2, 0}, {2, 1, 0}}), InvalidInput);
}

TEST_CASE("group nerves") {
  for (const auto& [name, G] : small_groups()) {
    INFO(name);
    const auto X = nerve_of_group(G);
    CHECK(validate(X).ok());
    CHECK(is_group(X));
    CHECK(dimension(X) == G.order() - 1);
    CHECK(X.truncation() == std::max(1, G.order() - 1));
  }
  const auto C1 = nerve_of_group(GroupTable::cyclic(1));
  CHECK(C1.truncation() == 1);
  CHECK(C1.edges().num_edges() == 1);
  CHECK(C1.nondegenerate_count(2) == 0);
  CHECK(nerve_of_group(GroupTable::cyclic(2)).nondegenerate_count(2) == 0);
}

TEST_CASE("nerve entries compose") {
  for (const auto& [name, G] : small_groups()) {
    if (G.order() > 6) continue;
    INFO(name);
    const auto X = nerve_of_group(G);
    for (int n = 2; n <= X.truncation(); ++n) {
      for (const auto& x : X.nondegenerate(n)) {
        for (int i = 0; i <= n; ++i) {
          for (int j = 0; j <= n; ++j) {
            for (int k = 0; k <= n; ++k) {
              REQUIRE(static_cast<int>(x(i, k)) ==
                      G.mul(static_cast<int>(x(j, k)), static_cast<int>(x(i, j))));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("S3 has a nondegenerate 5-simplex listing every element") {
  const auto G = GroupTable::symmetric(3);
  const auto X = nerve_of_group(G);
  bool found = false;
  for (const auto& x : X.simplices(5)) {
    if (x.has_offdiagonal_identity(X.edges())) continue;
    std::set<EdgeId> row(x.row(0).begin(), x.row(0).end());
    found = found || row.size() == 6;
  }
  CHECK(found);
}

TEST_CASE("groupoid nerves") {
  const auto C2 = GroupTable::cyclic(2);
  CHECK(nerve_of_groupoid(groupoid_of_group(C2)) == nerve_of_group(C2));
  const auto pair = nerve_of_groupoid(contractible_pair());
  CHECK(p_invariant(pair).p == 1);
  CHECK(dimension(pair) == 1);
  const auto two = nerve_of_groupoid(two_copies_c2());
  CHECK(dimension(two) == 1);
  CHECK(connected_components(two).size() == 2);
  const auto big = nerve_of_groupoid(c2_times_pair());
  CHECK(dimension(big) == 3);
  CHECK(is_groupoid(big));

  auto bad = contractible_pair();
  bad.compose[1][2] = 0;
  CHECK_THROWS_AS(nerve_of_groupoid(bad), InvalidInput);
}

TEST_CASE("groupoid nerves have bijective Segal maps") {
  for (const auto& P : {contractible_pair(), two_copies_c2(), c2_times_pair()}) {
    const auto X = nerve_of_groupoid(P);
    for (int n = 1; n <= X.truncation(); ++n) {
      CHECK(X.simplex_count(n) == brute_force_segal_count(X, n));
    }
    CHECK(is_spiny(X));
  }
}

TEST_CASE("subgroup helpers") {
  const auto G = s3();
  const auto P = generated_subgroup(G, {s3_element("(12)")});
  CHECK(P.size() == 2);
  CHECK(is_subgroup(G, P));
  CHECK_FALSE(is_subgroup(G, {G.identity(), s3_element("(12)"), s3_element("(13)")}));
  CHECK(normalizer(G, P).size() == 2);
  CHECK(conjugacy_class(G, P).size() == 3);
  const auto C3 = generated_subgroup(G, {s3_element("(123)")});
  CHECK(C3.size() == 3);
  CHECK(normalizer(G, C3).size() == 6);
  CHECK(conjugacy_class(G, C3).size() == 1);
}

TEST_CASE("transporter groupoids") {
  const auto C2 = GroupTable::cyclic(2);
  auto X = transporter_groupoid({C2, {{0, 1}}});
  CHECK(X.edges().num_objects() == 1);
  CHECK(dimension(X) == 1);

  const auto sylow = s3_sylow2_class();
  X = transporter_groupoid(sylow);
  CHECK(X.edges().num_objects() == 3);
  CHECK(dimension(X) == 5);
  CHECK(transporter_dimension_formula(sylow) == 5);
  CHECK(brute_force_dimension(X) == 5);
  const auto& E = X.edges();
  for (ObjectId a = 0; a < 3; ++a) {
    for (ObjectId b = 0; b < 3; ++b) {
      int hom = 0;
      for (EdgeId f = 0; f < E.num_edges(); ++f) hom += E.dom(f) == a && E.cod(f) == b;
      CHECK(hom == 2);
    }
  }

  const auto normal = s3_normal_c3();
  X = transporter_groupoid(normal);
  CHECK(X.edges().num_objects() == 1);
  CHECK(dimension(X) == 5);
  CHECK(transporter_dimension_formula(normal) == 5);
}

TEST_CASE("transporter closes the collection under conjugation") {
  const auto G = s3();
  const TransporterSpec partial{G, {generated_subgroup(G, {s3_element("(12)")})}};
  const auto closed = close_under_conjugation(partial);
  CHECK(closed.spec.delta.size() == 3);
  CHECK(closed.added.size() == 2);
  CHECK(transporter_groupoid(partial) == transporter_groupoid(closed.spec));
  CHECK_THROWS_AS(transporter_groupoid(partial, true), Error);
  CHECK_THROWS_AS(transporter_groupoid({G, {{G.identity(), s3_element("(12)"), s3_element("(13)")}}}),
                  InvalidInput);
}

TEST_CASE("products") {
  const auto c2 = nerve_of_group(GroupTable::cyclic(2));
  const auto unit = product(c2, point());
  CHECK(are_isomorphic(unit, c2));
  CHECK(dimension(unit) == 1);
  for (const auto& pc : product_cases()) {
    if (pc.a.truncation() * pc.b.truncation() > 2) continue;
    INFO(pc.name);
    const auto X = product(pc.a, pc.b);
    const int n = dimension(pc.a);
    const int m = dimension(pc.b);
    CHECK(X.truncation() == (pc.a.truncation() + 1) * (pc.b.truncation() + 1) - 1);
    CHECK(dimension(X) == n * m + n + m);
    CHECK(validate(X).ok());
    CHECK(is_spiny(X));
  }
}

TEST_CASE("product of groups is the nerve of the product group") {
  const auto a = GroupTable::cyclic(2);
  const auto X = product(nerve_of_group(a), nerve_of_group(a));
  CHECK(are_isomorphic(X, nerve_of_group(GroupTable::klein_four())));
  CHECK(is_group(X));
}

TEST_CASE("wedges") {
  const auto c2 = nerve_of_group(GroupTable::cyclic(2));
  const auto c3 = nerve_of_group(GroupTable::cyclic(3));
  const auto f1 = free_partial_group(1);
  CHECK(are_isomorphic(wedge(c3, point()), c3));
  auto w = wedge(c2, c2);
  CHECK(w.edges().num_edges() == 3);
  CHECK(dimension(w) == 1);
  CHECK_FALSE(is_group(w));
  w = wedge(c2, f1);
  CHECK(w.edges().num_edges() == 4);
  CHECK(dimension(w) == 1);
  w = wedge(c3, c2);
  CHECK(w.truncation() == 2);
  CHECK(validate(w).ok());
  CHECK(is_spiny(w));
  CHECK_THROWS_AS(wedge(nerve_of_groupoid(two_copies_c2()), c2), PreconditionViolation);
}

TEST_CASE("free partial groups") {
  const auto f1 = free_partial_group(1);
  CHECK(f1.edges().num_edges() == 3);
  CHECK(dimension(f1) == 1);
  CHECK_FALSE(is_groupoid(f1));
  CHECK(are_isomorphic(free_partial_group(2), wedge(f1, f1)));
  CHECK(free_partial_group(0) == point());
}

TEST_CASE("wedge decomposition") {
  const auto c2 = nerve_of_group(GroupTable::cyclic(2));
  const auto c3 = nerve_of_group(GroupTable::cyclic(3));
  const auto f1 = free_partial_group(1);
  CHECK(wedge_decompose(c3).size() == 1);
  auto parts = wedge_decompose(wedge(c2, c2));
  REQUIRE(parts.size() == 2);
  for (const auto& p : parts) CHECK(are_isomorphic(p, c2));
  parts = wedge_decompose(free_partial_group(2));
  REQUIRE(parts.size() == 2);
  for (const auto& p : parts) CHECK(are_isomorphic(p, f1));

  for (const auto& [a, b] : std::vector<std::pair<TruncatedSymSet, TruncatedSymSet>>{
           {c2, f1}, {c3, c2}, {c3, c3}, {f1, c3}}) {
    const auto w = wedge(a, b);
    parts = wedge_decompose(w);
    REQUIRE(parts.size() == 2);
    const bool straight = are_isomorphic(parts[0], a) && are_isomorphic(parts[1], b);
    const bool swapped = are_isomorphic(parts[0], b) && are_isomorphic(parts[1], a);
    CHECK((straight || swapped));
    CHECK(are_isomorphic(wedge(parts[0], parts[1]), w));
  }
  CHECK_THROWS_AS(wedge_decompose(nerve_of_groupoid(two_copies_c2())), PreconditionViolation);
}
