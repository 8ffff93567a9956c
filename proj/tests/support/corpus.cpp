#include "corpus.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>

namespace spiny::testing {

namespace {

// G x (codiscrete groupoid on r objects): morphisms (g, i, j).
GroupoidPresentation codiscrete_times(const GroupTable& G, int r) {
  GroupoidPresentation P;
  const int n = G.order();
  for (int i = 0; i < r; ++i) P.objects.push_back("o" + std::to_string(i));
  auto index = [&](int g, int i, int j) { return (i * r + j) * n + g; };
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      for (int g = 0; g < n; ++g) {
        P.morphisms.push_back({G.name(g) + ":" + P.objects[static_cast<std::size_t>(i)] + "->" +
                                   P.objects[static_cast<std::size_t>(j)],
                               i, j});
      }
    }
  }
  for (int i = 0; i < r; ++i) P.identities.push_back(index(G.identity(), i, i));
  const auto nm = P.morphisms.size();
  P.compose.assign(nm, std::vector<int>(nm, -1));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      for (int k = 0; k < r; ++k) {
        for (int g = 0; g < n; ++g) {
          for (int h = 0; h < n; ++h) {
            P.compose[static_cast<std::size_t>(index(h, j, k))][static_cast<std::size_t>(index(g, i, j))] =
                index(G.mul(h, g), i, k);
          }
        }
      }
    }
  }
  return P;
}

std::vector<std::vector<char>> closed_patterns(const std::vector<std::vector<std::size_t>>& needs) {
  const std::size_t n = needs.size();
  std::vector<std::vector<char>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i) {
      if (!((mask >> i) & 1)) continue;
      for (std::size_t j : needs[i]) {
        if (!((mask >> j) & 1)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::vector<char> flags(n, 0);
    for (std::size_t i = 0; i < n; ++i) flags[i] = static_cast<char>((mask >> i) & 1);
    out.push_back(std::move(flags));
  }
  return out;
}

}  // namespace

std::vector<std::pair<std::string, GroupTable>> small_groups() {
  return {{"C1", GroupTable::cyclic(1)}, {"C2", GroupTable::cyclic(2)},
          {"C3", GroupTable::cyclic(3)}, {"C4", GroupTable::cyclic(4)},
          {"V4", GroupTable::klein_four()}, {"C5", GroupTable::cyclic(5)},
          {"S3", GroupTable::symmetric(3)}, {"C6", GroupTable::cyclic(6)},
          {"D4", GroupTable::dihedral(4)}};
}

GroupTable s3() { return GroupTable::symmetric(3); }

int s3_element(const std::string& cycle) { return s3().find(cycle); }

TransporterSpec s3_sylow2_class() {
  const GroupTable G = s3();
  return {G, conjugacy_class(G, generated_subgroup(G, {G.find("(12)")}))};
}

TransporterSpec s3_normal_c3() {
  const GroupTable G = s3();
  return {G, {generated_subgroup(G, {G.find("(123)")})}};
}

GroupoidPresentation contractible_pair() { return codiscrete_times(GroupTable::cyclic(1), 2); }

GroupoidPresentation c2_times_pair() { return codiscrete_times(GroupTable::cyclic(2), 2); }

GroupoidPresentation two_copies_c2() {
  GroupoidPresentation P;
  P.objects = {"a", "b"};
  P.morphisms = {{"1a", 0, 0}, {"ta", 0, 0}, {"1b", 1, 1}, {"tb", 1, 1}};
  P.identities = {0, 2};
  P.compose.assign(4, std::vector<int>(4, -1));
  for (int base : {0, 2}) {
    for (int g = 0; g < 2; ++g) {
      for (int f = 0; f < 2; ++f) {
        P.compose[static_cast<std::size_t>(base + g)][static_cast<std::size_t>(base + f)] = base + (g ^ f);
      }
    }
  }
  return P;
}

std::vector<Instance> corpus(bool with_k4) {
  std::vector<Instance> out;
  for (const auto& [name, G] : small_groups()) {
    out.push_back({"nerve " + name, nerve_of_group(G), G.order() > 6});
  }
  const GroupTable G = s3();
  out.push_back({"transporter S3 sylow-2 class", transporter_groupoid(s3_sylow2_class())});
  out.push_back({"transporter S3 normal C3", transporter_groupoid(s3_normal_c3())});
  out.push_back({"transporter S3 trivial subgroup", transporter_groupoid({G, {{G.identity()}}})});
  out.push_back({"transporter C2 whole group", transporter_groupoid({GroupTable::cyclic(2), {{0, 1}}})});
  out.push_back({"groupoid contractible pair", nerve_of_groupoid(contractible_pair())});
  out.push_back({"groupoid two copies of C2", nerve_of_groupoid(two_copies_c2())});
  out.push_back({"groupoid C2 x pair", nerve_of_groupoid(c2_times_pair())});

  const auto c2 = nerve_of_group(GroupTable::cyclic(2));
  const auto c3 = nerve_of_group(GroupTable::cyclic(3));
  const auto f1 = free_partial_group(1);
  out.push_back({"free partial group 1", f1});
  out.push_back({"free partial group 2", free_partial_group(2)});
  out.push_back({"wedge C2 C2", wedge(c2, c2)});
  out.push_back({"wedge C2 free1", wedge(c2, f1)});
  out.push_back({"wedge C3 C2", wedge(c3, c2)});
  out.push_back({"wedge C3 C3", wedge(c3, c3)});
  out.push_back({"wedge free1 free1", wedge(f1, f1)});
  out.push_back({"skeleton 1 of C3", skeleton(c3, 1)});
  out.push_back({"skeleton 2 of C4", skeleton(nerve_of_group(GroupTable::cyclic(4)), 2)});
  out.push_back({"skeleton 2 of V4", skeleton(nerve_of_group(GroupTable::klein_four()), 2)});
  for (int k = 2; k <= (with_k4 ? 4 : 3); ++k) {
    const auto classes = enumerate_partial_groups(k);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      out.push_back({"enumerated k=" + std::to_string(k) + " #" + std::to_string(i),
                     classes[i].representative});
    }
  }
  return out;
}

std::vector<ProductCase> product_cases() {
  const auto c2 = nerve_of_group(GroupTable::cyclic(2));
  const auto c3 = nerve_of_group(GroupTable::cyclic(3));
  const auto f1 = free_partial_group(1);
  return {{"C2 x C2", c2, c2},      {"C2 x free1", c2, f1}, {"free1 x free1", f1, f1},
          {"C2 x C3", c2, c3},      {"free1 x C3", f1, c3}, {"C3 x C2", c3, c2},
          {"C3 x C3", c3, c3}};
}

std::vector<std::vector<std::pair<int, int>>> trees_by_edge_subsets(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<std::vector<std::pair<int, int>>> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    if (std::popcount(mask) != n) continue;
    std::vector<int> parent(static_cast<std::size_t>(n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
      return v;
    };
    bool acyclic = true;
    std::vector<std::pair<int, int>> tree;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if (!((mask >> e) & 1)) continue;
      const int a = find(pairs[e].first);
      const int b = find(pairs[e].second);
      if (a == b) acyclic = false;
      parent[static_cast<std::size_t>(a)] = b;
      tree.push_back(pairs[e]);
    }
    if (acyclic) out.push_back(std::move(tree));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<SimplexMatrix>> explicit_simplices(const TruncatedSymSet& X) {
  const int N = X.truncation();
  std::vector<std::set<SimplexMatrix>> W(static_cast<std::size_t>(N) + 1);
  const EdgeStructure& E = X.edges();
  std::vector<SimplexMatrix> stored;
  for (ObjectId o = 0; o < E.num_objects(); ++o) stored.push_back(SimplexMatrix::of_object(E, o));
  for (EdgeId f = 0; f < E.num_edges(); ++f) stored.push_back(SimplexMatrix::of_edge(E, f));
  for (int n = 2; n <= N; ++n) {
    for (const auto& x : X.nondegenerate(n)) stored.push_back(x);
  }
  for (int m = 0; m <= N; ++m) {
    std::vector<std::vector<FiniteMap>> maps_to(static_cast<std::size_t>(N) + 1);
    for (const SimplexMatrix& y : stored) {
      auto& alphas = maps_to[static_cast<std::size_t>(y.degree())];
      if (alphas.empty()) alphas = all_maps(m, y.degree());
      for (const FiniteMap& a : alphas) W[static_cast<std::size_t>(m)].insert(y.act(a));
    }
  }
  std::vector<std::vector<SimplexMatrix>> out;
  for (auto& level : W) out.emplace_back(level.begin(), level.end());
  return out;
}

bool explicitly_closed(const TruncatedSymSet& X) {
  const auto W = explicit_simplices(X);
  const EdgeStructure& E = X.edges();
  for (int n = 0; n <= X.truncation(); ++n) {
    std::vector<SimplexMatrix> distinct_rows;
    for (const auto& x : W[static_cast<std::size_t>(n)]) {
      if (!x.has_repeated_rows()) distinct_rows.push_back(x);
    }
    std::vector<SimplexMatrix> stored;
    if (n == 0) {
      for (ObjectId o = 0; o < E.num_objects(); ++o) stored.push_back(SimplexMatrix::of_object(E, o));
    } else if (n == 1) {
      for (EdgeId f = 0; f < E.num_edges(); ++f) {
        if (!E.is_identity(f)) stored.push_back(SimplexMatrix::of_edge(E, f));
      }
    } else {
      for (const auto& x : X.nondegenerate(n)) stored.push_back(x);
    }
    std::sort(stored.begin(), stored.end());
    if (stored != distinct_rows) return false;
  }
  return true;
}

std::uint64_t brute_force_segal_count(const TruncatedSymSet& X, int n) {
  const EdgeStructure& E = X.edges();
  const auto ne = E.num_edges();
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= ne;
  std::uint64_t count = 0;
  std::vector<EdgeId> t(static_cast<std::size_t>(n));
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (auto& f : t) {
      f = static_cast<EdgeId>(c % ne);
      c /= ne;
    }
    bool ok = true;
    for (std::size_t i = 1; i < t.size() && ok; ++i) ok = E.cod(t[i - 1]) == E.dom(t[i]);
    if (ok) ++count;
  }
  return count;
}

std::vector<std::vector<char>> brute_force_closed_subsets(const TruncatedSymSet& X) {
  const auto items = nondegenerate_items(X);
  const int N = X.truncation();
  std::vector<std::vector<std::size_t>> needs(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    const SimplexMatrix& x = items[i];
    for (int m = 0; m <= N; ++m) {
      for (const FiniteMap& a : all_maps(m, x.degree())) {
        const SimplexMatrix base = factor_by_rows(x.act(a)).base;
        const auto it = std::find(items.begin(), items.end(), base);
        if (it != items.end()) needs[i].push_back(static_cast<std::size_t>(it - items.begin()));
      }
    }
  }
  return closed_patterns(needs);
}

int brute_force_dimension(const TruncatedSymSet& X) {
  for (int n = X.truncation(); n >= 0; --n) {
    bool found = false;
    X.for_each_simplex(n, [&](const SimplexMatrix& x) { found = found || !x.has_repeated_rows(); });
    if (found) return n;
  }
  return -1;
}

std::vector<TruncatedSymSet> naive_partial_groups(int k) {
  const int m = k - 1;
  const int N = std::max(1, m);
  std::vector<TruncatedSymSet> found;
  // Every involution of {1..m}, as a full map.
  std::vector<std::vector<EdgeId>> involutions;
  std::vector<EdgeId> inv(static_cast<std::size_t>(k));
  std::function<void(int)> rec = [&](int pos) {
    if (pos == k) {
      for (int i = 1; i < k; ++i) {
        if (inv[inv[static_cast<std::size_t>(i)]] != static_cast<EdgeId>(i)) return;
      }
      involutions.push_back(inv);
      return;
    }
    for (int v = 1; v < k; ++v) {
      inv[static_cast<std::size_t>(pos)] = static_cast<EdgeId>(v);
      rec(pos + 1);
    }
  };
  inv[0] = 0;
  rec(1);

  for (const auto& iv : involutions) {
    std::vector<EdgeStructure::Edge> edges{{"id:*", 0, 0, 0}};
    for (int i = 1; i < k; ++i) edges.push_back({"x" + std::to_string(i), 0, 0, iv[static_cast<std::size_t>(i)]});
    EdgeStructure E({"*"}, edges, {0});

    // Orbits of all well-formed distinct-row matrices, degrees 2..N.
    std::vector<std::pair<int, std::vector<SimplexMatrix>>> orbits;
    for (int n = 2; n <= N; ++n) {
      const int size = n + 1;
      std::vector<std::pair<int, int>> upper;
      for (int i = 0; i < size; ++i) {
        for (int j = i + 1; j < size; ++j) upper.emplace_back(i, j);
      }
      std::set<SimplexMatrix> seen;
      std::uint64_t total = 1;
      for (std::size_t u = 0; u < upper.size(); ++u) total *= static_cast<std::uint64_t>(k);
      const auto perms = all_permutations(n);
      for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<EdgeId> entries(static_cast<std::size_t>(size * size), 0);
        std::uint64_t c = code;
        for (auto [i, j] : upper) {
          const auto f = static_cast<EdgeId>(c % static_cast<std::uint64_t>(k));
          c /= static_cast<std::uint64_t>(k);
          entries[static_cast<std::size_t>(i * size + j)] = f;
          entries[static_cast<std::size_t>(j * size + i)] = E.inv(f);
        }
        SimplexMatrix x(n, std::move(entries));
        if (x.has_repeated_rows() || seen.contains(x)) continue;
        std::set<SimplexMatrix> orbit;
        for (const auto& p : perms) orbit.insert(x.act(p));
        seen.insert(orbit.begin(), orbit.end());
        orbits.emplace_back(n, std::vector<SimplexMatrix>(orbit.begin(), orbit.end()));
      }
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << orbits.size()); ++mask) {
      std::vector<std::vector<SimplexMatrix>> lists(static_cast<std::size_t>(N) + 1);
      for (std::size_t o = 0; o < orbits.size(); ++o) {
        if (!((mask >> o) & 1)) continue;
        for (const auto& x : orbits[o].second) lists[static_cast<std::size_t>(orbits[o].first)].push_back(x);
      }
      TruncatedSymSet X(N, E, std::move(lists));
      if (!explicitly_closed(X)) continue;
      if (!is_spiny_all_spines(X)) continue;
      bool fresh = true;
      for (const auto& Y : found) {
        if (are_isomorphic(X, Y)) {
          fresh = false;
          break;
        }
      }
      if (fresh) found.push_back(std::move(X));
    }
  }
  return found;
}

std::vector<Instance> spine_mutants(const std::vector<Instance>& bases, std::size_t limit) {
  std::vector<Instance> out;
  for (const Instance& base : bases) {
    const TruncatedSymSet& X = base.X;
    if (base.heavy || X.truncation() < 2) continue;
    const EdgeStructure& E = X.edges();
    std::size_t from_this = 0;
    for (const SimplexMatrix& x : X.simplices(2)) {
      if (from_this >= 3 || out.size() >= limit) break;
      for (EdgeId c = 0; c < E.num_edges(); ++c) {
        if (c == x(0, 2) || E.dom(c) != E.dom(x(0, 0)) || E.cod(c) != E.dom(x(2, 2))) continue;
        std::vector<EdgeId> entries(x.entries().begin(), x.entries().end());
        entries[2] = c;
        entries[6] = E.inv(c);
        SimplexMatrix y(2, std::move(entries));
        if (!y.violations(E).empty() || X.contains(y)) continue;
        std::vector<SimplexMatrix> gens{y};
        for (int n = 2; n <= X.truncation(); ++n) {
          for (const auto& z : X.nondegenerate(n)) gens.push_back(z);
        }
        out.push_back({base.name + " mutant " + std::to_string(from_this),
                       closure_generate(E, X.truncation(), gens)});
        ++from_this;
        break;
      }
    }
  }
  return out;
}

}  // namespace spiny::testing
