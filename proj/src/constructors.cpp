#include "spiny/constructors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "spiny/analysis.hpp"
#include "spiny/error.hpp"

namespace spiny {

namespace {

using Perm = std::vector<int>;

std::string cycle_notation(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    for (auto j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = 1;
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

GroupTable permutation_group(int n, const std::vector<Perm>& generators) {
  Perm id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  auto mul = [](const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[static_cast<std::size_t>(b[x])];
    return c;
  };
  std::set<Perm> elems{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& a : frontier) {
      for (const auto& g : generators) {
        Perm c = mul(g, a);
        if (elems.insert(c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Perm> list(elems.begin(), elems.end());  // identity sorts first
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < list.size(); ++i) index[list[i]] = static_cast<int>(i);
  std::vector<std::string> names;
  std::vector<std::vector<int>> table(list.size(), std::vector<int>(list.size()));
  for (std::size_t a = 0; a < list.size(); ++a) {
    names.push_back(cycle_notation(list[a]));
    for (std::size_t b = 0; b < list.size(); ++b) table[a][b] = index.at(mul(list[a], list[b]));
  }
  return GroupTable(std::move(names), std::move(table));
}

std::string subset_name(const GroupTable& G, const std::vector<int>& P) {
  std::string out = "{";
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (i) out += ",";
    out += G.name(P[i]);
  }
  return out + "}";
}

int top_degree(const TruncatedSymSet& X) {
  for (int n = X.truncation(); n >= 0; --n) {
    if (X.nondegenerate_count(n) > 0) return n;
  }
  return -1;
}

void require_reduced(const TruncatedSymSet& X, const char* what) {
  if (!X.is_reduced()) {
    throw PreconditionViolation(std::string(what) + " needs a reduced (one-object) input, got " +
                                std::to_string(X.edges().num_objects()) + " objects");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// GroupTable

GroupTable::GroupTable(std::vector<std::string> elements, std::vector<std::vector<int>> table)
    : elements_(std::move(elements)), table_(std::move(table)) {
  auto bad = violations(elements_, table_);
  if (!bad.empty()) throw InvalidInput("invalid group table: " + bad.front());
  const int n = order();
  for (int e = 0; e < n; ++e) {
    bool is_id = true;
    for (int a = 0; a < n && is_id; ++a) is_id = mul(e, a) == a && mul(a, e) == a;
    if (is_id) {
      identity_ = e;
      break;
    }
  }
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul(a, b) == identity_) inverse_[static_cast<std::size_t>(a)] = b;
    }
  }
}

std::vector<std::string> GroupTable::violations(const std::vector<std::string>& elements,
                                                const std::vector<std::vector<int>>& table) {
  std::vector<std::string> out;
  const auto n = elements.size();
  if (n == 0) return {"a group has at least one element"};
  if (std::set<std::string>(elements.begin(), elements.end()).size() != n) {
    out.push_back("element names are not distinct");
  }
  if (table.size() != n) return {"table has " + std::to_string(table.size()) + " rows, expected " +
                                 std::to_string(n)};
  for (const auto& row : table) {
    if (row.size() != n) return {"table row has the wrong length"};
    for (int v : row) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) return {"table entry out of range"};
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const auto ab = static_cast<std::size_t>(table[a][b]);
        const auto bc = static_cast<std::size_t>(table[b][c]);
        if (table[ab][c] != table[a][bc]) {
          out.push_back("not associative at (" + elements[a] + ", " + elements[b] + ", " +
                        elements[c] + ")");
          return out;
        }
      }
    }
  }
  int identity = -1;
  for (std::size_t e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      ok = table[e][a] == static_cast<int>(a) && table[a][e] == static_cast<int>(a);
    }
    if (ok) identity = static_cast<int>(e);
  }
  if (identity < 0) {
    out.push_back("no identity element");
    return out;
  }
  for (std::size_t a = 0; a < n; ++a) {
    bool has = false;
    for (std::size_t b = 0; b < n && !has; ++b) {
      has = table[a][b] == identity && table[b][a] == identity;
    }
    if (!has) out.push_back("element " + elements[a] + " has no inverse");
  }
  return out;
}

GroupTable GroupTable::cyclic(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    names.push_back(i == 0 ? "e" : i == 1 ? "g" : "g^" + std::to_string(i));
  }
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  }
  return GroupTable(std::move(names), std::move(t));
}

GroupTable GroupTable::klein_four() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = a ^ b;
  }
  return GroupTable({"e", "a", "b", "c"}, std::move(t));
}

GroupTable GroupTable::symmetric(int n) {
  std::vector<Perm> gens;
  if (n >= 2) {
    Perm swap(static_cast<std::size_t>(n));
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    Perm cycle(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
    gens = {swap, cycle};
  }
  return permutation_group(n, gens);
}

GroupTable GroupTable::dihedral(int n) {
  Perm rot(static_cast<std::size_t>(n));
  Perm refl(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rot[static_cast<std::size_t>(i)] = (i + 1) % n;
    refl[static_cast<std::size_t>(i)] = (n - i) % n;
  }
  return permutation_group(n, {rot, refl});
}

GroupTable GroupTable::direct_product(const GroupTable& a, const GroupTable& b) {
  const int n = a.order();
  const int m = b.order();
  std::vector<std::string> names;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n * m),
                                  std::vector<int>(static_cast<std::size_t>(n * m)));
  for (int x = 0; x < n * m; ++x) {
    names.push_back("(" + a.name(x / m) + "," + b.name(x % m) + ")");
    for (int y = 0; y < n * m; ++y) {
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          a.mul(x / m, y / m) * m + b.mul(x % m, y % m);
    }
  }
  return GroupTable(std::move(names), std::move(t));
}

int GroupTable::find(const std::string& name) const {
  for (int i = 0; i < order(); ++i) {
    if (elements_[static_cast<std::size_t>(i)] == name) return i;
  }
  return -1;
}

// ---------------------------------------------------------------------------
// GroupoidPresentation

std::vector<std::string> GroupoidPresentation::violations() const {
  std::vector<std::string> out;
  const int no = static_cast<int>(objects.size());
  const int nm = static_cast<int>(morphisms.size());
  if (static_cast<int>(identities.size()) != no) return {"need one identity per object"};
  for (const auto& m : morphisms) {
    if (m.dom < 0 || m.dom >= no || m.cod < 0 || m.cod >= no) {
      return {"morphism '" + m.name + "' has an unknown endpoint"};
    }
  }
  for (int o = 0; o < no; ++o) {
    const int id = identities[static_cast<std::size_t>(o)];
    if (id < 0 || id >= nm) return {"identity of '" + objects[static_cast<std::size_t>(o)] + "' is unknown"};
    const auto& m = morphisms[static_cast<std::size_t>(id)];
    if (m.dom != o || m.cod != o) {
      return {"identity of '" + objects[static_cast<std::size_t>(o)] + "' is not an endomorphism"};
    }
  }
  if (static_cast<int>(compose.size()) != nm) return {"composition table has the wrong shape"};
  for (const auto& row : compose) {
    if (static_cast<int>(row.size()) != nm) return {"composition table has the wrong shape"};
  }
  auto at = [&](int g, int f) { return compose[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)]; };
  auto mor = [&](int f) -> const Morphism& { return morphisms[static_cast<std::size_t>(f)]; };
  for (int g = 0; g < nm; ++g) {
    for (int f = 0; f < nm; ++f) {
      const int gf = at(g, f);
      const bool composable = mor(f).cod == mor(g).dom;
      if (!composable) {
        if (gf != -1) out.push_back("'" + mor(g).name + "' o '" + mor(f).name + "' is defined but not composable");
        continue;
      }
      if (gf < 0 || gf >= nm) {
        out.push_back("'" + mor(g).name + "' o '" + mor(f).name + "' is missing");
        continue;
      }
      if (mor(gf).dom != mor(f).dom || mor(gf).cod != mor(g).cod) {
        out.push_back("'" + mor(g).name + "' o '" + mor(f).name + "' has the wrong endpoints");
      }
    }
  }
  if (!out.empty()) return out;
  for (int f = 0; f < nm; ++f) {
    const int idd = identities[static_cast<std::size_t>(mor(f).dom)];
    const int idc = identities[static_cast<std::size_t>(mor(f).cod)];
    if (at(f, idd) != f || at(idc, f) != f) out.push_back("identity law fails at '" + mor(f).name + "'");
  }
  for (int h = 0; h < nm; ++h) {
    for (int g = 0; g < nm; ++g) {
      if (at(h, g) < 0) continue;
      for (int f = 0; f < nm; ++f) {
        if (at(g, f) < 0) continue;
        if (at(at(h, g), f) != at(h, at(g, f))) {
          out.push_back("composition not associative at ('" + mor(h).name + "', '" + mor(g).name +
                        "', '" + mor(f).name + "')");
          return out;
        }
      }
    }
  }
  for (int f = 0; f < nm; ++f) {
    bool has = false;
    for (int g = 0; g < nm && !has; ++g) {
      has = at(g, f) == identities[static_cast<std::size_t>(mor(f).dom)] &&
            at(f, g) == identities[static_cast<std::size_t>(mor(f).cod)];
    }
    if (!has) out.push_back("morphism '" + mor(f).name + "' is not invertible");
  }
  return out;
}

int GroupoidPresentation::inverse(int f) const {
  const auto& m = morphisms[static_cast<std::size_t>(f)];
  for (int g = 0; g < static_cast<int>(morphisms.size()); ++g) {
    if (compose[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] ==
        identities[static_cast<std::size_t>(m.dom)]) {
      return g;
    }
  }
  throw PreconditionViolation("morphism '" + m.name + "' has no inverse");
}

GroupoidPresentation groupoid_of_group(const GroupTable& G) {
  GroupoidPresentation P;
  P.objects = {"*"};
  for (int g = 0; g < G.order(); ++g) P.morphisms.push_back({G.name(g), 0, 0});
  P.identities = {G.identity()};
  P.compose.assign(static_cast<std::size_t>(G.order()), std::vector<int>(static_cast<std::size_t>(G.order())));
  for (int g = 0; g < G.order(); ++g) {
    for (int f = 0; f < G.order(); ++f) {
      P.compose[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] = G.mul(g, f);
    }
  }
  return P;
}

TruncatedSymSet nerve_of_group(const GroupTable& G) {
  return nerve_of_groupoid(groupoid_of_group(G));
}

TruncatedSymSet nerve_of_groupoid(const GroupoidPresentation& P) {
  auto bad = P.violations();
  if (!bad.empty()) throw InvalidInput("invalid groupoid presentation: " + bad.front());

  const int nm = static_cast<int>(P.morphisms.size());
  std::vector<int> inverse(static_cast<std::size_t>(nm));
  for (int f = 0; f < nm; ++f) inverse[static_cast<std::size_t>(f)] = P.inverse(f);
  std::vector<char> is_id(static_cast<std::size_t>(nm), 0);
  for (int id : P.identities) is_id[static_cast<std::size_t>(id)] = 1;

  std::vector<EdgeStructure::Edge> edges;
  for (int f = 0; f < nm; ++f) {
    const auto& m = P.morphisms[static_cast<std::size_t>(f)];
    std::string name = is_id[static_cast<std::size_t>(f)]
                           ? EdgeStructure::identity_name(P.objects[static_cast<std::size_t>(m.dom)])
                           : m.name;
    edges.push_back({std::move(name), static_cast<ObjectId>(m.dom), static_cast<ObjectId>(m.cod),
                     static_cast<EdgeId>(inverse[static_cast<std::size_t>(f)])});
  }
  std::vector<EdgeId> ids(P.identities.begin(), P.identities.end());
  EdgeStructure E(P.objects, std::move(edges), std::move(ids));

  int p = 0;
  for (ObjectId o = 0; o < E.num_objects(); ++o) {
    p = std::max(p, static_cast<int>(E.outgoing(o).size()) - 1);
  }
  const int N = std::max(1, p);

  auto comp = [&](int g, int f) {
    return P.compose[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
  };
  std::vector<std::vector<SimplexMatrix>> lists(static_cast<std::size_t>(N) + 1);
  for (ObjectId a = 0; a < E.num_objects(); ++a) {
    std::vector<int> out;
    for (EdgeId f : E.outgoing(a)) {
      if (!E.is_identity(f)) out.push_back(static_cast<int>(f));
    }
    std::vector<int> chosen{static_cast<int>(E.ident(a))};
    std::vector<char> used(out.size(), 0);
    auto emit = [&]() {
      const int m = static_cast<int>(chosen.size()) - 1;
      std::vector<EdgeId> entries;
      entries.reserve(chosen.size() * chosen.size());
      for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= m; ++j) {
          entries.push_back(static_cast<EdgeId>(
              comp(chosen[static_cast<std::size_t>(j)], inverse[static_cast<std::size_t>(chosen[static_cast<std::size_t>(i)])])));
        }
      }
      lists[static_cast<std::size_t>(m)].emplace_back(m, std::move(entries));
    };
    auto rec = [&](auto&& self) -> void {
      if (chosen.size() >= 3) emit();
      if (static_cast<int>(chosen.size()) > N) return;
      for (std::size_t k = 0; k < out.size(); ++k) {
        if (used[k]) continue;
        used[k] = 1;
        chosen.push_back(out[k]);
        self(self);
        chosen.pop_back();
        used[k] = 0;
      }
    };
    rec(rec);
  }
  return TruncatedSymSet(N, std::move(E), std::move(lists));
}

// ---------------------------------------------------------------------------
// Transporter groupoids

bool is_subgroup(const GroupTable& G, const std::vector<int>& subset) {
  if (subset.empty()) return false;
  std::set<int> s(subset.begin(), subset.end());
  if (!s.contains(G.identity())) return false;
  for (int a : s) {
    if (!s.contains(G.inv(a))) return false;
    for (int b : s) {
      if (!s.contains(G.mul(a, b))) return false;
    }
  }
  return true;
}

std::vector<int> conjugate(const GroupTable& G, int g, const std::vector<int>& P) {
  std::vector<int> out;
  for (int x : P) out.push_back(G.mul(G.mul(g, x), G.inv(g)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> normalizer(const GroupTable& G, const std::vector<int>& P) {
  std::vector<int> sorted(P);
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  for (int g = 0; g < G.order(); ++g) {
    if (conjugate(G, g, sorted) == sorted) out.push_back(g);
  }
  return out;
}

std::vector<std::vector<int>> conjugacy_class(const GroupTable& G, const std::vector<int>& P) {
  std::set<std::vector<int>> cls;
  for (int g = 0; g < G.order(); ++g) cls.insert(conjugate(G, g, P));
  return {cls.begin(), cls.end()};
}

std::vector<int> generated_subgroup(const GroupTable& G, const std::vector<int>& gens) {
  std::set<int> s{G.identity()};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(s.begin(), s.end());
    for (int a : cur) {
      for (int g : gens) grew |= s.insert(G.mul(a, g)).second;
    }
  }
  return {s.begin(), s.end()};
}

ConjugationClosure close_under_conjugation(const TransporterSpec& spec) {
  const GroupTable& G = spec.group;
  std::set<std::vector<int>> members;
  for (auto P : spec.delta) {
    std::sort(P.begin(), P.end());
    P.erase(std::unique(P.begin(), P.end()), P.end());
    for (int x : P) {
      if (x < 0 || x >= G.order()) throw InvalidInput("delta member has an element index out of range");
    }
    if (!is_subgroup(G, P)) {
      throw InvalidInput("delta member " + subset_name(G, P) + " is not a subgroup");
    }
    members.insert(P);
  }
  ConjugationClosure out{spec, {}};
  std::vector<std::vector<int>> frontier(members.begin(), members.end());
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    for (int g = 0; g < G.order(); ++g) {
      auto Q = conjugate(G, g, frontier[i]);
      if (members.insert(Q).second) {
        out.added.push_back(Q);
        frontier.push_back(Q);
      }
    }
  }
  out.spec.delta.assign(members.begin(), members.end());
  return out;
}

GroupoidPresentation transporter_presentation(const TransporterSpec& spec, bool strict) {
  auto closed = close_under_conjugation(spec);
  if (strict && !closed.added.empty()) {
    throw InvalidInput("delta is not closed under conjugation: missing " +
                       subset_name(spec.group, closed.added.front()));
  }
  const GroupTable& G = closed.spec.group;
  const auto& delta = closed.spec.delta;
  const int n = G.order();
  GroupoidPresentation P;
  std::map<std::vector<int>, int> object_of;
  for (std::size_t i = 0; i < delta.size(); ++i) {
    P.objects.push_back(subset_name(G, delta[i]));
    object_of[delta[i]] = static_cast<int>(i);
  }
  // Morphism (g, P) has index P * |G| + g.
  for (std::size_t o = 0; o < delta.size(); ++o) {
    for (int g = 0; g < n; ++g) {
      const int q = object_of.at(conjugate(G, g, delta[o]));
      std::string name = G.name(g) + ":" + P.objects[o] + "->" + P.objects[static_cast<std::size_t>(q)];
      P.morphisms.push_back({std::move(name), static_cast<int>(o), q});
    }
    P.identities.push_back(static_cast<int>(o) * n + G.identity());
  }
  const auto nm = P.morphisms.size();
  P.compose.assign(nm, std::vector<int>(nm, -1));
  for (std::size_t f = 0; f < nm; ++f) {
    for (std::size_t g = 0; g < nm; ++g) {
      if (P.morphisms[f].cod != P.morphisms[g].dom) continue;
      const int gf = G.mul(static_cast<int>(g) % n, static_cast<int>(f) % n);
      P.compose[g][f] = P.morphisms[f].dom * n + gf;
    }
  }
  return P;
}

TruncatedSymSet transporter_groupoid(const TransporterSpec& spec, bool strict) {
  return nerve_of_groupoid(transporter_presentation(spec, strict));
}

int transporter_dimension_formula(const TransporterSpec& spec) {
  auto closed = close_under_conjugation(spec).spec;
  int best = 0;
  for (const auto& P : closed.delta) {
    const int value = static_cast<int>(conjugacy_class(closed.group, P).size() *
                                       normalizer(closed.group, P).size());
    best = std::max(best, value);
  }
  return best - 1;
}

// ---------------------------------------------------------------------------
// Products, wedges, free partial groups

TruncatedSymSet point() {
  EdgeStructure E;
  E.add_object("*");
  return TruncatedSymSet(1, std::move(E), {});
}

TruncatedSymSet product(const TruncatedSymSet& X, const TruncatedSymSet& Y) {
  const EdgeStructure& A = X.edges();
  const EdgeStructure& B = Y.edges();
  const auto nb_obj = static_cast<ObjectId>(B.num_objects());
  const auto nb_edge = static_cast<EdgeId>(B.num_edges());

  std::vector<std::string> objects;
  for (ObjectId a = 0; a < A.num_objects(); ++a) {
    for (ObjectId b = 0; b < nb_obj; ++b) {
      objects.push_back("(" + A.object_name(a) + "," + B.object_name(b) + ")");
    }
  }
  std::vector<EdgeStructure::Edge> edges;
  for (EdgeId f = 0; f < A.num_edges(); ++f) {
    for (EdgeId g = 0; g < nb_edge; ++g) {
      const ObjectId dom = A.dom(f) * nb_obj + B.dom(g);
      const ObjectId cod = A.cod(f) * nb_obj + B.cod(g);
      std::string name = A.is_identity(f) && B.is_identity(g)
                             ? EdgeStructure::identity_name(objects[dom])
                             : "(" + A.edge_name(f) + "," + B.edge_name(g) + ")";
      edges.push_back({std::move(name), dom, cod, A.inv(f) * nb_edge + B.inv(g)});
    }
  }
  std::vector<EdgeId> ids;
  for (ObjectId a = 0; a < A.num_objects(); ++a) {
    for (ObjectId b = 0; b < nb_obj; ++b) ids.push_back(A.ident(a) * nb_edge + B.ident(b));
  }
  EdgeStructure E(std::move(objects), std::move(edges), std::move(ids));

  const int N = (X.truncation() + 1) * (Y.truncation() + 1) - 1;
  const int top_x = top_degree(X);
  const int top_y = top_degree(Y);
  std::vector<std::vector<SimplexMatrix>> lists(static_cast<std::size_t>(N) + 1);
  const int reach = (top_x + 1) * (top_y + 1) - 1;
  for (int m = 2; m <= std::min(N, reach); ++m) {
    // A pair (y . sigma, z . tau) has distinct rows iff no i != j is merged by
    // both sigma and tau.
    std::vector<FiniteMap> sigmas;
    std::vector<FiniteMap> taus;
    for (int k = 0; k <= std::min(m, top_x); ++k) {
      if (X.nondegenerate_count(k) == 0) continue;
      for (auto& s : canonical_surjections(m, k)) sigmas.push_back(std::move(s));
    }
    for (int l = 0; l <= std::min(m, top_y); ++l) {
      if (Y.nondegenerate_count(l) == 0) continue;
      for (auto& t : canonical_surjections(m, l)) taus.push_back(std::move(t));
    }
    auto& out = lists[static_cast<std::size_t>(m)];
    for (const FiniteMap& sigma : sigmas) {
      for (const FiniteMap& tau : taus) {
        if ((sigma.target_degree() + 1) * (tau.target_degree() + 1) < m + 1) continue;
        bool joint = true;
        for (int i = 0; i <= m && joint; ++i) {
          for (int j = i + 1; j <= m && joint; ++j) {
            joint = !(sigma(i) == sigma(j) && tau(i) == tau(j));
          }
        }
        if (!joint) continue;
        for (const SimplexMatrix& y : X.nondegenerate(sigma.target_degree())) {
          const SimplexMatrix u = y.act(sigma);
          for (const SimplexMatrix& z : Y.nondegenerate(tau.target_degree())) {
            const SimplexMatrix v = z.act(tau);
            std::vector<EdgeId> entries(u.entries().size());
            for (std::size_t t = 0; t < entries.size(); ++t) {
              entries[t] = u.entries()[t] * nb_edge + v.entries()[t];
            }
            out.emplace_back(m, std::move(entries));
          }
        }
      }
    }
  }
  return TruncatedSymSet(N, std::move(E), std::move(lists));
}

TruncatedSymSet wedge(const TruncatedSymSet& A, const TruncatedSymSet& B) {
  require_reduced(A, "wedge");
  require_reduced(B, "wedge");
  EdgeStructure E;
  E.add_object("*");
  std::vector<EdgeId> map_a(A.edges().num_edges(), 0);
  std::vector<EdgeId> map_b(B.edges().num_edges(), 0);

  // Nonidentity edges keep their relative order; inverses are patched after.
  std::vector<EdgeStructure::Edge> edges{E.edge(0)};
  auto take = [&](const EdgeStructure& S, std::vector<EdgeId>& to, const std::string& prefix) {
    for (EdgeId f = 0; f < S.num_edges(); ++f) {
      if (S.is_identity(f)) continue;
      to[f] = static_cast<EdgeId>(edges.size());
      edges.push_back({prefix + S.edge_name(f), 0, 0, 0});
    }
    for (EdgeId f = 0; f < S.num_edges(); ++f) {
      if (!S.is_identity(f)) edges[to[f]].inv = to[S.inv(f)];
    }
  };
  take(A.edges(), map_a, "a.");
  take(B.edges(), map_b, "b.");
  EdgeStructure W({"*"}, std::move(edges), {0});

  const int N = std::max(A.truncation(), B.truncation());
  std::vector<std::vector<SimplexMatrix>> lists(static_cast<std::size_t>(N) + 1);
  auto copy = [&](const TruncatedSymSet& S, const std::vector<EdgeId>& to) {
    for (int n = 2; n <= S.truncation(); ++n) {
      for (const SimplexMatrix& x : S.nondegenerate(n)) {
        std::vector<EdgeId> entries;
        for (EdgeId f : x.entries()) entries.push_back(to[f]);
        lists[static_cast<std::size_t>(n)].emplace_back(n, std::move(entries));
      }
    }
  };
  copy(A, map_a);
  copy(B, map_b);
  TruncatedSymSet out(N, std::move(W), std::move(lists));
  auto report = validate(out);
  if (!report.ok()) throw InternalError("wedge produced an invalid set: " + report.violations.front().message);
  if (!is_spiny(out)) throw InternalError("wedge produced a set that is not spiny");
  return out;
}

TruncatedSymSet free_partial_group(int k) {
  if (k < 0) throw PreconditionViolation("free partial group needs k >= 0");
  if (k == 0) return point();
  EdgeStructure E;
  const ObjectId o = E.add_object("*");
  for (int i = 1; i <= k; ++i) {
    E.add_edge_pair("g" + std::to_string(i), "g" + std::to_string(i) + "^-1", o, o);
  }
  return TruncatedSymSet(1, std::move(E), {});
}

std::vector<TruncatedSymSet> wedge_decompose(const TruncatedSymSet& X) {
  require_reduced(X, "wedge_decompose");
  const EdgeStructure& E = X.edges();
  std::vector<EdgeId> parent(E.num_edges());
  std::iota(parent.begin(), parent.end(), EdgeId{0});
  auto find = [&](EdgeId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto join = [&](EdgeId a, EdgeId b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (EdgeId f = 0; f < E.num_edges(); ++f) {
    if (!E.is_identity(f)) join(f, E.inv(f));
  }
  for (int n = 2; n <= X.truncation(); ++n) {
    for (const SimplexMatrix& x : X.nondegenerate(n)) {
      std::optional<EdgeId> first;
      for (EdgeId f : x.entries()) {
        if (E.is_identity(f)) continue;
        if (first) join(*first, f);
        else first = f;
      }
    }
  }
  std::map<EdgeId, std::vector<EdgeId>> classes;
  for (EdgeId f = 0; f < E.num_edges(); ++f) {
    if (!E.is_identity(f)) classes[find(f)].push_back(f);
  }
  std::vector<TruncatedSymSet> out;
  for (const auto& [root, members] : classes) {
    std::vector<EdgeId> to(E.num_edges(), 0);
    std::vector<EdgeStructure::Edge> edges{{E.edge_name(E.ident(0)), 0, 0, 0}};
    for (EdgeId f : members) {
      to[f] = static_cast<EdgeId>(edges.size());
      edges.push_back({E.edge_name(f), 0, 0, 0});
    }
    for (EdgeId f : members) edges[to[f]].inv = to[E.inv(f)];
    std::vector<std::vector<SimplexMatrix>> lists(static_cast<std::size_t>(X.truncation()) + 1);
    for (int n = 2; n <= X.truncation(); ++n) {
      for (const SimplexMatrix& x : X.nondegenerate(n)) {
        const EdgeId probe = x(0, 1);  // nondegenerate: off-diagonal entries are nonidentity
        if (E.is_identity(probe) || find(probe) != root) continue;
        std::vector<EdgeId> entries;
        for (EdgeId f : x.entries()) entries.push_back(E.is_identity(f) ? 0 : to[f]);
        lists[static_cast<std::size_t>(n)].emplace_back(n, std::move(entries));
      }
    }
    out.emplace_back(X.truncation(), EdgeStructure({E.object_name(0)}, std::move(edges), {0}),
                     std::move(lists));
  }
  return out;
}

}  // namespace spiny
