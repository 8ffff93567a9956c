#include "spiny/spine.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "spiny/error.hpp"

namespace spiny {

Spine::Spine(int degree, std::vector<std::pair<int, int>> edges)
    : degree_(degree), edges_(std::move(edges)) {
  if (degree_ < 1) throw InvalidInput("spine degree must be at least 1");
  if (edges_.size() != static_cast<std::size_t>(degree_)) {
    throw InvalidInput("a spine of [" + std::to_string(degree_) + "] has " +
                       std::to_string(degree_) + " edges, got " +
                       std::to_string(edges_.size()));
  }
  std::vector<int> parent(static_cast<std::size_t>(degree_ + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  };
  for (auto& [a, b] : edges_) {
    if (a > b) std::swap(a, b);
    if (a < 0 || b > degree_ || a == b) throw InvalidInput("spine edge out of range");
    const int ra = find(a);
    const int rb = find(b);
    if (ra == rb) throw InvalidInput("spine edges contain a cycle");
    parent[static_cast<std::size_t>(ra)] = rb;
  }
  std::sort(edges_.begin(), edges_.end());
}

Spine Spine::standard(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i) e.emplace_back(i - 1, i);
  return Spine(n, std::move(e));
}

Spine Spine::starry(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i) e.emplace_back(0, i);
  return Spine(n, std::move(e));
}

std::string Spine::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) os << ",";
    os << "{" << edges_[i].first << "," << edges_[i].second << "}";
  }
  os << "}";
  return os.str();
}

bool is_matching(const EdgeStructure& e, const ChainTuple& t) {
  const auto& tree = t.spine.edges();
  if (t.components.size() != tree.size()) return false;
  std::vector<std::optional<ObjectId>> at(static_cast<std::size_t>(t.spine.degree() + 1));
  auto bind = [&](int v, ObjectId o) {
    auto& slot = at[static_cast<std::size_t>(v)];
    if (slot && *slot != o) return false;
    slot = o;
    return true;
  };
  for (std::size_t k = 0; k < tree.size(); ++k) {
    const EdgeId f = t.components[k];
    if (f >= e.num_edges()) return false;
    if (!bind(tree[k].first, e.dom(f)) || !bind(tree[k].second, e.cod(f))) return false;
  }
  return true;
}

namespace {

Spine decode_pruefer(int n, const std::vector<int>& seq) {
  // Trees on n+1 vertices {0..n}; seq has length n-1.
  const int vertices = n + 1;
  std::vector<int> degree(static_cast<std::size_t>(vertices), 1);
  for (int v : seq) ++degree[static_cast<std::size_t>(v)];
  std::vector<std::pair<int, int>> edges;
  for (int v : seq) {
    for (int leaf = 0; leaf < vertices; ++leaf) {
      if (degree[static_cast<std::size_t>(leaf)] == 1) {
        edges.emplace_back(leaf, v);
        --degree[static_cast<std::size_t>(leaf)];
        --degree[static_cast<std::size_t>(v)];
        break;
      }
    }
  }
  int u = -1;
  int w = -1;
  for (int v = 0; v < vertices; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) (u < 0 ? u : w) = v;
  }
  edges.emplace_back(u, w);
  return Spine(n, std::move(edges));
}

}  // namespace

std::vector<Spine> all_spines(int n, int cap) {
  if (n < 1) throw PreconditionViolation("spines need degree at least 1");
  if (n > cap) {
    throw PreconditionViolation("spine enumeration capped at degree " + std::to_string(cap) +
                                ", asked for " + std::to_string(n));
  }
  std::vector<Spine> out;
  std::vector<int> seq(static_cast<std::size_t>(n - 1), 0);
  while (true) {
    out.push_back(decode_pruefer(n, seq));
    int pos = n - 2;
    while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == n) {
      seq[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++seq[static_cast<std::size_t>(pos)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

ChainTuple spine_eval(const TruncatedSymSet& X, const SimplexMatrix& x, const Spine& T) {
  (void)X;
  if (x.degree() != T.degree()) {
    throw InvalidInput("spine of degree " + std::to_string(T.degree()) +
                       " evaluated on a simplex of degree " + std::to_string(x.degree()));
  }
  ChainTuple t{T, {}};
  t.components.reserve(T.edges().size());
  for (auto [i, j] : T.edges()) t.components.push_back(x(i, j));
  return t;
}

std::vector<ChainTuple> limit_tuples(const TruncatedSymSet& X, const Spine& T) {
  const EdgeStructure& E = X.edges();
  const auto& tree = T.edges();
  std::vector<ChainTuple> out;
  ChainTuple cur{T, std::vector<EdgeId>(tree.size())};
  std::vector<std::optional<ObjectId>> at(static_cast<std::size_t>(T.degree() + 1));
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == tree.size()) {
      out.push_back(cur);
      return;
    }
    const auto [i, j] = tree[k];
    for (EdgeId f = 0; f < E.num_edges(); ++f) {
      auto& si = at[static_cast<std::size_t>(i)];
      auto& sj = at[static_cast<std::size_t>(j)];
      if (si && *si != E.dom(f)) continue;
      if (sj && *sj != E.cod(f)) continue;
      const bool set_i = !si;
      const bool set_j = !sj;
      si = E.dom(f);
      sj = E.cod(f);
      cur.components[k] = f;
      self(self, k + 1);
      if (set_i) si.reset();
      if (set_j) sj.reset();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace spiny
