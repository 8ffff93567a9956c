#include "spiny/enumeration.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "spiny/error.hpp"

namespace spiny {

namespace {

void require_reduced(const TruncatedSymSet& X, const char* what) {
  if (!X.is_reduced()) {
    throw PreconditionViolation(std::string(what) + " is defined for partial groups; input has " +
                                std::to_string(X.edges().num_objects()) + " objects");
  }
}

std::vector<std::size_t> member_list(const std::vector<char>& flags) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i]) out.push_back(i);
  }
  return out;
}

SimplexMatrix relabel(const SimplexMatrix& x, const std::vector<EdgeId>& to) {
  std::vector<EdgeId> entries;
  entries.reserve(x.entries().size());
  for (EdgeId f : x.entries()) entries.push_back(to[f]);
  return SimplexMatrix(x.degree(), std::move(entries));
}

}  // namespace

std::vector<SimplexMatrix> nondegenerate_items(const TruncatedSymSet& X) {
  std::vector<SimplexMatrix> out;
  for (int n = 0; n <= X.truncation(); ++n) {
    for (const SimplexMatrix& x : X.nondegenerate(n)) out.push_back(x);
  }
  return out;
}

std::vector<std::vector<std::size_t>> closure_requirements(const TruncatedSymSet& X) {
  const auto items = nondegenerate_items(X);
  std::map<SimplexMatrix, std::size_t> index;
  for (std::size_t i = 0; i < items.size(); ++i) index.emplace(items[i], i);
  std::vector<std::vector<std::size_t>> out(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    const SimplexMatrix& x = items[i];
    const int n = x.degree();
    if (n == 0) continue;
    std::vector<FiniteMap> gens{maps::coface(n, n)};
    for (int j = 0; j < n; ++j) gens.push_back(maps::transposition(n, j, j + 1));
    for (const FiniteMap& g : gens) {
      const SimplexMatrix base = factor_by_rows(x.act(g)).base;
      auto it = index.find(base);
      if (it == index.end()) {
        throw InternalError("image " + base.to_string(X.edges()) + " of " +
                            x.to_string(X.edges()) + " is not a stored simplex");
      }
      if (it->second != i) out[i].push_back(it->second);
    }
    std::sort(out[i].begin(), out[i].end());
    out[i].erase(std::unique(out[i].begin(), out[i].end()), out[i].end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// SymmetricSubset

SymmetricSubset::SymmetricSubset(std::shared_ptr<const TruncatedSymSet> parent,
                                 std::vector<char> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  if (members_.size() != parent_->total_nondegenerate()) {
    throw InvalidInput("membership flags do not match the parent's simplices");
  }
}

std::size_t SymmetricSubset::size() const {
  return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), 1));
}

bool SymmetricSubset::contains(const SimplexMatrix& x) const {
  if (!parent_->contains(x)) return false;
  const SimplexMatrix base = factor_by_rows(x).base;
  const auto items = nondegenerate_items(*parent_);
  const auto it = std::lower_bound(items.begin(), items.end(), base);
  return it != items.end() && *it == base && members_[static_cast<std::size_t>(it - items.begin())];
}

TruncatedSymSet SymmetricSubset::to_symset() const {
  const EdgeStructure& E = parent_->edges();
  const auto items = nondegenerate_items(*parent_);
  std::vector<char> keep_object(E.num_objects(), 0);
  std::vector<char> keep_edge(E.num_edges(), 0);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!members_[i]) continue;
    if (items[i].degree() == 0) keep_object[E.dom(items[i](0, 0))] = 1;
    if (items[i].degree() == 1) keep_edge[items[i](0, 1)] = 1;
  }
  for (ObjectId o = 0; o < E.num_objects(); ++o) {
    if (keep_object[o]) keep_edge[E.ident(o)] = 1;
  }
  std::vector<ObjectId> obj_to(E.num_objects(), 0);
  std::vector<std::string> objects;
  for (ObjectId o = 0; o < E.num_objects(); ++o) {
    if (!keep_object[o]) continue;
    obj_to[o] = static_cast<ObjectId>(objects.size());
    objects.push_back(E.object_name(o));
  }
  std::vector<EdgeId> edge_to(E.num_edges(), 0);
  std::vector<EdgeStructure::Edge> edges;
  for (EdgeId f = 0; f < E.num_edges(); ++f) {
    if (!keep_edge[f]) continue;
    edge_to[f] = static_cast<EdgeId>(edges.size());
    edges.push_back({E.edge_name(f), obj_to[E.dom(f)], obj_to[E.cod(f)], 0});
  }
  for (EdgeId f = 0; f < E.num_edges(); ++f) {
    if (keep_edge[f]) edges[edge_to[f]].inv = edge_to[E.inv(f)];
  }
  std::vector<EdgeId> ids;
  for (ObjectId o = 0; o < E.num_objects(); ++o) {
    if (keep_object[o]) ids.push_back(edge_to[E.ident(o)]);
  }
  std::vector<std::vector<SimplexMatrix>> lists(static_cast<std::size_t>(parent_->truncation()) + 1);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (members_[i] && items[i].degree() >= 2) {
      lists[static_cast<std::size_t>(items[i].degree())].push_back(relabel(items[i], edge_to));
    }
  }
  return TruncatedSymSet(parent_->truncation(),
                         EdgeStructure(std::move(objects), std::move(edges), std::move(ids)),
                         std::move(lists));
}

// ---------------------------------------------------------------------------
// Im-partial subgroups

namespace {

std::vector<std::vector<char>> closed_subsets(const TruncatedSymSet& X) {
  require_reduced(X, "im-partial subgroup enumeration");
  const auto req = closure_requirements(X);
  const std::size_t n = req.size();
  auto close = [&](std::vector<char>& flags, std::size_t start) {
    std::vector<std::size_t> work{start};
    while (!work.empty()) {
      const std::size_t i = work.back();
      work.pop_back();
      if (flags[i]) continue;
      flags[i] = 1;
      for (std::size_t j : req[i]) {
        if (!flags[j]) work.push_back(j);
      }
    }
  };
  std::vector<char> minimal(n, 0);
  close(minimal, 0);  // the object
  std::set<std::vector<char>> seen{minimal};
  std::deque<std::vector<char>> queue{minimal};
  while (!queue.empty()) {
    std::vector<char> cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      if (cur[i]) continue;
      std::vector<char> next = cur;
      close(next, i);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<std::vector<char>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const auto la = member_list(a);
    const auto lb = member_list(b);
    if (la.size() != lb.size()) return la.size() < lb.size();
    return la < lb;
  });
  return out;
}

}  // namespace

std::vector<SymmetricSubset> impartial_subgroups(const TruncatedSymSet& X) {
  auto parent = std::make_shared<const TruncatedSymSet>(X);
  std::vector<SymmetricSubset> out;
  for (auto& flags : closed_subsets(X)) out.emplace_back(parent, std::move(flags));
  return out;
}

std::size_t count_impartial_subgroups(const TruncatedSymSet& X) {
  return closed_subsets(X).size();
}

// ---------------------------------------------------------------------------
// Isomorphism

std::optional<std::vector<EdgeId>> are_isomorphic(const TruncatedSymSet& X,
                                                  const TruncatedSymSet& Y) {
  require_reduced(X, "are_isomorphic");
  require_reduced(Y, "are_isomorphic");
  const EdgeStructure& A = X.edges();
  const EdgeStructure& B = Y.edges();
  if (A.num_edges() != B.num_edges()) return std::nullopt;
  const int top = std::max(X.truncation(), Y.truncation());
  for (int n = 2; n <= top; ++n) {
    if (X.nondegenerate_count(n) != Y.nondegenerate_count(n)) return std::nullopt;
  }
  constexpr EdgeId kUnset = ~EdgeId{0};
  std::vector<EdgeId> phi(A.num_edges(), kUnset);
  std::vector<char> used(B.num_edges(), 0);
  phi[A.ident(0)] = B.ident(0);
  used[B.ident(0)] = 1;

  auto matrices_agree = [&]() {
    for (int n = 2; n <= X.truncation(); ++n) {
      const auto target = Y.nondegenerate(n);
      for (const SimplexMatrix& x : X.nondegenerate(n)) {
        if (!std::binary_search(target.begin(), target.end(), relabel(x, phi))) return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, EdgeId f) -> bool {
    while (f < A.num_edges() && phi[f] != kUnset) ++f;
    if (f == A.num_edges()) return matrices_agree();
    const EdgeId fi = A.inv(f);
    for (EdgeId g = 0; g < B.num_edges(); ++g) {
      if (used[g] || B.is_identity(g)) continue;
      const EdgeId gi = B.inv(g);
      if ((fi == f) != (gi == g)) continue;
      if (fi != f && used[gi]) continue;
      phi[f] = g;
      phi[fi] = gi;
      used[g] = used[gi] = 1;
      if (self(self, f + 1)) return true;
      used[g] = used[gi] = 0;
      phi[f] = phi[fi] = kUnset;
    }
    return false;
  };
  if (rec(rec, 0)) return phi;
  return std::nullopt;
}

std::string iso_class_key(const TruncatedSymSet& X) {
  require_reduced(X, "iso_class_key");
  const EdgeStructure& E = X.edges();
  std::vector<EdgeId> nonid;
  for (EdgeId f = 0; f < E.num_edges(); ++f) {
    if (!E.is_identity(f)) nonid.push_back(f);
  }
  const std::size_t m = nonid.size();
  std::vector<EdgeId> perm(m);
  std::iota(perm.begin(), perm.end(), EdgeId{1});
  int top = 1;
  for (int n = 2; n <= X.truncation(); ++n) {
    if (X.nondegenerate_count(n) > 0) top = n;
  }

  std::vector<EdgeId> best;
  std::vector<EdgeId> to(E.num_edges(), 0);
  std::vector<EdgeId> code;
  std::vector<SimplexMatrix> level;
  do {
    for (std::size_t i = 0; i < m; ++i) to[nonid[i]] = perm[i];
    code.assign(1, static_cast<EdgeId>(m));
    std::vector<EdgeId> inv_of(m + 1, 0);
    for (std::size_t i = 0; i < m; ++i) inv_of[perm[i]] = to[E.inv(nonid[i])];
    code.insert(code.end(), inv_of.begin() + 1, inv_of.end());
    for (int n = 2; n <= top; ++n) {
      level.clear();
      for (const SimplexMatrix& x : X.nondegenerate(n)) level.push_back(relabel(x, to));
      std::sort(level.begin(), level.end());
      code.push_back(static_cast<EdgeId>(level.size()));
      for (const auto& x : level) code.insert(code.end(), x.entries().begin(), x.entries().end());
    }
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::string out = "e" + std::to_string(m) + ";inv";
  std::size_t pos = 1;
  for (std::size_t i = 0; i < m; ++i) out += (i ? "," : ":") + std::to_string(best[pos++]);
  for (int n = 2; n <= top; ++n) {
    const std::size_t count = best[pos++];
    const std::size_t width = static_cast<std::size_t>((n + 1) * (n + 1));
    out += ";" + std::to_string(n) + ":";
    for (std::size_t c = 0; c < count; ++c) {
      out += c ? "/" : "";
      for (std::size_t t = 0; t < width; ++t) out += (t ? "," : "") + std::to_string(best[pos++]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration of partial groups

namespace {

class PartialGroupSearch {
 public:
  PartialGroupSearch(int k, std::vector<EdgeId> inv) : m_(k - 1) {
    std::vector<EdgeStructure::Edge> edges{{EdgeStructure::identity_name("*"), 0, 0, 0}};
    for (int i = 1; i <= m_; ++i) {
      edges.push_back({"x" + std::to_string(i), 0, 0, inv[static_cast<std::size_t>(i)]});
    }
    E_ = EdgeStructure({"*"}, std::move(edges), {0});
    lists_.resize(static_cast<std::size_t>(m_) + 1);
  }

  void run(std::map<std::string, TruncatedSymSet>& found) {
    found_ = &found;
    extend(2);
  }

 private:
  TruncatedSymSet current() const { return TruncatedSymSet(m_, E_, lists_); }

  void record() {
    TruncatedSymSet X = current();
    found_->try_emplace(iso_class_key(X), std::move(X));
  }

  // Matrices of degree n with nonidentity off-diagonal entries whose faces
  // are all stored simplices of degree n - 1.
  std::vector<SimplexMatrix> candidates(int n) const {
    std::vector<SimplexMatrix> out;
    const auto& lower = lists_[static_cast<std::size_t>(n - 1)];
    std::vector<SimplexMatrix> faces;
    if (n == 2) {
      for (EdgeId f = 1; f <= static_cast<EdgeId>(m_); ++f) faces.push_back(SimplexMatrix::of_edge(E_, f));
    } else {
      faces = lower;
    }
    const int size = n + 1;
    for (const SimplexMatrix& face : faces) {
      std::vector<EdgeId> col(static_cast<std::size_t>(n), 1);
      while (true) {
        std::vector<EdgeId> entries(static_cast<std::size_t>(size * size), 0);
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            entries[static_cast<std::size_t>(i * size + j)] = face(i, j);
          }
          entries[static_cast<std::size_t>(i * size + n)] = col[static_cast<std::size_t>(i)];
          entries[static_cast<std::size_t>(n * size + i)] = E_.inv(col[static_cast<std::size_t>(i)]);
        }
        SimplexMatrix x(n, std::move(entries));
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
          const SimplexMatrix d = x.act(maps::coface(n, i));
          ok = n == 2 ? !E_.is_identity(d(0, 1)) : std::binary_search(lower.begin(), lower.end(), d);
        }
        if (ok) out.push_back(std::move(x));
        int pos = 0;
        while (pos < n && col[static_cast<std::size_t>(pos)] == static_cast<EdgeId>(m_)) {
          col[static_cast<std::size_t>(pos++)] = 1;
        }
        if (pos == n) break;
        ++col[static_cast<std::size_t>(pos)];
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void extend(int n) {
    if (n > m_ || (n > 2 && lists_[static_cast<std::size_t>(n - 1)].empty())) {
      record();
      return;
    }
    const auto cands = candidates(n);
    std::set<std::vector<EdgeId>> blocked;
    current().for_each_simplex(n, [&](const SimplexMatrix& x) { blocked.insert(x.superdiagonal()); });

    const auto perms = all_permutations(n);
    std::set<SimplexMatrix> assigned;
    std::vector<std::vector<SimplexMatrix>> orbits;
    for (const SimplexMatrix& x : cands) {
      if (assigned.contains(x)) continue;
      std::set<SimplexMatrix> orbit;
      for (const FiniteMap& p : perms) orbit.insert(x.act(p));
      assigned.insert(orbit.begin(), orbit.end());
      std::set<std::vector<EdgeId>> spines;
      bool usable = true;
      for (const SimplexMatrix& y : orbit) {
        const auto s = y.superdiagonal();
        usable = usable && !blocked.contains(s) && spines.insert(s).second;
      }
      if (usable) orbits.emplace_back(orbit.begin(), orbit.end());
    }

    std::set<std::vector<EdgeId>> taken;
    auto choose = [&](auto&& self, std::size_t i) -> void {
      if (i == orbits.size()) {
        auto& level = lists_[static_cast<std::size_t>(n)];
        const auto saved = level;
        std::sort(level.begin(), level.end());
        extend(n + 1);
        level = saved;
        return;
      }
      self(self, i + 1);
      for (const SimplexMatrix& y : orbits[i]) {
        if (taken.contains(y.superdiagonal())) return;
      }
      auto& level = lists_[static_cast<std::size_t>(n)];
      const std::size_t mark = level.size();
      for (const SimplexMatrix& y : orbits[i]) {
        taken.insert(y.superdiagonal());
        level.push_back(y);
      }
      self(self, i + 1);
      for (const SimplexMatrix& y : orbits[i]) taken.erase(y.superdiagonal());
      level.resize(mark);
    };
    choose(choose, 0);
    lists_[static_cast<std::size_t>(n)].clear();
  }

  int m_;
  EdgeStructure E_;
  std::vector<std::vector<SimplexMatrix>> lists_;
  std::map<std::string, TruncatedSymSet>* found_ = nullptr;
};

void involutions(int m, std::vector<EdgeId>& inv, int i, std::vector<std::vector<EdgeId>>& out) {
  while (i <= m && inv[static_cast<std::size_t>(i)] != 0) ++i;
  if (i > m) {
    out.push_back(inv);
    return;
  }
  for (int j = i; j <= m; ++j) {
    if (inv[static_cast<std::size_t>(j)] != 0) continue;
    inv[static_cast<std::size_t>(i)] = static_cast<EdgeId>(j);
    inv[static_cast<std::size_t>(j)] = static_cast<EdgeId>(i);
    involutions(m, inv, i + 1, out);
    inv[static_cast<std::size_t>(i)] = 0;
    inv[static_cast<std::size_t>(j)] = 0;
  }
}

}  // namespace

std::vector<IsoClass> enumerate_partial_groups(int k, int cap) {
  if (k < 2) throw PreconditionViolation("cardinality must be at least 2, got " + std::to_string(k));
  if (k > cap) {
    throw PreconditionViolation("cardinality " + std::to_string(k) + " exceeds the cap " +
                                std::to_string(cap));
  }
  std::vector<EdgeId> inv(static_cast<std::size_t>(k), 0);
  std::vector<std::vector<EdgeId>> all;
  involutions(k - 1, inv, 1, all);
  std::map<std::string, TruncatedSymSet> found;
  for (const auto& i : all) PartialGroupSearch(k, i).run(found);
  std::vector<IsoClass> out;
  for (auto& [key, rep] : found) out.push_back({key, std::move(rep)});
  return out;
}

}  // namespace spiny
