#include "spiny/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spiny/error.hpp"

namespace spiny {

namespace {

void require_member(const TruncatedSymSet& X, const SimplexMatrix& x) {
  if (!X.contains(x)) {
    throw PreconditionViolation("simplex " + x.to_string(X.edges()) + " is not a member");
  }
}

// Injectivity of a tuple-valued function over W_n. Tuples are packed into a
// single integer when they fit, which is the common case.
class CollisionFinder {
 public:
  CollisionFinder(std::size_t num_edges, std::size_t width) : radix_(num_edges) {
    const double bits = std::log2(static_cast<double>(std::max<std::size_t>(num_edges, 2))) *
                        static_cast<double>(width);
    packed_ = bits < 63.0;
  }

  void add(const std::vector<EdgeId>& t) {
    if (packed_) {
      std::uint64_t key = 0;
      for (EdgeId f : t) key = key * radix_ + f;
      keys_.push_back(key);
    } else {
      wide_.push_back(t);
    }
  }

  bool has_collision() {
    if (packed_) {
      std::sort(keys_.begin(), keys_.end());
      return std::adjacent_find(keys_.begin(), keys_.end()) != keys_.end();
    }
    std::sort(wide_.begin(), wide_.end());
    return std::adjacent_find(wide_.begin(), wide_.end()) != wide_.end();
  }

 private:
  std::uint64_t radix_;
  bool packed_ = true;
  std::vector<std::uint64_t> keys_;
  std::vector<std::vector<EdgeId>> wide_;
};

int top_degree(const TruncatedSymSet& X) {
  for (int n = X.truncation(); n >= 0; --n) {
    if (X.nondegenerate_count(n) > 0) return n;
  }
  return -1;
}

bool injective_on(const TruncatedSymSet& X, const Spine& T) {
  CollisionFinder finder(X.edges().num_edges(), T.edges().size());
  std::vector<EdgeId> t(T.edges().size());
  X.for_each_simplex(T.degree(), [&](const SimplexMatrix& x) {
    for (std::size_t k = 0; k < t.size(); ++k) t[k] = x(T.edges()[k].first, T.edges()[k].second);
    finder.add(t);
  });
  return !finder.has_collision();
}

}  // namespace

bool is_degenerate(const TruncatedSymSet& X, const SimplexMatrix& x) {
  require_member(X, x);
  return x.has_offdiagonal_identity(X.edges());
}

bool is_degenerate_oracle(const TruncatedSymSet& X, const SimplexMatrix& x) {
  require_member(X, x);
  const int n = x.degree();
  for (int k = 0; k < n; ++k) {
    for (const FiniteMap& sigma : canonical_surjections(n, k)) {
      std::vector<int> reps(static_cast<std::size_t>(k + 1), -1);
      for (int i = n; i >= 0; --i) reps[static_cast<std::size_t>(sigma(i))] = i;
      SimplexMatrix y = x.act(FiniteMap(n, reps));
      if (X.contains(y) && y.act(sigma) == x) return true;
    }
  }
  return false;
}

EZFactorization ez_decompose(const TruncatedSymSet& X, const SimplexMatrix& x) {
  require_member(X, x);
  const EdgeStructure& E = X.edges();
  const int size = x.size();
  auto related = [&](int i, int j) { return E.is_identity(x(i, j)); };
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      if (!related(i, j)) continue;
      for (int k = 0; k < size; ++k) {
        if (related(j, k) && !related(i, k)) {
          throw InvalidInput("identity relation of " + x.to_string(E) +
                             " is not transitive at (" + std::to_string(i) + "," +
                             std::to_string(j) + "," + std::to_string(k) +
                             "); not a partial groupoid");
        }
      }
    }
  }
  std::vector<int> cls(static_cast<std::size_t>(size), -1);
  std::vector<int> reps;
  for (int i = 0; i < size; ++i) {
    if (cls[static_cast<std::size_t>(i)] >= 0) continue;
    const int c = static_cast<int>(reps.size());
    reps.push_back(i);
    for (int j = i; j < size; ++j) {
      if (related(i, j)) cls[static_cast<std::size_t>(j)] = c;
    }
  }
  FiniteMap sigma(static_cast<int>(reps.size()) - 1, std::move(cls));
  SimplexMatrix base = x.act(FiniteMap(x.degree(), reps));
  if (base.act(sigma) != x) {
    throw InvalidInput("simplex " + x.to_string(E) +
                       " is not determined by its identity pattern; not a partial groupoid");
  }
  return {std::move(base), std::move(sigma)};
}

TruncatedSymSet skeleton(const TruncatedSymSet& X, int n) {
  if (n < 0 || n > X.truncation()) {
    throw PreconditionViolation("skeleton degree " + std::to_string(n) +
                                " outside [0, " + std::to_string(X.truncation()) + "]");
  }
  std::vector<std::vector<SimplexMatrix>> lists(static_cast<std::size_t>(n) + 1);
  for (int k = 2; k <= n; ++k) {
    auto level = X.nondegenerate(k);
    lists[static_cast<std::size_t>(k)].assign(level.begin(), level.end());
  }
  if (n > 0) return TruncatedSymSet(X.truncation(), X.edges(), std::move(lists));

  const EdgeStructure& E = X.edges();
  std::vector<EdgeStructure::Edge> edges;
  std::vector<EdgeId> ids;
  for (ObjectId o = 0; o < E.num_objects(); ++o) {
    const auto id = static_cast<EdgeId>(edges.size());
    edges.push_back({E.edge_name(E.ident(o)), o, o, id});
    ids.push_back(id);
  }
  return TruncatedSymSet(X.truncation(), EdgeStructure(E.object_names(), std::move(edges), ids),
                         {});
}

int dimension(const TruncatedSymSet& X) {
  if (X.empty()) throw PreconditionViolation("dimension of the empty symmetric set");
  return top_degree(X);
}

PInvariant p_invariant(const TruncatedSymSet& X) {
  const EdgeStructure& E = X.edges();
  if (E.num_edges() == 0) throw PreconditionViolation("p-invariant needs a nonempty edge set");
  PInvariant out;
  out.per_object.assign(E.num_objects(), 0);
  for (EdgeId f = 0; f < E.num_edges(); ++f) {
    if (!E.is_identity(f)) ++out.per_object[E.dom(f)];
  }
  out.p = *std::max_element(out.per_object.begin(), out.per_object.end());
  return out;
}

bool is_spiny(const TruncatedSymSet& X) {
  const int top = std::min(X.truncation(), top_degree(X));
  for (int n = 2; n <= top; ++n) {
    if (!injective_on(X, Spine::standard(n))) return false;
  }
  return true;
}

bool is_spiny_all_spines(const TruncatedSymSet& X, const SpineCheckOptions& opts) {
  const int top = std::min(X.truncation(), opts.max_degree.value_or(X.truncation()));
  if (top > opts.cap) {
    throw PreconditionViolation("all-spines check capped at degree " + std::to_string(opts.cap) +
                                ", needs " + std::to_string(top));
  }
  for (int n = 1; n <= top; ++n) {
    for (const Spine& T : all_spines(n, opts.cap)) {
      if (!injective_on(X, T)) return false;
    }
  }
  return true;
}

std::vector<ChainTuple> segal_tuples(const TruncatedSymSet& X, int n) {
  return limit_tuples(X, Spine::standard(n));
}

std::vector<ChainTuple> bousfield_tuples(const TruncatedSymSet& X, int n) {
  return limit_tuples(X, Spine::starry(n));
}

std::uint64_t count_segal_tuples(const TruncatedSymSet& X, int n) {
  const EdgeStructure& E = X.edges();
  std::vector<std::uint64_t> ending(E.num_objects(), 1);
  for (int step = 0; step < n; ++step) {
    std::vector<std::uint64_t> next(E.num_objects(), 0);
    for (EdgeId f = 0; f < E.num_edges(); ++f) next[E.cod(f)] += ending[E.dom(f)];
    ending = std::move(next);
  }
  return std::accumulate(ending.begin(), ending.end(), std::uint64_t{0});
}

std::string GroupoidCheck::explanation() const {
  switch (failure) {
    case Failure::none:
      return "Segal maps bijective and truncation at least p";
    case Failure::not_spiny:
      return "not spiny";
    case Failure::segal_not_surjective:
      return "Segal map not surjective in degree " + std::to_string(degree);
    case Failure::truncation_below_p:
      return "truncation below p";
  }
  return {};
}

GroupoidCheck check_groupoid(const TruncatedSymSet& X) {
  GroupoidCheck out;
  if (!is_spiny(X)) {
    out.failure = GroupoidCheck::Failure::not_spiny;
    return out;
  }
  // Injective by spininess, so bijective iff the counts agree.
  for (int n = 1; n <= X.truncation(); ++n) {
    if (X.simplex_count(n) != count_segal_tuples(X, n)) {
      out.failure = GroupoidCheck::Failure::segal_not_surjective;
      out.degree = n;
      return out;
    }
  }
  if (X.truncation() < p_invariant(X).p) {
    out.failure = GroupoidCheck::Failure::truncation_below_p;
  }
  return out;
}

bool is_groupoid(const TruncatedSymSet& X) { return check_groupoid(X).groupoid(); }

bool is_group(const TruncatedSymSet& X) { return X.is_reduced() && is_groupoid(X); }

std::optional<EdgeId> compose_edges(const TruncatedSymSet& X, EdgeId f, EdgeId g) {
  const EdgeStructure& E = X.edges();
  if (f >= E.num_edges() || g >= E.num_edges()) {
    throw PreconditionViolation("compose_edges: unknown edge");
  }
  if (E.cod(f) != E.dom(g)) {
    throw PreconditionViolation("cannot compose '" + E.edge_name(f) + "' then '" +
                                E.edge_name(g) + "': codomain and domain differ");
  }
  std::optional<EdgeId> found;
  int witnesses = 0;
  X.for_each_simplex(2, [&](const SimplexMatrix& x) {
    if (x(0, 1) == f && x(1, 2) == g) {
      ++witnesses;
      found = x(0, 2);
    }
  });
  if (witnesses > 1) {
    throw PreconditionViolation("not spiny: " + std::to_string(witnesses) +
                                " 2-simplices have superdiagonal ('" + E.edge_name(f) + "', '" +
                                E.edge_name(g) + "')");
  }
  return found;
}

std::vector<std::vector<ObjectId>> connected_components(const TruncatedSymSet& X) {
  const EdgeStructure& E = X.edges();
  std::vector<ObjectId> parent(E.num_objects());
  std::iota(parent.begin(), parent.end(), ObjectId{0});
  auto find = [&](ObjectId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (EdgeId f = 0; f < E.num_edges(); ++f) {
    const ObjectId a = find(E.dom(f));
    const ObjectId b = find(E.cod(f));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<ObjectId>> out;
  std::vector<int> slot(E.num_objects(), -1);
  for (ObjectId o = 0; o < E.num_objects(); ++o) {
    const ObjectId r = find(o);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[r])].push_back(o);
  }
  return out;
}

bool is_connected(const TruncatedSymSet& X) {
  return connected_components(X).size() == 1;
}

AnalysisProfile analyze(const TruncatedSymSet& X) {
  AnalysisProfile out;
  if (!X.empty()) out.dimension = dimension(X);
  const auto p = p_invariant(X);
  out.p_invariant = p.p;
  out.n_x = p.per_object;
  out.spiny = is_spiny(X);
  out.groupoid = check_groupoid(X);
  out.group = X.is_reduced() && out.groupoid.groupoid();
  out.components = connected_components(X);
  for (int n = 0; n <= X.truncation(); ++n) out.nondegenerate_counts.push_back(X.nondegenerate_count(n));
  return out;
}

}  // namespace spiny
