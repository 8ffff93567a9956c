#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spiny/spine.hpp"
#include "spiny/symset.hpp"

namespace spiny {

/// x = base . surjection with base nondegenerate.
struct EZFactorization {
  SimplexMatrix base;
  FiniteMap surjection;
};

/// True iff some off-diagonal entry of x is an identity. This is the
/// degeneracy criterion for partial groupoids; X is assumed spiny. Throws
/// PreconditionViolation if x is not in X.
bool is_degenerate(const TruncatedSymSet& X, const SimplexMatrix& x);

/// Degeneracy by definition: searches every noninvertible surjection
/// sigma: [n] ->> [k] for y in W_k with y . sigma = x. Only restricted-growth
/// sigma are tried since relabelling [k] moves y within W_k, and y is forced
/// to be x . delta for the minimal-representative section delta.
bool is_degenerate_oracle(const TruncatedSymSet& X, const SimplexMatrix& x);

/// Eilenberg-Zilber decomposition through the relation "x_ij is an
/// identity". sigma numbers classes by their minimal element and base is the
/// submatrix on those minimal elements. Throws InvalidInput when the relation
/// is not transitive or the factorization does not reproduce x (X is then
/// not a partial groupoid).
EZFactorization ez_decompose(const TruncatedSymSet& X, const SimplexMatrix& x);

/// sk_n X at the same truncation: nondegenerate simplices of degree <= n.
/// For n = 0 the nonidentity edges are dropped as well.
TruncatedSymSet skeleton(const TruncatedSymSet& X, int n);

/// Top degree of a nondegenerate simplex. Throws on an empty set.
int dimension(const TruncatedSymSet& X);

struct PInvariant {
  int p = 0;
  /// n_x per object: nonidentity edges with domain x.
  std::vector<int> per_object;
};

PInvariant p_invariant(const TruncatedSymSet& X);

/// Injectivity of the Segal map on W_n for 1 <= n <= min(N, dim X). Degrees
/// above dim X need no check: a q-skeletal set is spiny as soon as it is
/// injective in degrees up to q.
bool is_spiny(const TruncatedSymSet& X);

struct SpineCheckOptions {
  int cap = kDefaultSpineCap;
  /// Check degrees 1..min(N, max_degree); unset means all of 1..N.
  std::optional<int> max_degree;
};

/// Injectivity of spine_eval for every spine of every checked degree.
/// Throws PreconditionViolation if a checked degree exceeds the cap.
bool is_spiny_all_spines(const TruncatedSymSet& X, const SpineCheckOptions& opts = {});

/// lim over the standard spine: composable chains f_1, ..., f_n.
std::vector<ChainTuple> segal_tuples(const TruncatedSymSet& X, int n);
/// lim over the starry spine: tuples of edges with a common domain.
std::vector<ChainTuple> bousfield_tuples(const TruncatedSymSet& X, int n);
/// |segal_tuples(X, n)| without listing them.
std::uint64_t count_segal_tuples(const TruncatedSymSet& X, int n);

struct GroupoidCheck {
  enum class Failure { none, not_spiny, segal_not_surjective, truncation_below_p };
  Failure failure = Failure::none;
  /// Degree of the first Segal failure, when there is one.
  int degree = 0;

  bool groupoid() const { return failure == Failure::none; }
  std::string explanation() const;
};

/// Segal bijectivity in every degree <= N, plus N >= p so that the
/// truncation can carry the whole nerve.
GroupoidCheck check_groupoid(const TruncatedSymSet& X);
bool is_groupoid(const TruncatedSymSet& X);
bool is_group(const TruncatedSymSet& X);

/// gf when exactly one 2-simplex has x_01 = f, x_12 = g; nullopt when none
/// does. Throws PreconditionViolation when cod f != dom g or when two
/// witnesses exist (X not spiny).
std::optional<EdgeId> compose_edges(const TruncatedSymSet& X, EdgeId f, EdgeId g);

/// Objects grouped by zig-zags of edges; classes and their members sorted.
std::vector<std::vector<ObjectId>> connected_components(const TruncatedSymSet& X);
bool is_connected(const TruncatedSymSet& X);

struct AnalysisProfile {
  std::optional<int> dimension;
  int p_invariant = 0;
  std::vector<int> n_x;
  bool spiny = false;
  GroupoidCheck groupoid;
  bool group = false;
  std::vector<std::vector<ObjectId>> components;
  std::vector<std::size_t> nondegenerate_counts;
};

AnalysisProfile analyze(const TruncatedSymSet& X);

}  // namespace spiny
