#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "spiny/edge_structure.hpp"
#include "spiny/finite_map.hpp"
#include "spiny/simplex_matrix.hpp"

namespace spiny {

/// A truncated symmetric set in matrix form: a partial groupoid (or a
/// candidate for one) given by its data in degrees 0..N, standing for the
/// N-skeletal symmetric set generated by that data.
///
/// Only nondegenerate matrices are stored. A matrix is degenerate exactly
/// when two of its rows coincide, in which case it is base . sigma for the
/// row factorization, so W_n is recovered as
///
///   W_n = { y . sigma : y nondegenerate of degree k <= n, sigma: [n] ->> [k] }.
///
/// Degree 0 holds the objects as 1x1 matrices and degree 1 the nonidentity
/// edges as 2x2 matrices; both are derived from the edge structure.
/// Construction does not check closure; see validate().
class TruncatedSymSet {
 public:
  /// `nondegenerate[n]` for n >= 2 lists stored matrices of degree n;
  /// entries for n < 2 are ignored. Lists are sorted and deduplicated.
  TruncatedSymSet(int truncation, EdgeStructure edges,
                  std::vector<std::vector<SimplexMatrix>> nondegenerate);

  int truncation() const { return truncation_; }
  const EdgeStructure& edges() const { return edges_; }

  /// Sorted nondegenerate simplices of degree n, 0 <= n <= N.
  std::span<const SimplexMatrix> nondegenerate(int n) const;
  std::size_t nondegenerate_count(int n) const { return nondegenerate(n).size(); }
  std::size_t total_nondegenerate() const;

  /// |W_n|; exact for any n (degeneracies above N are included).
  std::uint64_t simplex_count(int n) const;

  /// Calls f(x) for every x in W_n in no particular order. Degrees above N
  /// are allowed and yield degeneracies only.
  void for_each_simplex(int n, const std::function<void(const SimplexMatrix&)>& f) const;
  /// W_n, sorted.
  std::vector<SimplexMatrix> simplices(int n) const;

  /// Membership in W_n, n the matrix's degree (any n).
  bool contains(const SimplexMatrix& x) const;

  bool is_reduced() const { return edges_.num_objects() == 1; }
  bool empty() const { return edges_.num_objects() == 0; }

  friend bool operator==(const TruncatedSymSet& a, const TruncatedSymSet& b) {
    return a.truncation_ == b.truncation_ && a.edges_ == b.edges_ && a.basis_ == b.basis_;
  }

 private:
  int truncation_;
  EdgeStructure edges_;
  std::vector<std::vector<SimplexMatrix>> basis_;
};

/// x . alpha for x in X. Throws PreconditionViolation when the source degree
/// of alpha exceeds the truncation, InvalidInput on a degree mismatch.
SimplexMatrix apply_map(const TruncatedSymSet& X, const SimplexMatrix& x,
                        const FiniteMap& alpha);

struct Violation {
  enum class Kind { edge_structure, matrix, degenerate_listed, degree, closure };
  Kind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// Checks the edge-structure axioms, matrix well-formedness of every stored
/// simplex, that stored simplices are nondegenerate and within [2, N], and
/// closure of the generated W under every map with degrees <= N.
///
/// Closure is checked on generators: for stored x of degree n, x . d_n and
/// x . (i i+1) must lie in W. Every injection is a permutation followed by
/// iterated last cofaces, and surjections preserve W by construction.
ValidationReport validate(const TruncatedSymSet& X);

/// Literal check of an explicitly listed presheaf: `simplices[n]` is the full
/// set W_n for 2 <= n <= N (degenerate members included); W_0 and W_1 come
/// from `edges`. Closure is checked for every map [m] -> [n] with m, n <= N.
ValidationReport validate_explicit(int truncation, const EdgeStructure& edges,
                                   const std::map<int, std::vector<SimplexMatrix>>& simplices);

/// The smallest truncated symmetric set over E containing `generators` and
/// closed under the action of all maps with degrees <= N, found by
/// saturation. Throws PreconditionViolation for a generator of degree > N and
/// InvalidInput for a malformed generator.
TruncatedSymSet closure_generate(const EdgeStructure& E, int truncation,
                                 std::span<const SimplexMatrix> generators);

/// Stirling number of the second kind: partitions of an n-set into k blocks.
std::uint64_t stirling2(int n, int k);

}  // namespace spiny
