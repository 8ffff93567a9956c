#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "spiny/edge_structure.hpp"
#include "spiny/finite_map.hpp"

namespace spiny {

/// The (n+1) x (n+1) matrix (x_ij) of edges encoding an n-simplex.
///
/// Ordering is by degree, then row-major entries, which gives the canonical
/// order used for every set of simplices.
class SimplexMatrix {
 public:
  SimplexMatrix() = default;
  /// `entries` is row-major and must have (degree+1)^2 elements.
  SimplexMatrix(int degree, std::vector<EdgeId> entries);

  /// [[ident(dom f), f], [inv f, ident(cod f)]]
  static SimplexMatrix of_edge(const EdgeStructure& e, EdgeId f);
  /// [[ident(o)]]
  static SimplexMatrix of_object(const EdgeStructure& e, ObjectId o);

  int degree() const { return degree_; }
  int size() const { return degree_ + 1; }
  EdgeId operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i * size() + j)];
  }
  std::span<const EdgeId> row(int i) const {
    return std::span<const EdgeId>(entries_).subspan(static_cast<std::size_t>(i * size()),
                                                     static_cast<std::size_t>(size()));
  }
  std::span<const EdgeId> entries() const { return entries_; }

  /// x . alpha, entry (i, j) = x(alpha(i), alpha(j)). Throws InvalidInput
  /// if alpha's target degree differs from this degree.
  SimplexMatrix act(const FiniteMap& alpha) const;

  /// Objects o_i read off the diagonal as dom(x_ii).
  std::vector<ObjectId> object_labels(const EdgeStructure& e) const;

  /// (x_01, x_12, ..., x_(n-1)n)
  std::vector<EdgeId> superdiagonal() const;

  bool has_repeated_rows() const;
  bool has_offdiagonal_identity(const EdgeStructure& e) const;

  /// Well-formedness over `e`: diagonal identities, x_ji = inv(x_ij), and
  /// domain/codomain matching. One message per violated entry.
  std::vector<std::string> violations(const EdgeStructure& e) const;

  std::string to_string(const EdgeStructure& e) const;

  friend auto operator<=>(const SimplexMatrix&, const SimplexMatrix&) = default;
  friend bool operator==(const SimplexMatrix&, const SimplexMatrix&) = default;

 private:
  int degree_ = 0;
  std::vector<EdgeId> entries_;
};

struct SimplexMatrixHash {
  std::size_t operator()(const SimplexMatrix& x) const noexcept;
};

/// Decomposition of a matrix through the equivalence "rows i and j agree":
/// x = base . sigma, with sigma restricted-growth and base the submatrix on
/// the minimal row of each class. base has pairwise distinct rows.
struct RowFactorization {
  SimplexMatrix base;
  FiniteMap surjection;
};

RowFactorization factor_by_rows(const SimplexMatrix& x);

}  // namespace spiny
