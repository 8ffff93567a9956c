#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "spiny/symset.hpp"

namespace spiny {

/// The nondegenerate simplices of X (objects, nonidentity edges, and each
/// stored matrix) in a fixed order: by degree, then canonical order.
std::vector<SimplexMatrix> nondegenerate_items(const TruncatedSymSet& X);

/// A nonempty symmetric subset of a parent set, recorded by membership
/// flags over the parent's nondegenerate simplices. A subset is closed
/// exactly when it contains the nondegenerate bases of all images of its
/// members.
class SymmetricSubset {
 public:
  SymmetricSubset(std::shared_ptr<const TruncatedSymSet> parent, std::vector<char> members);

  const TruncatedSymSet& parent() const { return *parent_; }
  const std::vector<char>& members() const { return members_; }
  std::size_t size() const;
  bool contains(const SimplexMatrix& x) const;

  /// The subset as a symmetric set at the parent's truncation. Edges keep
  /// their names and relative order.
  TruncatedSymSet to_symset() const;

  friend bool operator==(const SymmetricSubset& a, const SymmetricSubset& b) {
    return a.members_ == b.members_;
  }

 private:
  std::shared_ptr<const TruncatedSymSet> parent_;
  std::vector<char> members_;
};

/// For each nondegenerate item, the items forced by it: bases of its last
/// face and of its adjacent transpositions.
std::vector<std::vector<std::size_t>> closure_requirements(const TruncatedSymSet& X);

/// Every nonempty symmetric subset of the partial group X, ordered by size
/// and then by member list. Built by generate-and-close from the minimal
/// subset. Throws PreconditionViolation unless X is reduced.
std::vector<SymmetricSubset> impartial_subgroups(const TruncatedSymSet& X);
std::size_t count_impartial_subgroups(const TruncatedSymSet& X);

/// An edge bijection X -> Y (indexed by X's edge ids) carrying identities,
/// inverses, and every stored matrix of X onto those of Y, or nothing.
/// Truncations are not compared. Both inputs must be reduced.
std::optional<std::vector<EdgeId>> are_isomorphic(const TruncatedSymSet& X,
                                                  const TruncatedSymSet& Y);

/// Lexicographically least serialization of X over every relabelling of
/// its nonidentity edges. Equal keys exactly for isomorphic reduced sets.
std::string iso_class_key(const TruncatedSymSet& X);

struct IsoClass {
  std::string key;
  TruncatedSymSet representative;
};

inline constexpr int kDefaultEnumerationCap = 4;

/// Isomorphism classes of partial groups with k edges (identity included),
/// at truncation k - 1, sorted by key. Requires 2 <= k <= cap.
std::vector<IsoClass> enumerate_partial_groups(int k, int cap = kDefaultEnumerationCap);

}  // namespace spiny
