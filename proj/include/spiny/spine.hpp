#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "spiny/symset.hpp"

namespace spiny {

inline constexpr int kDefaultSpineCap = 5;

/// A tree on the vertex set [n]. Edges are stored as (min, max) pairs in
/// lexicographic order, which is also the component order of spine_eval.
class Spine {
 public:
  /// Throws InvalidInput unless `edges` form a tree on [degree].
  Spine(int degree, std::vector<std::pair<int, int>> edges);

  /// Edges {i-1, i}.
  static Spine standard(int n);
  /// Edges {0, i}.
  static Spine starry(int n);

  int degree() const { return degree_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::string to_string() const;

  friend auto operator<=>(const Spine&, const Spine&) = default;
  friend bool operator==(const Spine&, const Spine&) = default;

 private:
  int degree_;
  std::vector<std::pair<int, int>> edges_;
};

/// An element of lim_T X: one edge per tree edge {i<j}, an edge o_i -> o_j,
/// with the objects at shared vertices agreeing.
struct ChainTuple {
  Spine spine;
  std::vector<EdgeId> components;

  friend auto operator<=>(const ChainTuple&, const ChainTuple&) = default;
  friend bool operator==(const ChainTuple&, const ChainTuple&) = default;
};

/// True iff `t` satisfies the matching conditions of lim_T over `e`.
bool is_matching(const EdgeStructure& e, const ChainTuple& t);

/// Every labelled tree on [n], each once, sorted. Built by decoding Pruefer
/// sequences. Throws PreconditionViolation for n < 1 or n > cap.
std::vector<Spine> all_spines(int n, int cap = kDefaultSpineCap);

/// The tuple (x_ij) over the tree edges {i<j} of T.
ChainTuple spine_eval(const TruncatedSymSet& X, const SimplexMatrix& x, const Spine& T);

/// All of lim_T X, sorted by components.
std::vector<ChainTuple> limit_tuples(const TruncatedSymSet& X, const Spine& T);

}  // namespace spiny
