#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace spiny {

/// A function [m] -> [n] between finite ordinals [k] = {0, ..., k}.
///
/// These are the morphisms of the symmetric indexing category: every
/// function is allowed, not only monotone ones.
class FiniteMap {
 public:
  /// Throws InvalidInput if `values` is empty or has an entry outside
  /// {0, ..., target_degree}.
  FiniteMap(int target_degree, std::vector<int> values);

  static FiniteMap identity(int n);

  int source_degree() const { return static_cast<int>(values_.size()) - 1; }
  int target_degree() const { return target_degree_; }
  std::span<const int> values() const { return values_; }
  int operator()(int i) const { return values_[static_cast<std::size_t>(i)]; }

  bool is_surjective() const;
  bool is_injective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }
  bool is_identity() const;

  /// Number of points in the image.
  int image_size() const;

  std::string to_string() const;

  friend auto operator<=>(const FiniteMap&, const FiniteMap&) = default;
  friend bool operator==(const FiniteMap&, const FiniteMap&) = default;

 private:
  int target_degree_;
  std::vector<int> values_;
};

std::ostream& operator<<(std::ostream& os, const FiniteMap& f);

/// g o f. Throws InvalidInput when f's target is not g's source.
FiniteMap compose(const FiniteMap& g, const FiniteMap& f);

struct EpiMono {
  FiniteMap epi;
  FiniteMap mono;
};

/// Writes alpha = mono o epi where mono is the ascending inclusion of the
/// image and epi sends i to the rank of alpha(i) inside the image.
EpiMono factor_epi_mono(const FiniteMap& alpha);

/// Inverse of a bijection.
FiniteMap inverse(const FiniteMap& perm);

namespace maps {

/// The nontrivial automorphism of [1].
FiniteMap swap01();
/// [2] -> [1], i |-> |1 - i|.
FiniteMap chi();
/// [0] -> [1], 0 |-> k.
FiniteMap iota(int k);
/// [n-1] -> [n] skipping i.
FiniteMap coface(int n, int i);
/// Transposition of i and j on [n].
FiniteMap transposition(int n, int i, int j);
/// [m] -> [n] constant at c.
FiniteMap constant(int m, int n, int c);

}  // namespace maps

// Exhaustive generators, in lexicographic order of value sequences.
std::vector<FiniteMap> all_maps(int m, int n);
std::vector<FiniteMap> all_surjections(int m, int k);
std::vector<FiniteMap> all_injections(int m, int n);
std::vector<FiniteMap> all_permutations(int n);

/// Surjections [m] -> [k] in restricted-growth form: sigma(0) = 0 and each
/// value is at most one more than every earlier value. One per partition of
/// [m] into k+1 blocks. With k < 0, every block count is produced.
std::vector<FiniteMap> canonical_surjections(int m, int k = -1);

/// Restricted-growth surjection determined by a labelling of [m]: blocks are
/// the fibres of `labels`, numbered by their minimal element.
FiniteMap canonical_surjection_of(std::span<const int> labels);

}  // namespace spiny
