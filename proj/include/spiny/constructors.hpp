#pragma once

#include <string>
#include <vector>

#include "spiny/symset.hpp"

namespace spiny {

/// A finite group by its multiplication table; table[a][b] = a * b.
class GroupTable {
 public:
  /// Throws InvalidInput listing the first failed axiom.
  GroupTable(std::vector<std::string> elements, std::vector<std::vector<int>> table);

  static GroupTable cyclic(int n);
  static GroupTable klein_four();
  /// Permutations of {1..n} in cycle notation, (a * b)(x) = a(b(x)).
  static GroupTable symmetric(int n);
  static GroupTable dihedral(int n);
  static GroupTable direct_product(const GroupTable& a, const GroupTable& b);

  int order() const { return static_cast<int>(elements_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  const std::string& name(int a) const { return elements_[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  int find(const std::string& name) const;

  /// Axiom violations of a candidate table; empty iff it is a group.
  static std::vector<std::string> violations(const std::vector<std::string>& elements,
                                             const std::vector<std::vector<int>>& table);

  friend bool operator==(const GroupTable&, const GroupTable&) = default;

 private:
  std::vector<std::string> elements_;
  std::vector<std::vector<int>> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

/// A finite groupoid. compose[g][f] is the index of g o f when cod f = dom g
/// and -1 otherwise.
struct GroupoidPresentation {
  struct Morphism {
    std::string name;
    int dom = 0;
    int cod = 0;
  };
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<int> identities;
  std::vector<std::vector<int>> compose;

  /// Category axioms and invertibility, checked exhaustively.
  std::vector<std::string> violations() const;
  /// Inverse of f; requires a valid presentation.
  int inverse(int f) const;

  friend bool operator==(const GroupoidPresentation& a, const GroupoidPresentation& b) {
    if (a.objects != b.objects || a.identities != b.identities || a.compose != b.compose ||
        a.morphisms.size() != b.morphisms.size()) {
      return false;
    }
    for (std::size_t i = 0; i < a.morphisms.size(); ++i) {
      const auto& x = a.morphisms[i];
      const auto& y = b.morphisms[i];
      if (x.name != y.name || x.dom != y.dom || x.cod != y.cod) return false;
    }
    return true;
  }
};

/// A finite group together with a collection of its subgroups (element
/// index lists).
struct TransporterSpec {
  GroupTable group;
  std::vector<std::vector<int>> delta;

  friend bool operator==(const TransporterSpec&, const TransporterSpec&) = default;
};

/// One-object groupoid of a group.
GroupoidPresentation groupoid_of_group(const GroupTable& G);

/// Nerve of G: one object, edges the elements, and in degree m the matrices
/// x_ij = g_j ... g_(i+1) for (g_1, ..., g_m) in G^m. Truncation |G| - 1,
/// clamped to at least 1.
TruncatedSymSet nerve_of_group(const GroupTable& G);

/// Nerve of a groupoid: x_ij = h_j o h_i^-1 for the edges h_i = x_0i out of
/// x's first object. Truncation is p, at least 1.
TruncatedSymSet nerve_of_groupoid(const GroupoidPresentation& P);

/// Subgroup and conjugation helpers on element index lists (kept sorted).
bool is_subgroup(const GroupTable& G, const std::vector<int>& subset);
std::vector<int> conjugate(const GroupTable& G, int g, const std::vector<int>& P);
std::vector<int> normalizer(const GroupTable& G, const std::vector<int>& P);
std::vector<std::vector<int>> conjugacy_class(const GroupTable& G, const std::vector<int>& P);
std::vector<int> generated_subgroup(const GroupTable& G, const std::vector<int>& gens);

struct ConjugationClosure {
  TransporterSpec spec;
  /// Subgroups that had to be added, in the order they were added.
  std::vector<std::vector<int>> added;
};

/// Sorts and dedupes delta and closes it under conjugation. Throws
/// InvalidInput if a member is not a subgroup.
ConjugationClosure close_under_conjugation(const TransporterSpec& spec);

/// Groupoid with objects delta and morphisms (g, P, Q) with g P g^-1 = Q.
/// Delta is closed under conjugation first; with `strict` a delta that is not
/// already closed is rejected with InvalidInput.
GroupoidPresentation transporter_presentation(const TransporterSpec& spec, bool strict = false);
TruncatedSymSet transporter_groupoid(const TransporterSpec& spec, bool strict = false);

/// max over P in delta of |P^G| * |N_G(P)|, minus one.
int transporter_dimension_formula(const TransporterSpec& spec);

/// X x Y with objects and edges paired componentwise and truncation
/// (N_X + 1)(N_Y + 1) - 1. Degenerate simplices of each factor above its
/// own truncation are produced from its nondegenerate ones.
TruncatedSymSet product(const TruncatedSymSet& X, const TruncatedSymSet& Y);

/// One-point union of two partial groups. Nonidentity edges are renamed
/// "a.<name>" and "b.<name>". Throws PreconditionViolation for non-reduced
/// input and InternalError if the result fails validation or spininess.
TruncatedSymSet wedge(const TruncatedSymSet& A, const TruncatedSymSet& B);

/// k generators g_i with distinct inverses, truncation 1. k = 0 is the point.
TruncatedSymSet free_partial_group(int k);

/// The one-object, one-edge symmetric set.
TruncatedSymSet point();

/// Factors of X under the relation generated by f ~ inv(f) and by
/// co-occurrence in a nondegenerate simplex, as sub-partial-groups ordered by
/// their first edge. The point has no factors.
std::vector<TruncatedSymSet> wedge_decompose(const TruncatedSymSet& X);

}  // namespace spiny
