#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spiny {

using ObjectId = std::uint32_t;
using EdgeId = std::uint32_t;

/// The 1-truncation of a symmetric set: objects, edges, domain/codomain,
/// the inverse involution, and identities.
///
/// Identity edges are ordinary edges; `ident(o)` names the one attached to
/// object o. The structure is not checked on construction so that malformed
/// inputs can be reported by `violations()`.
class EdgeStructure {
 public:
  struct Edge {
    std::string name;
    ObjectId dom = 0;
    ObjectId cod = 0;
    EdgeId inv = 0;
  };

  EdgeStructure() = default;
  EdgeStructure(std::vector<std::string> object_names, std::vector<Edge> edges,
                std::vector<EdgeId> identities);

  /// Adds an object together with its identity edge "id:<name>".
  ObjectId add_object(std::string name);
  /// Adds f: dom -> cod and a separate inverse cod -> dom. Returns f; the
  /// inverse is f + 1.
  EdgeId add_edge_pair(std::string name, std::string inverse_name, ObjectId dom,
                       ObjectId cod);
  EdgeId add_self_inverse_edge(std::string name, ObjectId object);

  std::size_t num_objects() const { return object_names_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const std::string& object_name(ObjectId o) const { return object_names_[o]; }
  const std::string& edge_name(EdgeId f) const { return edges_[f].name; }
  const Edge& edge(EdgeId f) const { return edges_[f]; }
  ObjectId dom(EdgeId f) const { return edges_[f].dom; }
  ObjectId cod(EdgeId f) const { return edges_[f].cod; }
  EdgeId inv(EdgeId f) const { return edges_[f].inv; }
  EdgeId ident(ObjectId o) const { return identities_[o]; }
  bool is_identity(EdgeId f) const { return identity_flags_[f] != 0; }

  const std::vector<std::string>& object_names() const { return object_names_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<EdgeId>& identities() const { return identities_; }

  /// Edges whose domain is o, identity included.
  std::vector<EdgeId> outgoing(ObjectId o) const;
  std::size_t num_nonidentity_edges() const;

  std::optional<ObjectId> find_object(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;

  /// Every violated axiom, one line each; empty iff well formed.
  std::vector<std::string> violations() const;

  friend bool operator==(const EdgeStructure& a, const EdgeStructure& b) {
    return a.object_names_ == b.object_names_ && a.identities_ == b.identities_ &&
           a.edges_.size() == b.edges_.size() && a.same_edges(b);
  }

  static std::string identity_name(std::string_view object) {
    return "id:" + std::string(object);
  }

 private:
  bool same_edges(const EdgeStructure& other) const;
  void refresh_flags();

  std::vector<std::string> object_names_;
  std::vector<Edge> edges_;
  std::vector<EdgeId> identities_;
  std::vector<char> identity_flags_;
};

}  // namespace spiny
