#include "spiny/edge_structure.hpp"

#include <algorithm>
#include <set>

#include "spiny/error.hpp"

namespace spiny {

EdgeStructure::EdgeStructure(std::vector<std::string> object_names,
                             std::vector<Edge> edges, std::vector<EdgeId> identities)
    : object_names_(std::move(object_names)),
      edges_(std::move(edges)),
      identities_(std::move(identities)) {
  if (identities_.size() != object_names_.size()) {
    throw InvalidInput("edge structure needs exactly one identity per object");
  }
  const auto n = static_cast<EdgeId>(edges_.size());
  for (const Edge& e : edges_) {
    if (e.dom >= object_names_.size() || e.cod >= object_names_.size() || e.inv >= n) {
      throw InvalidInput("edge '" + e.name + "' refers to an unknown object or edge");
    }
  }
  for (EdgeId id : identities_) {
    if (id >= n) throw InvalidInput("identity refers to an unknown edge");
  }
  refresh_flags();
}

void EdgeStructure::refresh_flags() {
  identity_flags_.assign(edges_.size(), 0);
  for (EdgeId id : identities_) identity_flags_[id] = 1;
}

ObjectId EdgeStructure::add_object(std::string name) {
  const auto o = static_cast<ObjectId>(object_names_.size());
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({identity_name(name), o, o, id});
  object_names_.push_back(std::move(name));
  identities_.push_back(id);
  identity_flags_.push_back(1);
  return o;
}

EdgeId EdgeStructure::add_edge_pair(std::string name, std::string inverse_name,
                                    ObjectId dom, ObjectId cod) {
  const auto f = static_cast<EdgeId>(edges_.size());
  edges_.push_back({std::move(name), dom, cod, f + 1});
  edges_.push_back({std::move(inverse_name), cod, dom, f});
  identity_flags_.push_back(0);
  identity_flags_.push_back(0);
  return f;
}

EdgeId EdgeStructure::add_self_inverse_edge(std::string name, ObjectId object) {
  const auto f = static_cast<EdgeId>(edges_.size());
  edges_.push_back({std::move(name), object, object, f});
  identity_flags_.push_back(0);
  return f;
}

std::vector<EdgeId> EdgeStructure::outgoing(ObjectId o) const {
  std::vector<EdgeId> out;
  for (EdgeId f = 0; f < edges_.size(); ++f) {
    if (edges_[f].dom == o) out.push_back(f);
  }
  return out;
}

std::size_t EdgeStructure::num_nonidentity_edges() const {
  return edges_.size() - identities_.size();
}

std::optional<ObjectId> EdgeStructure::find_object(std::string_view name) const {
  for (ObjectId o = 0; o < object_names_.size(); ++o) {
    if (object_names_[o] == name) return o;
  }
  return std::nullopt;
}

std::optional<EdgeId> EdgeStructure::find_edge(std::string_view name) const {
  for (EdgeId f = 0; f < edges_.size(); ++f) {
    if (edges_[f].name == name) return f;
  }
  return std::nullopt;
}

std::vector<std::string> EdgeStructure::violations() const {
  std::vector<std::string> out;
  for (EdgeId f = 0; f < edges_.size(); ++f) {
    const Edge& e = edges_[f];
    const Edge& i = edges_[e.inv];
    if (i.inv != f) {
      out.push_back("inverse is not an involution at edge '" + e.name + "'");
    }
    if (i.dom != e.cod || i.cod != e.dom) {
      out.push_back("inverse of edge '" + e.name + "' has mismatched domain/codomain");
    }
  }
  std::set<EdgeId> seen;
  for (ObjectId o = 0; o < identities_.size(); ++o) {
    const EdgeId id = identities_[o];
    const Edge& e = edges_[id];
    if (!seen.insert(id).second) {
      out.push_back("identity of object '" + object_names_[o] + "' is shared");
    }
    if (e.dom != o || e.cod != o) {
      out.push_back("identity of object '" + object_names_[o] +
                    "' is not an endomorphism of it");
    }
    if (e.inv != id) {
      out.push_back("identity of object '" + object_names_[o] + "' is not self-inverse");
    }
  }
  std::set<std::string> names;
  for (const Edge& e : edges_) {
    if (!names.insert(e.name).second) out.push_back("duplicate edge name '" + e.name + "'");
  }
  std::set<std::string> onames;
  for (const auto& n : object_names_) {
    if (!onames.insert(n).second) out.push_back("duplicate object name '" + n + "'");
  }
  return out;
}

bool EdgeStructure::same_edges(const EdgeStructure& other) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& a = edges_[i];
    const Edge& b = other.edges_[i];
    if (a.name != b.name || a.dom != b.dom || a.cod != b.cod || a.inv != b.inv) {
      return false;
    }
  }
  return true;
}

}  // namespace spiny
