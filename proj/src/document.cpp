#include "spiny/document.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "spiny/error.hpp"

namespace spiny {

namespace {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Output

int depth(const Json& j) {
  if (!j.is_structured()) return 0;
  int d = 0;
  for (const auto& child : j) d = std::max(d, depth(child));
  return d + 1;
}

void emit(std::ostream& os, const Json& j, int indent, int compact_depth) {
  if (!j.is_structured() || j.empty() || depth(j) <= compact_depth) {
    os << j.dump();
    return;
  }
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const bool object = j.is_object();
  os << (object ? "{\n" : "[\n");
  std::size_t i = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++i) {
    os << pad;
    if (object) os << Json(it.key()).dump() << ": ";
    emit(os, it.value(), indent + 2, 2);
    os << (i + 1 < j.size() ? ",\n" : "\n");
  }
  os << std::string(static_cast<std::size_t>(indent), ' ') << (object ? "}" : "]");
}

std::string render(const Json& j) {
  std::ostringstream os;
  emit(os, j, 0, 1);
  os << "\n";
  return os.str();
}

Json symset_json(const TruncatedSymSet& X0) {
  const TruncatedSymSet X = canonical_form(X0);
  const EdgeStructure& E = X.edges();
  Json out;
  out["truncation"] = X.truncation();
  out["objects"] = E.object_names();
  Json edges = Json::array();
  for (EdgeId f = 0; f < E.num_edges(); ++f) {
    if (E.is_identity(f)) continue;
    Json e;
    e["id"] = E.edge_name(f);
    e["dom"] = E.object_name(E.dom(f));
    e["cod"] = E.object_name(E.cod(f));
    e["inv"] = E.edge_name(E.inv(f));
    edges.push_back(std::move(e));
  }
  out["edges"] = std::move(edges);
  Json simplices = Json::object();
  for (int n = 2; n <= X.truncation(); ++n) {
    std::vector<std::vector<std::string>> named;
    for (const SimplexMatrix& x : X.nondegenerate(n)) {
      std::vector<std::string> names;
      for (EdgeId f : x.entries()) names.push_back(E.edge_name(f));
      named.push_back(std::move(names));
    }
    if (named.empty()) continue;
    std::sort(named.begin(), named.end());
    Json level = Json::array();
    const auto size = static_cast<std::size_t>(n + 1);
    for (const auto& names : named) {
      Json m = Json::array();
      for (std::size_t i = 0; i < size; ++i) {
        m.push_back(std::vector<std::string>(names.begin() + static_cast<std::ptrdiff_t>(i * size),
                                             names.begin() + static_cast<std::ptrdiff_t>((i + 1) * size)));
      }
      level.push_back(std::move(m));
    }
    simplices[std::to_string(n)] = std::move(level);
  }
  out["simplices"] = std::move(simplices);
  return out;
}

Json group_json(const GroupTable& G) {
  Json out;
  out["elements"] = G.elements();
  out["table"] = G.table();
  return out;
}

Json groupoid_json(const GroupoidPresentation& P) {
  Json out;
  out["objects"] = P.objects;
  Json morphisms = Json::array();
  for (const auto& m : P.morphisms) {
    Json e;
    e["id"] = m.name;
    e["dom"] = P.objects[static_cast<std::size_t>(m.dom)];
    e["cod"] = P.objects[static_cast<std::size_t>(m.cod)];
    morphisms.push_back(std::move(e));
  }
  out["morphisms"] = std::move(morphisms);
  Json ids = Json::array();
  for (int id : P.identities) ids.push_back(P.morphisms[static_cast<std::size_t>(id)].name);
  out["identities"] = std::move(ids);
  Json compose = Json::array();
  for (std::size_t g = 0; g < P.compose.size(); ++g) {
    for (std::size_t f = 0; f < P.compose[g].size(); ++f) {
      const int gf = P.compose[g][f];
      if (gf < 0) continue;
      compose.push_back({P.morphisms[g].name, P.morphisms[f].name,
                         P.morphisms[static_cast<std::size_t>(gf)].name});
    }
  }
  out["compose"] = std::move(compose);
  return out;
}

// ---------------------------------------------------------------------------
// Input

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InvalidInput(where + ": " + what);
}

void expect_fields(const Json& j, const std::string& where, std::initializer_list<const char*> required,
                   std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) fail(where, "expected an object");
  std::set<std::string> allowed;
  for (const char* f : required) {
    allowed.insert(f);
    if (!j.contains(f)) fail(where, std::string("missing field '") + f + "'");
  }
  for (const char* f : optional) allowed.insert(f);
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.contains(it.key())) fail(where, "unknown field '" + it.key() + "'");
  }
}

std::string get_string(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

long long get_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<long long>();
}

const Json& get_array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::vector<std::string> get_names(const Json& j, const std::string& where) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < get_array(j, where).size(); ++i) {
    auto name = get_string(j[i], where + "[" + std::to_string(i) + "]");
    if (!seen.insert(name).second) fail(where, "duplicate name '" + name + "'");
    out.push_back(std::move(name));
  }
  return out;
}

TruncatedSymSet parse_symset(const Json& j, std::vector<std::string>& notes) {
  const long long N = get_int(j["truncation"], "truncation");
  if (N < 1) fail("truncation", "must be at least 1, got " + std::to_string(N));

  const auto objects = get_names(j["objects"], "objects");
  std::map<std::string, ObjectId> object_id;
  std::map<std::string, EdgeId> edge_id;
  std::vector<EdgeStructure::Edge> edges;
  std::vector<EdgeId> identities;
  for (std::size_t o = 0; o < objects.size(); ++o) {
    object_id[objects[o]] = static_cast<ObjectId>(o);
    const auto id = static_cast<EdgeId>(edges.size());
    edges.push_back({EdgeStructure::identity_name(objects[o]), static_cast<ObjectId>(o),
                     static_cast<ObjectId>(o), id});
    edge_id[edges.back().name] = id;
    identities.push_back(id);
  }

  const Json& listed = get_array(j["edges"], "edges");
  std::vector<std::string> inverse_names;
  for (std::size_t i = 0; i < listed.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const Json& e = listed[i];
    if (!e.is_object()) fail(where, "expected an object");
    const std::string name = e.contains("id") ? get_string(e["id"], where + ".id") : "";
    const std::string label = name.empty() ? where : where + " (edge '" + name + "')";
    if (!e.contains("inv")) fail(label, "missing field 'inv': the inverse of edge '" + name + "' is not given");
    expect_fields(e, label, {"id", "dom", "cod", "inv"});
    if (edge_id.contains(name)) fail(label, "edge name '" + name + "' is already in use");
    auto endpoint = [&](const char* field) {
      const auto obj = get_string(e[field], label + "." + field);
      auto it = object_id.find(obj);
      if (it == object_id.end()) fail(label, std::string(field) + " '" + obj + "' is not a listed object");
      return it->second;
    };
    const ObjectId dom = endpoint("dom");
    const ObjectId cod = endpoint("cod");
    edge_id[name] = static_cast<EdgeId>(edges.size());
    edges.push_back({name, dom, cod, 0});
    inverse_names.push_back(get_string(e["inv"], label + ".inv"));
  }
  for (std::size_t i = 0; i < inverse_names.size(); ++i) {
    auto& e = edges[objects.size() + i];
    auto it = edge_id.find(inverse_names[i]);
    if (it == edge_id.end() || it->second < objects.size()) {
      fail("edges[" + std::to_string(i) + "] (edge '" + e.name + "')",
           "inverse '" + inverse_names[i] + "' is not a listed edge");
    }
    e.inv = it->second;
  }
  EdgeStructure E(objects, std::move(edges), std::move(identities));
  const auto bad = E.violations();
  if (!bad.empty()) fail("edges", bad.front());

  const Json& simp = j["simplices"];
  if (!simp.is_object()) fail("simplices", "expected an object keyed by degree");
  std::vector<std::vector<SimplexMatrix>> lists(static_cast<std::size_t>(N) + 1);
  std::vector<SimplexMatrix> all;
  for (auto it = simp.begin(); it != simp.end(); ++it) {
    const std::string& key = it.key();
    const std::string where = "simplices[\"" + key + "\"]";
    if (key.empty() || key.size() > 3 || !std::all_of(key.begin(), key.end(), ::isdigit) ||
        (key.size() > 1 && key[0] == '0')) {
      fail(where, "degree keys are decimal integers");
    }
    const int n = std::stoi(key);
    if (n < 2 || n > N) {
      fail(where, "degree must lie in [2, " + std::to_string(N) + "]; objects and edges are listed separately");
    }
    const Json& level = get_array(it.value(), where);
    for (std::size_t s = 0; s < level.size(); ++s) {
      const std::string at = where + "[" + std::to_string(s) + "]";
      const Json& rows = get_array(level[s], at);
      if (rows.size() != static_cast<std::size_t>(n + 1)) {
        fail(at, "expected " + std::to_string(n + 1) + " rows");
      }
      std::vector<EdgeId> entries;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const Json& row = get_array(rows[r], at);
        if (row.size() != rows.size()) fail(at, "row " + std::to_string(r) + " has the wrong length");
        for (const Json& cell : row) {
          const auto name = get_string(cell, at);
          auto f = edge_id.find(name);
          if (f == edge_id.end()) fail(at, "unknown edge '" + name + "'");
          entries.push_back(f->second);
        }
      }
      SimplexMatrix x(n, std::move(entries));
      const auto wrong = x.violations(E);
      if (!wrong.empty()) fail(at, wrong.front());
      if (x.has_repeated_rows()) {
        auto r = factor_by_rows(x);
        notes.push_back(at + " is degenerate (" + x.to_string(E) + " = " + r.base.to_string(E) +
                        " . " + r.surjection.to_string() + "); dropped and regenerated");
        if (r.base.degree() >= 2) {
          all.push_back(r.base);
          lists[static_cast<std::size_t>(r.base.degree())].push_back(std::move(r.base));
        }
        continue;
      }
      all.push_back(x);
      lists[static_cast<std::size_t>(n)].push_back(std::move(x));
    }
  }
  TruncatedSymSet X(static_cast<int>(N), E, std::move(lists));
  const TruncatedSymSet closed = closure_generate(E, static_cast<int>(N), all);
  const auto report = validate(X);
  if (!report.ok()) throw InvalidInput(report.violations.front().message);
  if (!(closed == X)) throw InternalError("closure adds simplices although validation passed");
  return X;
}

GroupTable parse_group(const Json& j, const std::string& where) {
  const auto elements = get_names(j["elements"], where + "elements");
  std::vector<std::vector<int>> table;
  const Json& rows = get_array(j["table"], where + "table");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<int> row;
    for (const Json& v : get_array(rows[r], where + "table[" + std::to_string(r) + "]")) {
      row.push_back(static_cast<int>(get_int(v, where + "table[" + std::to_string(r) + "]")));
    }
    table.push_back(std::move(row));
  }
  auto bad = GroupTable::violations(elements, table);
  if (!bad.empty()) fail(where + "table", bad.front());
  return GroupTable(elements, std::move(table));
}

GroupoidPresentation parse_groupoid(const Json& j) {
  GroupoidPresentation P;
  P.objects = get_names(j["objects"], "objects");
  std::map<std::string, int> object_id;
  for (std::size_t o = 0; o < P.objects.size(); ++o) object_id[P.objects[o]] = static_cast<int>(o);
  std::map<std::string, int> morphism_id;
  const Json& ms = get_array(j["morphisms"], "morphisms");
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const std::string where = "morphisms[" + std::to_string(i) + "]";
    expect_fields(ms[i], where, {"id", "dom", "cod"});
    GroupoidPresentation::Morphism m;
    m.name = get_string(ms[i]["id"], where + ".id");
    for (auto [field, slot] : {std::pair{"dom", &m.dom}, std::pair{"cod", &m.cod}}) {
      const auto obj = get_string(ms[i][field], where + "." + field);
      auto it = object_id.find(obj);
      if (it == object_id.end()) fail(where, std::string(field) + " '" + obj + "' is not a listed object");
      *slot = it->second;
    }
    if (!morphism_id.emplace(m.name, static_cast<int>(i)).second) {
      fail(where, "duplicate morphism '" + m.name + "'");
    }
    P.morphisms.push_back(std::move(m));
  }
  auto lookup = [&](const Json& v, const std::string& where) {
    const auto name = get_string(v, where);
    auto it = morphism_id.find(name);
    if (it == morphism_id.end()) fail(where, "unknown morphism '" + name + "'");
    return it->second;
  };
  const Json& ids = get_array(j["identities"], "identities");
  for (std::size_t i = 0; i < ids.size(); ++i) {
    P.identities.push_back(lookup(ids[i], "identities[" + std::to_string(i) + "]"));
  }
  const auto nm = P.morphisms.size();
  P.compose.assign(nm, std::vector<int>(nm, -1));
  const Json& comp = get_array(j["compose"], "compose");
  for (std::size_t i = 0; i < comp.size(); ++i) {
    const std::string where = "compose[" + std::to_string(i) + "]";
    if (!comp[i].is_array() || comp[i].size() != 3) fail(where, "expected [g, f, g o f]");
    const int g = lookup(comp[i][0], where);
    const int f = lookup(comp[i][1], where);
    auto& slot = P.compose[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
    if (slot >= 0) fail(where, "composite listed twice");
    slot = lookup(comp[i][2], where);
  }
  auto bad = P.violations();
  if (!bad.empty()) fail("compose", bad.front());
  return P;
}

TransporterSpec parse_transporter(const Json& j) {
  expect_fields(j["group"], "group", {"elements", "table"});
  TransporterSpec spec{parse_group(j["group"], "group."), {}};
  const Json& delta = get_array(j["delta"], "delta");
  for (std::size_t i = 0; i < delta.size(); ++i) {
    const std::string where = "delta[" + std::to_string(i) + "]";
    std::vector<int> P;
    for (const Json& v : get_array(delta[i], where)) {
      const auto x = get_int(v, where);
      if (x < 0 || x >= spec.group.order()) fail(where, "element index " + std::to_string(x) + " out of range");
      P.push_back(static_cast<int>(x));
    }
    spec.delta.push_back(std::move(P));
  }
  return spec;
}

std::string line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n');
  return "line " + std::to_string(line);
}

}  // namespace

std::string Document::kind() const {
  switch (payload.index()) {
    case 0: return "symset";
    case 1: return "group";
    case 2: return "groupoid";
    default: return "transporter";
  }
}

Document parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(line_of(text, e.byte) + ": malformed JSON: " + e.what());
  }
  if (!j.is_object()) throw InvalidInput("top level: expected an object");
  if (!j.contains("kind")) throw InvalidInput("top level: missing field 'kind'");
  const std::string kind = get_string(j["kind"], "kind");
  if (kind == "symset") {
    expect_fields(j, "top level",
                  {"format_version", "kind", "truncation", "objects", "edges", "simplices"},
                  {"provenance"});
  } else if (kind == "group") {
    expect_fields(j, "top level", {"format_version", "kind", "elements", "table"}, {"provenance"});
  } else if (kind == "groupoid") {
    expect_fields(j, "top level",
                  {"format_version", "kind", "objects", "morphisms", "identities", "compose"},
                  {"provenance"});
  } else if (kind == "transporter") {
    expect_fields(j, "top level", {"format_version", "kind", "group", "delta"}, {"provenance"});
  } else {
    throw InvalidInput("kind: unknown kind '" + kind + "'");
  }
  const std::string version = get_string(j["format_version"], "format_version");
  if (version != kFormatVersion) {
    throw InvalidInput("format_version: unsupported version '" + version + "'");
  }
  const std::string provenance =
      j.contains("provenance") ? get_string(j["provenance"], "provenance") : std::string();
  std::vector<std::string> notes;
  auto payload = [&]() -> Document::Payload {
    if (kind == "symset") return parse_symset(j, notes);
    if (kind == "group") return parse_group(j, "");
    if (kind == "groupoid") return parse_groupoid(j);
    return parse_transporter(j);
  }();
  return Document{version, std::move(payload), provenance, std::move(notes)};
}

std::string serialize_document(const Document& doc) {
  Json out;
  out["format_version"] = doc.format_version;
  out["kind"] = doc.kind();
  Json body = std::visit(
      [](const auto& p) -> Json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, TruncatedSymSet>) return symset_json(p);
        if constexpr (std::is_same_v<T, GroupTable>) return group_json(p);
        if constexpr (std::is_same_v<T, GroupoidPresentation>) return groupoid_json(p);
        if constexpr (std::is_same_v<T, TransporterSpec>) {
          Json t;
          t["group"] = group_json(p.group);
          t["delta"] = p.delta;
          return t;
        }
      },
      doc.payload);
  for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
  out["provenance"] = doc.provenance;
  return render(out);
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_document(ss.str());
  } catch (const InvalidInput& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void save_document(const std::string& path, const Document& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << serialize_document(doc);
}

TruncatedSymSet load_symset(const std::string& path) {
  Document doc = load_document(path);
  auto* X = std::get_if<TruncatedSymSet>(&doc.payload);
  if (!X) throw InvalidInput(path + ": expected kind 'symset', found '" + doc.kind() + "'");
  return std::move(*X);
}

std::string serialize_symset(const TruncatedSymSet& X, const std::string& provenance) {
  return serialize_document(Document{kFormatVersion, X, provenance, {}});
}

TruncatedSymSet canonical_form(const TruncatedSymSet& X) {
  const EdgeStructure& E = X.edges();
  std::vector<ObjectId> order(E.num_objects());
  for (ObjectId o = 0; o < E.num_objects(); ++o) order[o] = o;
  std::sort(order.begin(), order.end(),
            [&](ObjectId a, ObjectId b) { return E.object_name(a) < E.object_name(b); });
  std::vector<ObjectId> obj_to(E.num_objects());
  std::vector<std::string> objects;
  for (ObjectId o : order) {
    obj_to[o] = static_cast<ObjectId>(objects.size());
    objects.push_back(E.object_name(o));
  }
  std::vector<EdgeId> edge_order;
  for (ObjectId o : order) edge_order.push_back(E.ident(o));
  std::vector<EdgeId> rest;
  for (EdgeId f = 0; f < E.num_edges(); ++f) {
    if (!E.is_identity(f)) rest.push_back(f);
  }
  std::sort(rest.begin(), rest.end(),
            [&](EdgeId a, EdgeId b) { return E.edge_name(a) < E.edge_name(b); });
  edge_order.insert(edge_order.end(), rest.begin(), rest.end());
  std::vector<EdgeId> edge_to(E.num_edges());
  for (std::size_t i = 0; i < edge_order.size(); ++i) edge_to[edge_order[i]] = static_cast<EdgeId>(i);

  std::vector<EdgeStructure::Edge> edges;
  for (EdgeId f : edge_order) {
    const auto& e = E.edge(f);
    edges.push_back({E.is_identity(f) ? EdgeStructure::identity_name(E.object_name(e.dom)) : e.name,
                     obj_to[e.dom], obj_to[e.cod], edge_to[e.inv]});
  }
  std::vector<EdgeId> ids;
  for (std::size_t o = 0; o < order.size(); ++o) ids.push_back(static_cast<EdgeId>(o));
  std::vector<std::vector<SimplexMatrix>> lists(static_cast<std::size_t>(X.truncation()) + 1);
  for (int n = 2; n <= X.truncation(); ++n) {
    for (const SimplexMatrix& x : X.nondegenerate(n)) {
      std::vector<EdgeId> entries;
      for (EdgeId f : x.entries()) entries.push_back(edge_to[f]);
      lists[static_cast<std::size_t>(n)].emplace_back(n, std::move(entries));
    }
  }
  return TruncatedSymSet(X.truncation(), EdgeStructure(std::move(objects), std::move(edges), std::move(ids)),
                         std::move(lists));
}

}  // namespace spiny
