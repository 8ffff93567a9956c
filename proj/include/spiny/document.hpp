#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spiny/constructors.hpp"
#include "spiny/symset.hpp"

namespace spiny {

inline constexpr const char* kFormatVersion = "1";

/// A file on disk: one payload plus free-text provenance.
struct Document {
  using Payload = std::variant<TruncatedSymSet, GroupTable, GroupoidPresentation, TransporterSpec>;

  std::string format_version = kFormatVersion;
  Payload payload;
  std::string provenance;
  /// Loader remarks such as dropped degenerate simplices. Not serialized.
  std::vector<std::string> notes;

  std::string kind() const;
};

/// Parses JSON text. Schema violations, unknown names, and closure or
/// validity failures throw InvalidInput naming the field or simplex.
Document parse_document(std::string_view text);

/// Canonical JSON: objects and edges sorted by name, matrices written with
/// edge names and sorted. The output always ends in a newline.
std::string serialize_document(const Document& doc);

Document load_document(const std::string& path);
void save_document(const std::string& path, const Document& doc);

/// Convenience wrappers for the common symmetric-set payload.
TruncatedSymSet load_symset(const std::string& path);
std::string serialize_symset(const TruncatedSymSet& X, const std::string& provenance = "");

/// The same symmetric set rebuilt with objects and edges sorted by name.
TruncatedSymSet canonical_form(const TruncatedSymSet& X);

}  // namespace spiny
