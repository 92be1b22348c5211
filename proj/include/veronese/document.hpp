#pragma once

#include <optional>
#include <string>
#include <vector>

#include "veronese/geometry.hpp"
#include "veronese/ring.hpp"

namespace veronese {

// On-disk description of an ideal: a ring plus exactly one payload.  Variable
// indices in files are 1-based; in memory everything is 0-based.
struct IdealDocument {
  Ring ring;
  std::optional<VeroneseSpec> veronese;
  std::optional<std::vector<Monomial>> gens;
  std::optional<std::vector<int>> fatpoint_mults;
  std::optional<std::vector<std::vector<int>>> nonfaces;  // 1-based vertex sets

  friend bool operator==(const IdealDocument& a, const IdealDocument& b);
  friend bool operator!=(const IdealDocument& a, const IdealDocument& b) { return !(a == b); }
};

// Parse a JSON document.  Malformed JSON is reported with the line it breaks
// on; schema violations name the offending field; all indices are validated
// against the ring size.
IdealDocument parse_document(const std::string& text);
IdealDocument parse_document_file(const std::string& path);

// Canonical JSON form; parse_document(serialize_document(d)) == d.
std::string serialize_document(const IdealDocument& doc);

// Materialize the document's ideal (Stanley-Reisner ideal for a complex
// payload, scheme ideal for fat points, and so on).
MonomialIdeal build_ideal(const IdealDocument& doc);

}  // namespace veronese
