#include "veronese/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace veronese {

using nlohmann::json;

bool operator==(const IdealDocument& a, const IdealDocument& b) {
  if (a.ring != b.ring) return false;
  if (a.veronese.has_value() != b.veronese.has_value()) return false;
  if (a.veronese) {
    const auto& pa = a.veronese->pieces;
    const auto& pb = b.veronese->pieces;
    if (pa.size() != pb.size()) return false;
    for (size_t i = 0; i < pa.size(); ++i)
      if (pa[i].support != pb[i].support || pa[i].power != pb[i].power) return false;
  }
  return a.gens == b.gens && a.fatpoint_mults == b.fatpoint_mults && a.nonfaces == b.nonfaces;
}

namespace {

[[noreturn]] void fail(const std::string& msg) { throw SpecError(msg); }

int require_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) fail("field '" + field + "' must be an integer");
  return j.get<int>();
}

// 1-based index from a file, checked against the ring size.
int require_index(const json& j, const std::string& field, int n) {
  int v = require_int(j, field);
  if (v < 1 || v > n)
    fail("index " + std::to_string(v) + " in '" + field + "' is out of range 1.." +
         std::to_string(n));
  return v;
}

Ring parse_ring(const json& j) {
  if (!j.is_object()) fail("field 'ring' must be an object");
  for (const auto& [key, _] : j.items())
    if (key != "blocks" && key != "names") fail("unknown field 'ring." + key + "'");
  if (!j.contains("blocks")) fail("field 'ring.blocks' is required");
  const json& jb = j.at("blocks");
  if (!jb.is_array() || jb.empty()) fail("field 'ring.blocks' must be a nonempty array");
  std::vector<int> blocks;
  for (const auto& e : jb) {
    int s = require_int(e, "ring.blocks");
    if (s < 1) fail("ring block sizes must be positive");
    blocks.push_back(s);
  }
  if (j.contains("names")) {
    const json& jn = j.at("names");
    if (!jn.is_array()) fail("field 'ring.names' must be an array");
    std::vector<std::string> names;
    for (const auto& e : jn) {
      if (!e.is_string()) fail("field 'ring.names' must hold strings");
      names.push_back(e.get<std::string>());
    }
    return Ring(std::move(blocks), std::move(names));
  }
  if (blocks.size() == 1) return Ring::standard(blocks[0]);
  return Ring::blocked(std::move(blocks));
}

}  // namespace

IdealDocument parse_document(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    byte = std::min(byte, text.size());
    long line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n');
    fail("parse error at line " + std::to_string(line) + ": " + e.what());
  }
  if (!root.is_object()) fail("document must be a JSON object");
  for (const auto& [key, _] : root.items())
    if (key != "ring" && key != "veronese" && key != "gens" && key != "fatpoints" &&
        key != "complex")
      fail("unknown field '" + key + "'");
  if (!root.contains("ring")) fail("field 'ring' is required");

  IdealDocument doc;
  doc.ring = parse_ring(root.at("ring"));
  const int n = doc.ring.nvars();

  std::vector<std::string> present;
  for (const char* key : {"veronese", "gens", "fatpoints", "complex"})
    if (root.contains(key)) present.push_back(key);
  if (present.empty()) fail("document needs one of 'veronese', 'gens', 'fatpoints', 'complex'");
  if (present.size() > 1) {
    std::string msg = "duplicate payloads:";
    for (const auto& p : present) msg += " '" + p + "'";
    fail(msg);
  }

  if (root.contains("veronese")) {
    const json& jv = root.at("veronese");
    if (!jv.is_array() || jv.empty()) fail("field 'veronese' must be a nonempty array");
    VeroneseSpec spec;
    for (const auto& piece : jv) {
      if (!piece.is_object()) fail("entries of 'veronese' must be objects");
      for (const auto& [key, _] : piece.items())
        if (key != "support" && key != "power") fail("unknown field 'veronese." + key + "'");
      if (!piece.contains("support")) fail("field 'veronese.support' is required");
      const json& js = piece.at("support");
      if (!js.is_array() || js.empty()) fail("field 'veronese.support' must be a nonempty array");
      std::vector<int> support;
      for (const auto& e : js) support.push_back(require_index(e, "veronese.support", n) - 1);
      int power = 1;
      if (piece.contains("power")) {
        power = require_int(piece.at("power"), "veronese.power");
        if (power < 1) fail("field 'veronese.power' must be positive");
      }
      spec.pieces.push_back(VeronesePiece{std::move(support), power});
    }
    spec.validate(doc.ring);
    doc.veronese = std::move(spec);
  } else if (root.contains("gens")) {
    const json& jg = root.at("gens");
    if (!jg.is_array()) fail("field 'gens' must be an array");
    std::vector<Monomial> gens;
    for (const auto& row : jg) {
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        fail("each entry of 'gens' must list " + std::to_string(n) + " exponents");
      std::vector<int> exps;
      for (const auto& e : row) {
        int v = require_int(e, "gens");
        if (v < 0) fail("exponents in 'gens' must be nonnegative");
        exps.push_back(v);
      }
      gens.emplace_back(std::move(exps));
    }
    doc.gens = std::move(gens);
  } else if (root.contains("fatpoints")) {
    const json& jf = root.at("fatpoints");
    if (!jf.is_object()) fail("field 'fatpoints' must be an object");
    for (const auto& [key, _] : jf.items())
      if (key != "mults") fail("unknown field 'fatpoints." + key + "'");
    if (!jf.contains("mults")) fail("field 'fatpoints.mults' is required");
    const json& jm = jf.at("mults");
    if (!jm.is_array() || jm.empty()) fail("field 'fatpoints.mults' must be a nonempty array");
    std::vector<int> mults;
    for (const auto& e : jm) {
      int a = require_int(e, "fatpoints.mults");
      if (a < 1) fail("point multiplicities must be positive");
      mults.push_back(a);
    }
    FatPointScheme probe(doc.ring, mults);  // full validation against the blocks
    doc.fatpoint_mults = std::move(mults);
  } else {
    const json& jc = root.at("complex");
    if (!jc.is_object()) fail("field 'complex' must be an object");
    for (const auto& [key, _] : jc.items())
      if (key != "nonfaces") fail("unknown field 'complex." + key + "'");
    if (!jc.contains("nonfaces")) fail("field 'complex.nonfaces' is required");
    const json& jn = jc.at("nonfaces");
    if (!jn.is_array()) fail("field 'complex.nonfaces' must be an array");
    std::vector<std::vector<int>> nonfaces;
    for (const auto& face : jn) {
      if (!face.is_array() || face.empty())
        fail("each entry of 'complex.nonfaces' must be a nonempty array");
      std::vector<int> f;
      for (const auto& e : face) f.push_back(require_index(e, "complex.nonfaces", n));
      nonfaces.push_back(std::move(f));
    }
    SimplicialComplexSpec probe(n, nonfaces);  // range + incomparability checks
    doc.nonfaces = std::move(nonfaces);
  }
  return doc;
}

IdealDocument parse_document_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

std::string serialize_document(const IdealDocument& doc) {
  json root;
  root["ring"]["blocks"] = doc.ring.blocks();
  root["ring"]["names"] = doc.ring.names();
  if (doc.veronese) {
    json jv = json::array();
    for (const auto& piece : doc.veronese->pieces) {
      json jp;
      json js = json::array();
      for (int v : piece.support) js.push_back(v + 1);
      jp["support"] = std::move(js);
      jp["power"] = piece.power;
      jv.push_back(std::move(jp));
    }
    root["veronese"] = std::move(jv);
  } else if (doc.gens) {
    json jg = json::array();
    for (const auto& g : *doc.gens) jg.push_back(g.exps());
    root["gens"] = std::move(jg);
  } else if (doc.fatpoint_mults) {
    root["fatpoints"]["mults"] = *doc.fatpoint_mults;
  } else if (doc.nonfaces) {
    root["complex"]["nonfaces"] = *doc.nonfaces;
  } else {
    fail("document has no payload");
  }
  return root.dump(2) + "\n";
}

MonomialIdeal build_ideal(const IdealDocument& doc) {
  if (doc.veronese) return veronese_ideal(doc.ring, *doc.veronese);
  if (doc.gens) return MonomialIdeal(doc.ring, *doc.gens);
  if (doc.fatpoint_mults) return fat_points_ideal(FatPointScheme(doc.ring, *doc.fatpoint_mults));
  if (doc.nonfaces) {
    SimplicialComplexSpec spec(doc.ring.nvars(), *doc.nonfaces);
    MonomialIdeal sr = stanley_reisner_ideal(spec);
    return MonomialIdeal(doc.ring, sr.gens());  // keep the document's variable names
  }
  throw SpecError("document has no payload");
}

}  // namespace veronese
