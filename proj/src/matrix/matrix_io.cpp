#include "subinv/matrix/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "subinv/errors.hpp"

namespace subinv {

RingMatrix matrix_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("matrix document must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "ring" && key != "n" && key != "rows") throw ParseError("unknown matrix field \"" + key + "\"");
  }
  if (!doc.contains("ring") || !doc["ring"].is_string()) throw ParseError("matrix document needs a \"ring\" string");
  if (!doc.contains("n") || !doc["n"].is_number_unsigned()) {
    throw ParseError("matrix document needs a non-negative integer \"n\"");
  }
  if (!doc.contains("rows") || !doc["rows"].is_array()) throw ParseError("matrix document needs a \"rows\" array");

  RingHandle ring = parse_ring_spec(doc["ring"].get<std::string>());
  const auto n = doc["n"].get<std::size_t>();
  const auto& rows = doc["rows"];
  if (rows.size() != n) throw ParseError("expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));

  std::vector<Element> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) {
      throw ParseError("every row needs exactly " + std::to_string(n) + " entries");
    }
    for (const auto& entry : row) entries.push_back(ring->from_json(entry));
  }
  return RingMatrix(ring, n, std::move(entries));
}

nlohmann::ordered_json matrix_to_json(const RingMatrix& m) {
  nlohmann::ordered_json doc;
  doc["ring"] = m.ring().descriptor();
  doc["n"] = m.size();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(nlohmann::ordered_json(m.ring()->to_json(m(i, j))));
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

RingMatrix parse_matrix(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed matrix JSON: ") + e.what());
  }
  return matrix_from_json(doc);
}

std::string serialize_matrix(const RingMatrix& m) { return matrix_to_json(m).dump(); }

RingMatrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix(buffer.str());
}

nlohmann::ordered_json fraction_matrix_to_json(const FractionMatrix& m) {
  const Localization& loc = m.ring();
  nlohmann::ordered_json doc;
  doc["ring"] = loc.base().descriptor();
  doc["denominators"] = loc.denominators().descriptor();
  doc["n"] = m.size();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.size(); ++j) {
      nlohmann::ordered_json entry = nlohmann::ordered_json::array();
      entry.push_back(nlohmann::ordered_json(loc.base()->to_json(m(i, j).num)));
      entry.push_back(nlohmann::ordered_json(loc.base()->to_json(m(i, j).den)));
      row.push_back(std::move(entry));
    }
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

}  // namespace subinv
