#include "cubehom/pcs_io.hpp"

#include <algorithm>

#include <json.hpp>

#include "cubehom/errors.hpp"

namespace cubehom {

namespace {

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

CubeIdx resolve_vertex(const PrecubicalSet& k, const std::string& id, const char* role) {
  auto c = k.find(id);
  if (!c) throw InputError(std::string(role) + " vertex '" + id + "' does not exist");
  if (k.dim(*c) != 0)
    throw InputError(std::string(role) + " '" + id + "' is not a vertex (dim " +
                     std::to_string(k.dim(*c)) + ")");
  return *c;
}

}  // namespace

PcsDocument parse_pcs(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte);
    throw InputError("syntax error at line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": " + e.what());
  }
  if (!doc.is_object()) throw InputError("document root must be an object");
  if (!doc.contains("cubes") || !doc["cubes"].is_array())
    throw InputError("missing 'cubes' array");

  PcsBuilder builder;
  int max_dim = 0;
  for (const auto& entry : doc["cubes"]) {
    if (!entry.is_object() || !entry.contains("id") || !entry["id"].is_string() ||
        !entry.contains("dim") || !entry["dim"].is_number_integer())
      throw InputError("each cube needs a string 'id' and an integer 'dim'");
    const std::string id = entry["id"].get<std::string>();
    const int dim = entry["dim"].get<int>();
    std::vector<std::array<std::string, 2>> faces;
    if (entry.contains("faces")) {
      if (!entry["faces"].is_array())
        throw InputError("cube '" + id + "': 'faces' must be an array");
      for (const auto& pair : entry["faces"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
          throw InputError("cube '" + id + "': each face entry must be a pair of ids");
        faces.push_back({pair[0].get<std::string>(), pair[1].get<std::string>()});
      }
    }
    builder.add_cube(id, dim, std::move(faces));
    max_dim = std::max(max_dim, dim);
  }
  if (doc.contains("dims")) {
    if (!doc["dims"].is_number_integer()) throw InputError("'dims' must be an integer");
    if (doc["dims"].get<int>() < max_dim)
      throw InputError("'dims' is " + std::to_string(doc["dims"].get<int>()) +
                       " but a cube of dimension " + std::to_string(max_dim) + " is present");
  }

  PcsDocument out;
  out.complex = std::move(builder).build();
  if (doc.contains("source")) {
    if (!doc["source"].is_string()) throw InputError("'source' must be a cube id");
    out.source = resolve_vertex(out.complex, doc["source"].get<std::string>(), "source");
  }
  if (doc.contains("target")) {
    if (!doc["target"].is_string()) throw InputError("'target' must be a cube id");
    out.target = resolve_vertex(out.complex, doc["target"].get<std::string>(), "target");
  }
  return out;
}

std::string serialize_pcs(const PrecubicalSet& k, std::optional<CubeIdx> source,
                          std::optional<CubeIdx> target) {
  std::vector<CubeIdx> order;
  order.reserve(k.size());
  for (int d = 0; d <= k.max_dim(); ++d)
    for (CubeIdx c : k.grade(d)) order.push_back(c);
  std::stable_sort(order.begin(), order.end(), [&](CubeIdx a, CubeIdx b) {
    if (k.dim(a) != k.dim(b)) return k.dim(a) < k.dim(b);
    return k.name(a) < k.name(b);
  });

  nlohmann::ordered_json doc;
  doc["dims"] = std::max(0, k.max_dim());
  doc["cubes"] = nlohmann::ordered_json::array();
  for (CubeIdx c : order) {
    nlohmann::ordered_json entry;
    entry["id"] = k.name(c);
    entry["dim"] = k.dim(c);
    entry["faces"] = nlohmann::ordered_json::array();
    for (int dir = 1; dir <= k.dim(c); ++dir)
      entry["faces"].push_back({k.name(k.face(c, dir, 0)), k.name(k.face(c, dir, 1))});
    doc["cubes"].push_back(std::move(entry));
  }
  if (source) doc["source"] = k.name(*source);
  if (target) doc["target"] = k.name(*target);
  return doc.dump(2) + "\n";
}

}  // namespace cubehom
