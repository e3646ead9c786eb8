#include "json.hpp"

#include "digifrac/errors.hpp"
#include "digifrac/fractal.hpp"

namespace digifrac {

std::string to_json(const Prefractal& p) {
  nlohmann::ordered_json doc;
  doc["m"] = p.system().radix();
  doc["b"] = p.system().balance();
  doc["depth"] = p.depth();
  doc["count"] = p.size();
  auto squares = nlohmann::ordered_json::array();
  for (const auto& s : p.squares()) squares.push_back({s.i, s.j});
  doc["squares"] = std::move(squares);
  return doc.dump();
}

Prefractal prefractal_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("prefractal JSON: ") + e.what());
  }
  auto integer_field = [&](const char* key) -> std::int64_t {
    if (!doc.is_object() || !doc.contains(key) || !doc[key].is_number_integer()) {
      throw ParseError(std::string("prefractal JSON: missing integer field '") + key + "'");
    }
    return doc[key].get<std::int64_t>();
  };
  const DigitSystem system(static_cast<int>(integer_field("m")), static_cast<int>(integer_field("b")));
  const auto depth = integer_field("depth");
  const auto count = integer_field("count");
  if (!doc.contains("squares") || !doc["squares"].is_array()) {
    throw ParseError("prefractal JSON: missing array field 'squares'");
  }
  const auto [lo, hi] = index_range(system, static_cast<int>(depth));
  std::vector<Square> squares;
  squares.reserve(doc["squares"].size());
  for (const auto& entry : doc["squares"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer()) {
      throw ParseError("prefractal JSON: each square must be [i, j]");
    }
    const Square s{entry[0].get<std::int64_t>(), entry[1].get<std::int64_t>()};
    if (s.i < lo || s.i > hi || s.j < lo || s.j > hi) {
      throw DomainError("prefractal JSON: square outside the depth-" + std::to_string(depth) +
                        " index range");
    }
    squares.push_back(s);
  }
  if (count != static_cast<std::int64_t>(squares.size())) {
    throw DomainError("prefractal JSON: count does not match the number of squares");
  }
  return Prefractal(system, static_cast<int>(depth), std::move(squares));
}

}  // namespace digifrac
