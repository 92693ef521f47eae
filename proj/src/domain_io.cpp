#include "slitsqueeze/domain_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "slitsqueeze/error.hpp"

namespace slitsqueeze {

namespace {

using nlohmann::json;

std::string position(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

double number_at(const json& node, const std::string& where) {
  if (!node.is_number()) throw Error(ErrorKind::ParseError, where + ": expected a number");
  return node.get<double>();
}

}  // namespace

CircularDomain parse_domain(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // byte is one past the offending character
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw Error(ErrorKind::ParseError, position(text, byte) + ": malformed JSON");
  }
  if (!doc.is_object() || !doc.contains("holes") || !doc["holes"].is_array()) {
    throw Error(ErrorKind::ParseError, "/holes: expected an array of holes");
  }
  std::vector<Circle> holes;
  const json& list = doc["holes"];
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string where = "/holes/" + std::to_string(k);
    const json& h = list[k];
    if (!h.is_object()) throw Error(ErrorKind::ParseError, where + ": expected an object");
    if (!h.contains("center") || !h["center"].is_array() || h["center"].size() != 2) {
      throw Error(ErrorKind::ParseError, where + "/center: expected [re, im]");
    }
    if (!h.contains("radius")) throw Error(ErrorKind::ParseError, where + "/radius: missing");
    holes.push_back({{number_at(h["center"][0], where + "/center/0"), number_at(h["center"][1], where + "/center/1")},
                     number_at(h["radius"], where + "/radius")});
  }
  return make_circular_domain(holes);
}

CircularDomain load_domain(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_domain(buffer.str());
}

std::string domain_to_json(const CircularDomain& d) {
  json holes = json::array();
  for (const auto& h : d.holes()) {
    holes.push_back({{"center", {h.center.real(), h.center.imag()}}, {"radius", h.radius}});
  }
  return json{{"holes", holes}}.dump();
}

}  // namespace slitsqueeze
