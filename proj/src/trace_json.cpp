#include "edgepat/trace_json.hpp"

#include <fstream>

namespace edgepat {

namespace {

nlohmann::json rows(const std::vector<State>& states, std::size_t width) {
  auto out = nlohmann::json::array();
  for (State s : states) {
    auto row = nlohmann::json::array();
    for (std::size_t a = 0; a < width; ++a) row.push_back(static_cast<bool>((s >> a) & 1U));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<State> parse_rows(const nlohmann::json& j, const char* key, std::size_t width) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw TraceFormatError(std::string("trace: \"") + key + "\" must be an array of rows");
  std::vector<State> out;
  for (const auto& row : j.at(key)) {
    if (!row.is_array() || row.size() != width)
      throw TraceFormatError(std::string("trace: every row of \"") + key + "\" needs " +
                             std::to_string(width) + " booleans");
    State s = 0;
    for (std::size_t a = 0; a < width; ++a) {
      if (!row[a].is_boolean()) throw TraceFormatError("trace: state entries must be booleans");
      if (row[a].get<bool>()) s |= State{1} << a;
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace

nlohmann::json trace_to_json(const LassoTrace& t) {
  const std::size_t w = t.alphabet().size();
  return {{"atoms", t.alphabet().names()}, {"prefix", rows(t.prefix(), w)}, {"loop", rows(t.loop(), w)}};
}

LassoTrace trace_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw TraceFormatError("trace: expected a JSON object");
  if (!j.contains("atoms") || !j.at("atoms").is_array())
    throw TraceFormatError("trace: \"atoms\" must be an array of names");
  std::vector<std::string> names;
  for (const auto& a : j.at("atoms")) {
    if (!a.is_string()) throw TraceFormatError("trace: atom names must be strings");
    names.push_back(a.get<std::string>());
  }
  Alphabet alphabet(std::move(names));
  auto prefix = parse_rows(j, "prefix", alphabet.size());
  auto loop = parse_rows(j, "loop", alphabet.size());
  if (loop.empty()) throw TraceFormatError("trace: \"loop\" must contain at least one state");
  return LassoTrace(std::move(alphabet), std::move(prefix), std::move(loop));
}

LassoTrace load_trace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TraceFormatError("cannot open trace file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw TraceFormatError(std::string("malformed trace JSON: ") + e.what());
  }
  return trace_from_json(j);
}

}  // namespace edgepat
