// Trace file format:
//   {"atoms":["P","Q"],"prefix":[[true,false],...],"loop":[[...],...]}
// Row i is the state at position i; column order follows "atoms".
#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "edgepat/trace.hpp"

namespace edgepat {

class TraceFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json trace_to_json(const LassoTrace& t);
LassoTrace trace_from_json(const nlohmann::json& j);
LassoTrace load_trace_file(const std::string& path);

}  // namespace edgepat
