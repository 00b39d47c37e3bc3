#pragma once

// JSON payloads for the command-line tool.
//
//   matrix: {"rows": r, "cols": c, "data": [[re, im], ...]}   row-major
//   vector: {"dim_left": dy, "dim_right": dx, "data": [[re, im], ...]}

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "modkit/vec_ops.hpp"

namespace modkit::cli {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent input; maps to exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads a file, or stdin when path is "-". Throws ParseError.
std::string read_source(const std::string& path);

Json parse_json(const std::string& text, const std::string& origin);

ComplexMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const ComplexMatrix& m);

/// Accepts either payload; a matrix payload is read as unvec(u).
BipartiteVector bipartite_from_json(const Json& j);
Json bipartite_to_json(const BipartiteVector& v);

ComplexMatrix load_matrix(const std::string& path);
BipartiteVector load_bipartite(const std::string& path);

Json real_array(const RealVector& v);
Json complex_value(Complex z);

}  // namespace modkit::cli
