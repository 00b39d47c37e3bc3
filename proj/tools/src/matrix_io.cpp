#include "modkit_cli/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace modkit::cli {

namespace {

Eigen::Index positive_size(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  const Json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw ParseError(std::string("field \"") + key + "\" must be a positive integer");
  }
  return static_cast<Eigen::Index>(v.get<long long>());
}

ComplexVector entries(const Json& j, Eigen::Index expected) {
  if (!j.contains("data") || !j.at("data").is_array()) throw ParseError("missing array field \"data\"");
  const Json& data = j.at("data");
  if (static_cast<Eigen::Index>(data.size()) != expected) {
    throw ParseError("\"data\" has " + std::to_string(data.size()) + " entries, expected " + std::to_string(expected));
  }
  ComplexVector out(expected);
  for (Eigen::Index k = 0; k < expected; ++k) {
    const Json& pair = data[static_cast<std::size_t>(k)];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw ParseError("data[" + std::to_string(k) + "] is not a [re, im] pair");
    }
    const double re = pair[0].get<double>(), im = pair[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) throw ParseError("data[" + std::to_string(k) + "] is not finite");
    out(k) = Complex(re, im);
  }
  return out;
}

Json pairs(const ComplexVector& v) {
  Json data = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) data.push_back(Json::array({v(k).real(), v(k).imag()}));
  return data;
}

}  // namespace

std::string read_source(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("matrix payload must be a JSON object");
  const Eigen::Index rows = positive_size(j, "rows"), cols = positive_size(j, "cols");
  return unvec(BipartiteVector(rows, cols, entries(j, rows * cols)));
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["data"] = pairs(vec(m).amplitudes);
  return j;
}

BipartiteVector bipartite_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("vector payload must be a JSON object");
  if (j.contains("rows")) return vec(matrix_from_json(j));
  const Eigen::Index left = positive_size(j, "dim_left"), right = positive_size(j, "dim_right");
  return BipartiteVector(left, right, entries(j, left * right));
}

Json bipartite_to_json(const BipartiteVector& v) {
  Json j;
  j["dim_left"] = v.dim_left;
  j["dim_right"] = v.dim_right;
  j["data"] = pairs(v.amplitudes);
  return j;
}

ComplexMatrix load_matrix(const std::string& path) { return matrix_from_json(parse_json(read_source(path), path)); }

BipartiteVector load_bipartite(const std::string& path) {
  return bipartite_from_json(parse_json(read_source(path), path));
}

Json real_array(const RealVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json complex_value(Complex z) { return Json::array({z.real(), z.imag()}); }

}  // namespace modkit::cli
