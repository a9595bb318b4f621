#include "fermihat/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "fermihat/errors.hpp"
#include <nlohmann/json.hpp>

namespace fermihat {

namespace {

using nlohmann::json;

Complex parse_entry(const json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
    return {e[0].get<double>(), e[1].get<double>()};
  }
  throw Error("matrix entry must be a number or a [re, im] pair, got " + e.dump());
}

MatrixC parse_matrix(const json& rows, const std::string& name) {
  if (!rows.is_array() || rows.empty()) {
    throw Error("matrix '" + name + "' must be a non-empty array of rows");
  }
  const std::size_t n_cols = rows[0].is_array() ? rows[0].size() : 0;
  if (n_cols == 0) throw Error("matrix '" + name + "' has an empty first row");
  MatrixC m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(n_cols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != n_cols) {
      throw Error("matrix '" + name + "' is ragged at row " + std::to_string(i));
    }
    for (std::size_t j = 0; j < n_cols; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = parse_entry(rows[i][j]);
    }
  }
  return m;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open matrix file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

MatrixTable parse_matrix_table(const std::string& json_text) {
  const json doc = parse_json(json_text);
  if (!doc.is_object()) throw Error("matrix file must hold a JSON object of named matrices");
  MatrixTable out;
  for (const auto& [name, rows] : doc.items()) out.emplace(name, parse_matrix(rows, name));
  return out;
}

MatrixTable load_matrix_file(const std::string& path) { return parse_matrix_table(read_file(path)); }

std::vector<MatrixC> parse_matrix_list(const std::string& json_text) {
  const json doc = parse_json(json_text);
  std::vector<MatrixC> out;
  if (doc.is_array()) {
    for (std::size_t i = 0; i < doc.size(); ++i) {
      out.push_back(parse_matrix(doc[i], "#" + std::to_string(i)));
    }
  } else if (doc.is_object()) {
    for (const auto& [name, rows] : doc.items()) out.push_back(parse_matrix(rows, name));
  } else {
    throw Error("Kraus file must hold a JSON array or object of matrices");
  }
  return out;
}

std::vector<MatrixC> load_matrix_list(const std::string& path) {
  return parse_matrix_list(read_file(path));
}

std::string matrix_to_json(const MatrixC& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows.dump();
}

}  // namespace fermihat
