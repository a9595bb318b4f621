#pragma once

#include <map>
#include <string>
#include <vector>

#include "fermihat/matrix.hpp"

namespace fermihat {

/// Named matrices, e.g. the contents of a matrix file.
using MatrixTable = std::map<std::string, MatrixC>;

/// Parses {"name": [[[re, im], ...], ...], ...}. Entries may also be plain
/// real numbers. Throws Error on malformed or ragged input.
MatrixTable parse_matrix_table(const std::string& json_text);
MatrixTable load_matrix_file(const std::string& path);

/// Kraus operators from a matrix file: either a JSON array of matrices or an
/// object whose values are matrices (taken in key order).
std::vector<MatrixC> parse_matrix_list(const std::string& json_text);
std::vector<MatrixC> load_matrix_list(const std::string& path);

/// Inverse of parse_matrix_table for one matrix.
std::string matrix_to_json(const MatrixC& m);

}  // namespace fermihat
