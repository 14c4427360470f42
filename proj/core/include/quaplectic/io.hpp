#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "quaplectic/linalg.hpp"

namespace quaplectic::io {

// 17 significant digits, deterministic
std::string fmt(double v);

std::string matrix_market(const SparseOperator& op, const std::string& comment = "");
SparseOperator read_matrix_market(const std::string& text);

std::string csv_field(const std::string& s);
std::string csv_row(const std::vector<std::string>& fields);

using KeyValues = std::map<std::string, std::string>;
// '#' starts a comment; blank lines ignored; whitespace around keys and values trimmed
KeyValues parse_key_values(const std::string& text);
std::string write_key_values(const KeyValues& kv);

// write to a sibling temporary then rename
void write_atomic(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

}  // namespace quaplectic::io
