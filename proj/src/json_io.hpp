#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "entcert/linalg.hpp"

namespace entcert::json_io {

/// Complex matrix as an array of rows of [re, im] pairs. `what` prefixes
/// error messages.
CMat matrix_from_json(const nlohmann::json& j, const std::string& what);

/// Same layout, written by hand so every number carries 17 significant digits.
std::string matrix_to_json(const CMat& m, int indent);

std::string format_double(double v);

nlohmann::json parse_document(const std::string& text, const std::string& what);
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

/// Required non-negative integer field.
std::size_t require_dim(const nlohmann::json& j, const char* key, const std::string& what);

}  // namespace entcert::json_io
