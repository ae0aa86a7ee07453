#include "json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace entcert::json_io {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CMat matrix_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw ParseError(what + ": expected a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) throw ParseError(what + ": row 0 is not a non-empty array");
  const std::size_t cols = j[0].size();
  std::vector<cplx> entries;
  entries.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != cols)
      throw ParseError(what + ": row " + std::to_string(r) + " has " +
                       std::to_string(row.is_array() ? row.size() : 0) + " entries, expected " +
                       std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) {
      const json& z = row[c];
      const std::string where = what + ": entry (" + std::to_string(r) + "," + std::to_string(c) + ")";
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
        throw ParseError(where + " must be a [re, im] pair of numbers");
      const double re = z[0].get<double>();
      const double im = z[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im)) throw ParseError(where + " is not finite");
      entries.emplace_back(re, im);
    }
  }
  return CMat(rows, cols, std::move(entries));
}

std::string matrix_to_json(const CMat& m, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  std::ostringstream os;
  os << "[\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << pad << "  [";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << "[" << format_double(m(r, c).real()) << ", " << format_double(m(r, c).imag()) << "]";
    }
    os << "]" << (r + 1 < m.rows() ? "," : "") << "\n";
  }
  os << pad << "]";
  return os.str();
}

json parse_document(const std::string& text, const std::string& what) {
  try {
    json j = json::parse(text);
    if (!j.is_object()) throw ParseError(what + ": top-level value must be an object");
    return j;
  } catch (const json::parse_error& e) {
    throw ParseError(what + ": " + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << text;
  if (!out) throw ValidationError("write failed for " + path.string());
}

std::size_t require_dim(const json& j, const char* key, const std::string& what) {
  if (!j.contains(key)) throw ParseError(what + ": missing field \"" + key + "\"");
  const json& v = j[key];
  if (!v.is_number_integer() || v.get<long long>() <= 0)
    throw ParseError(what + ": field \"" + key + "\" must be a positive integer");
  return v.get<std::size_t>();
}

}  // namespace entcert::json_io
