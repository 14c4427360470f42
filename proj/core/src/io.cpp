#include "quaplectic/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace quaplectic::io {

std::string fmt(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string matrix_market(const SparseOperator& op, const std::string& comment) {
  std::ostringstream os;
  os << "%%MatrixMarket matrix coordinate complex general\n";
  if (!comment.empty()) os << "% " << comment << "\n";
  os << op.rows() << " " << op.cols() << " " << op.nonZeros() << "\n";
  for (int k = 0; k < op.outerSize(); ++k)
    for (SparseOperator::InnerIterator it(op, k); it; ++it)
      os << it.row() + 1 << " " << it.col() + 1 << " " << fmt(it.value().real()) << " "
         << fmt(it.value().imag()) << "\n";
  return os.str();
}

SparseOperator read_matrix_market(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::getline(is, line);
  if (line.rfind("%%MatrixMarket matrix coordinate", 0) != 0) throw std::runtime_error("not a Matrix Market file");
  const bool complex_field = line.find("complex") != std::string::npos;
  while (std::getline(is, line) && !line.empty() && line[0] == '%') {
  }
  std::istringstream hs(line);
  long rows = 0, cols = 0, nnz = 0;
  hs >> rows >> cols >> nnz;
  std::vector<Eigen::Triplet<cd>> t;
  for (long i = 0; i < nnz; ++i) {
    long r = 0, c = 0;
    double re = 0, im = 0;
    is >> r >> c >> re;
    if (complex_field) is >> im;
    t.emplace_back(static_cast<int>(r - 1), static_cast<int>(c - 1), cd(re, im));
  }
  SparseOperator m(static_cast<int>(rows), static_cast<int>(cols));
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\r\n";
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

KeyValues parse_key_values(const std::string& text) {
  KeyValues kv;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::runtime_error("line " + std::to_string(lineno) + ": expected key=value");
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

std::string write_key_values(const KeyValues& kv) {
  std::string out;
  for (const auto& [k, v] : kv) out += k + "=" + v + "\n";
  return out;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + tmp.string());
    os << content;
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace quaplectic::io
