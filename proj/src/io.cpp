#include "qsdl/io.hpp"

#include "qsdl/arith.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef QSDL_DEFAULT_DATA_DIR
#define QSDL_DEFAULT_DATA_DIR "data"
#endif

namespace qsdl {

namespace {
std::string trim(const std::string &s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}
}  // namespace

std::vector<TsvRow> read_tsv(std::istream &in) {
  std::vector<TsvRow> rows;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    TsvRow row{no, {}};
    std::stringstream ss(t);
    std::string cell;
    while (std::getline(ss, cell, '\t')) row.cols.push_back(trim(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TsvRow> read_tsv_file(const std::filesystem::path &p) {
  std::ifstream in(p);
  if (!in) throw ParseError("cannot open " + p.string(), 0);
  return read_tsv(in);
}

std::string read_text_file(const std::filesystem::path &p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ParseError("cannot open " + p.string(), 0);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::filesystem::path data_dir(const std::string &override_dir) {
  if (!override_dir.empty()) return override_dir;
  if (const char *env = std::getenv("QSDL_DATA"); env && *env) return env;
  return QSDL_DEFAULT_DATA_DIR;
}

std::string comment_lines(const std::string &text) {
  std::istringstream in(text);
  std::string out, line;
  while (std::getline(in, line)) out += line.empty() ? "#\n" : "# " + line + '\n';
  return out;
}

}  // namespace qsdl
