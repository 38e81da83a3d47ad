#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <vector>

namespace qsdl {

struct TsvRow {
  std::size_t line = 0;
  std::vector<std::string> cols;
};

// Tab-separated rows; blank lines and lines starting with '#' are skipped,
// cells are trimmed.
std::vector<TsvRow> read_tsv(std::istream &in);
std::vector<TsvRow> read_tsv_file(const std::filesystem::path &p);

// Each line of text as a '# ' comment line; empty text gives nothing.
std::string comment_lines(const std::string &text);

std::string read_text_file(const std::filesystem::path &p);

// Data directory: explicit override, else $QSDL_DATA, else the source tree's
// data/ directory baked in at build time.
std::filesystem::path data_dir(const std::string &override_dir = {});

}  // namespace qsdl
