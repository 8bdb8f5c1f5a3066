#pragma once

#include <cstddef>
#include <fstream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "colourlex/core.hpp"

namespace colourlex {

std::vector<std::string> split(std::string_view line, char sep);
std::string_view trim(std::string_view s);

/// Reads tab-separated rows, skipping blank lines and lines starting with '#'.
class TsvReader {
 public:
  explicit TsvReader(std::string path);

  bool next(std::vector<std::string>& fields);
  std::size_t line_number() const { return line_number_; }
  const std::string& path() const { return path_; }

  /// Throws ParseError annotated with file and line.
  [[noreturn]] void fail(const std::string& message) const;

 private:
  std::string path_;
  std::ifstream in_;
  std::size_t line_number_ = 0;
};

/// Opens an output file, throwing IoError on failure.
std::ofstream open_output(const std::string& path);

/// The first line of every output file.
std::string header_comment(std::string_view run_config);

/// Fixed-point formatting with the given number of decimals.
std::string format_fixed(double value, int decimals);

/// Thesaurus file: category_id, head, comma-separated members.
std::vector<ThesaurusCategory> read_thesaurus(const std::string& path);

const ThesaurusCategory* find_category(std::span<const ThesaurusCategory> thesaurus, std::string_view id);

}  // namespace colourlex
