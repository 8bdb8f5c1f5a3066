#include "colourlex/tsv.hpp"

#include <cstdio>
#include <set>

#include "colourlex/error.hpp"

namespace colourlex {

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(line.substr(start));
      return out;
    }
    out.emplace_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

TsvReader::TsvReader(std::string path) : path_(std::move(path)), in_(path_) {
  if (!in_) throw Error(ErrorKind::IoError, "cannot open " + path_);
}

bool TsvReader::next(std::vector<std::string>& fields) {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_number_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || line.front() == '#') continue;
    fields = split(line, '\t');
    for (auto& f : fields) f = std::string(trim(f));
    return true;
  }
  return false;
}

void TsvReader::fail(const std::string& message) const {
  throw Error(ErrorKind::ParseError, path_ + ":" + std::to_string(line_number_) + ": " + message);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
  return out;
}

std::string header_comment(std::string_view run_config) {
  return "# colourlex " COLOURLEX_VERSION " " + std::string(run_config);
}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string s(buf);
  if (s.starts_with("-") && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::vector<ThesaurusCategory> read_thesaurus(const std::string& path) {
  TsvReader reader(path);
  std::vector<ThesaurusCategory> out;
  std::set<std::string> ids;
  std::vector<std::string> f;
  while (reader.next(f)) {
    if (f.size() != 3) reader.fail("expected 3 columns (category_id, head, members)");
    ThesaurusCategory cat{f[0], f[1], {}};
    if (cat.id.empty()) reader.fail("empty category id");
    if (!ids.insert(cat.id).second) reader.fail("duplicate category id " + cat.id);
    std::set<std::string> seen;
    for (const auto& raw : split(f[2], ',')) {
      auto term = to_lower(trim(raw));
      if (term.empty()) continue;
      if (seen.insert(term).second) cat.members.push_back(std::move(term));
    }
    if (cat.members.empty()) reader.fail("category " + cat.id + " has no members");
    out.push_back(std::move(cat));
  }
  return out;
}

const ThesaurusCategory* find_category(std::span<const ThesaurusCategory> thesaurus, std::string_view id) {
  for (const auto& c : thesaurus) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

}  // namespace colourlex
