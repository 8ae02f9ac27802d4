#include <algorithm>
#include <sstream>

#include "braceforge/classify.hpp"
#include "braceforge/errors.hpp"

namespace braceforge {

namespace {

constexpr std::string_view kHeader = "BRACEFORGE-CLASSES 1";

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = s.find(sep, start);
    out.push_back(s.substr(start, end == std::string::npos ? std::string::npos : end - start));
    if (end == std::string::npos) return out;
    start = end + 1;
  }
}

bool is_hex_id(const std::string& s) {
  return s.size() == 16 && s.find_first_not_of("0123456789abcdef") == std::string::npos;
}

std::uint64_t parse_count(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("bad " + what + " '" + s + "'");
  return std::stoull(s);
}

}  // namespace

std::string format_class_list(const GroupSpec& spec, std::span<const BraceClass> classes) {
  std::string out = std::string(kHeader) + "\n" + spec.to_string() + "\n";
  for (const BraceClass& c : classes) {
    out += c.invariants.mult_fp.id() + ";" + c.invariants.kernel_fp.id() + ";" +
           c.invariants.quotient_fp.id() + "\t" + std::to_string(c.invariants.class_length) +
           "\t" + format_hol_list(generating_set(spec, c.representative)) + "\n";
  }
  out += "count=" + std::to_string(classes.size()) + "\n";
  return out;
}

ClassList parse_class_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  if (lines.size() < 3 || lines[0] != kHeader) throw ParseError("not a class list");
  ClassList list;
  list.spec = GroupSpec::parse(lines[1]);
  if (lines.back().rfind("count=", 0) != 0) throw ParseError("class list lacks its count footer");
  const std::uint64_t count = parse_count(lines.back().substr(6), "count");
  if (count != lines.size() - 3) throw ParseError("count footer does not match the records");
  for (std::size_t i = 2; i + 1 < lines.size(); ++i) {
    const std::vector<std::string> fields = split(lines[i], '\t');
    if (fields.size() != 3) throw ParseError("record " + std::to_string(i - 1) + " needs 3 fields");
    const std::vector<std::string> ids = split(fields[0], ';');
    if (ids.size() != 3 || !std::all_of(ids.begin(), ids.end(), is_hex_id))
      throw ParseError("record " + std::to_string(i - 1) + " has a bad invariant tuple");
    ClassRecord r;
    r.mult_id = ids[0];
    r.kernel_id = ids[1];
    r.quotient_id = ids[2];
    r.class_length = parse_count(fields[1], "class length");
    r.subgroup = closure(list.spec, parse_hol_list(list.spec, fields[2]));
    list.records.push_back(std::move(r));
  }
  return list;
}

std::string format_report(const ClassList& list, const std::map<std::string, std::string>& names) {
  std::map<std::string, std::uint64_t> counts;
  for (const ClassRecord& r : list.records) {
    auto it = names.find(r.mult_id);
    ++counts[it == names.end() ? r.mult_id : it->second];
  }
  std::string out;
  for (const auto& [id, count] : counts) out += id + "\t" + std::to_string(count) + "\n";
  out += "# total=" + std::to_string(list.records.size()) + "\n";
  return out;
}

std::map<std::string, std::string> parse_id_map(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::map<std::string, std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size())
      throw ParseError("id map line '" + line + "' is not '<id> TAB <name>'");
    out[line.substr(0, tab)] = line.substr(tab + 1);
  }
  return out;
}

}  // namespace braceforge
