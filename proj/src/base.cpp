#include "lendkit/base.hpp"

namespace lendkit {

std::string escape_id(std::string_view raw) {
  static constexpr std::string_view special = "\\(),;>[]{}|:";
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    if (special.find(c) != std::string_view::npos) out += '\\';
    out += c;
  }
  return out;
}

std::string tuple_id(const std::vector<std::string>& parts) {
  std::string out = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += escape_id(parts[i]);
  }
  out += ')';
  return out;
}

std::string pair_id(std::string_view a, std::string_view b) {
  std::string out = "(";
  out += escape_id(a);
  out += ',';
  out += escape_id(b);
  out += ')';
  return out;
}

std::string arrow_id(std::string_view src, std::string_view dst, std::string_view payload) {
  std::string out = "(";
  out += escape_id(src);
  out += '>';
  out += escape_id(dst);
  out += ';';
  out += escape_id(payload);
  out += ')';
  return out;
}

std::string bracket_id(const std::vector<std::string>& parts) {
  std::string out = "[";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += escape_id(parts[i]);
  }
  out += ']';
  return out;
}

std::string nt_id(const std::vector<std::string>& comps, std::string_view src, std::string_view dst) {
  std::string out = "[";
  for (size_t i = 0; i < comps.size(); ++i) {
    if (i) out += ',';
    out += escape_id(comps[i]);
  }
  out += '|';
  out += escape_id(src);
  out += '>';
  out += escape_id(dst);
  out += ']';
  return out;
}

static void append_entries(std::string& out,
                           const std::vector<std::pair<std::string, std::string>>& entries) {
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += escape_id(entries[i].first);
    out += ':';
    out += escape_id(entries[i].second);
  }
}

std::string family_id(const std::vector<std::pair<std::string, std::string>>& objPart,
                      const std::vector<std::pair<std::string, std::string>>& onePart) {
  std::string out = "{";
  append_entries(out, objPart);
  out += '|';
  append_entries(out, onePart);
  out += '}';
  return out;
}

std::string family_mor_id(const std::vector<std::pair<std::string, std::string>>& comps,
                          std::string_view src, std::string_view dst) {
  std::string out = "{";
  append_entries(out, comps);
  out += '|';
  out += escape_id(src);
  out += '>';
  out += escape_id(dst);
  out += '}';
  return out;
}

}  // namespace lendkit
