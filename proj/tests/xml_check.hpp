#pragma once

// Minimal XML well-formedness check: one root element, properly nested and
// matched tags, quoted unique attributes, valid entity references.  No DTDs.

#include <cctype>
#include <set>
#include <string>
#include <vector>

namespace hw::xml {

inline bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == ':' || c == '.'; }

/// Empty string when well formed, else a description of the first problem.
inline std::string check(const std::string& s) {
  std::size_t i = 0;
  const std::size_t n = s.size();
  std::vector<std::string> stack;
  bool seen_root = false;
  auto ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto read_name = [&]() -> std::string {
    const std::size_t b = i;
    if (i >= n || !(std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) return {};
    while (i < n && name_char(s[i])) ++i;
    return s.substr(b, i - b);
  };
  auto check_text = [&](const std::string& t) -> std::string {
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (t[k] == '<') return "raw '<' in text";
      if (t[k] != '&') continue;
      const auto semi = t.find(';', k);
      if (semi == std::string::npos) return "unterminated entity";
      const std::string e = t.substr(k + 1, semi - k - 1);
      static const std::set<std::string> known{"amp", "lt", "gt", "quot", "apos"};
      if (!known.count(e) && !(e.size() > 1 && e[0] == '#')) return "unknown entity &" + e + ";";
      k = semi;
    }
    return {};
  };

  if (s.compare(0, 5, "<?xml") == 0) {
    const auto e = s.find("?>");
    if (e == std::string::npos) return "unterminated declaration";
    i = e + 2;
  }
  while (i < n) {
    if (s[i] != '<') {
      const auto next = s.find('<', i);
      const std::string text = s.substr(i, next == std::string::npos ? std::string::npos : next - i);
      if (stack.empty()) {
        for (char c : text)
          if (!std::isspace(static_cast<unsigned char>(c))) return "text outside the root element";
      } else if (auto err = check_text(text); !err.empty()) {
        return err;
      }
      if (next == std::string::npos) break;
      i = next;
      continue;
    }
    if (s.compare(i, 4, "<!--") == 0) {
      const auto e = s.find("-->", i + 4);
      if (e == std::string::npos) return "unterminated comment";
      i = e + 3;
      continue;
    }
    if (s.compare(i, 2, "</") == 0) {
      i += 2;
      const std::string name = read_name();
      ws();
      if (i >= n || s[i] != '>') return "bad closing tag";
      ++i;
      if (stack.empty() || stack.back() != name) return "mismatched closing tag </" + name + ">";
      stack.pop_back();
      continue;
    }
    ++i;
    const std::string name = read_name();
    if (name.empty()) return "bad tag name";
    if (stack.empty()) {
      if (seen_root) return "second root element";
      seen_root = true;
    }
    std::set<std::string> attrs;
    for (;;) {
      ws();
      if (i >= n) return "unterminated tag <" + name + ">";
      if (s[i] == '>') {
        ++i;
        stack.push_back(name);
        break;
      }
      if (s.compare(i, 2, "/>") == 0) {
        i += 2;
        break;
      }
      const std::string a = read_name();
      if (a.empty()) return "bad attribute in <" + name + ">";
      if (!attrs.insert(a).second) return "duplicate attribute " + a;
      ws();
      if (i >= n || s[i] != '=') return "attribute without value";
      ++i;
      ws();
      if (i >= n || (s[i] != '"' && s[i] != '\'')) return "unquoted attribute";
      const char q = s[i++];
      const auto e = s.find(q, i);
      if (e == std::string::npos) return "unterminated attribute";
      if (auto err = check_text(s.substr(i, e - i)); !err.empty()) return err;
      i = e + 1;
    }
  }
  if (!stack.empty()) return "unclosed <" + stack.back() + ">";
  if (!seen_root) return "no root element";
  return {};
}

}  // namespace hw::xml
