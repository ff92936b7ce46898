#pragma once

#include <algorithm>
#include <cctype>
#include <regex>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "srk/class_sum.hpp"
#include "srk/errors.hpp"
#include "srk/gr_index.hpp"
#include "srk/og_index.hpp"

namespace srk {

namespace detail {

inline std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

inline std::string script(char mark, const std::string& body, bool single) {
  if (body.empty()) return "";
  return single ? std::string(1, mark) + body : std::string(1, mark) + "{" + body + "}";
}

}  // namespace detail

/// σ_{a}^{b} with the prime as a trailing apostrophe on a_s.
inline std::string sigma(const OgIndex& x) {
  std::string sub = detail::join(x.a);
  if (x.prime) sub += "'";
  const bool single_sub = x.a.size() == 1 && !x.prime && x.a[0] < 10;
  const bool single_sup = x.b.size() == 1 && x.b[0] < 10;
  return "σ" + detail::script('_', sub, single_sub) + detail::script('^', detail::join(x.b), single_sup);
}

inline std::string sigma(const GrIndex& x) {
  const bool single = x.a.size() == 1 && x.a[0] < 10;
  return "σ" + detail::script('_', detail::join(x.a), single);
}

template <class B>
std::string format_sum(const ClassSum<B>& S) {
  if (S.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [x, c] : S) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag);
    out += sigma(x);
    first = false;
  }
  return out;
}

/// Plain text forms: "1,3,5 @ G(3,6)" and "1 | 1 @ OG(2,6)" (with 2' for a primed a_s).
inline std::string to_text(const GrIndex& x) {
  return detail::join(x.a) + " @ G(" + std::to_string(x.k) + "," + std::to_string(x.n) + ")";
}

inline std::string to_text(const OgIndex& x) {
  std::string a = detail::join(x.a);
  if (x.prime) a += "'";
  return (a.empty() ? "-" : a) + " | " + (x.b.empty() ? "-" : detail::join(x.b)) + " @ OG(" +
         std::to_string(x.k) + "," + std::to_string(x.n) + ")";
}

/// Comma-separated integers; empty text or "-" is the empty list.
inline std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string t(text);
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
  if (t.empty() || t == "-") return out;
  std::stringstream ss(t);
  std::string item;
  std::size_t offset = 0;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.size() > 6 ||
        !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw SyntaxError(ErrorCode::SyntaxError, offset, "expected a nonnegative integer, got '" + item + "'");
    out.push_back(std::stoi(item));
    offset += item.size() + 1;
  }
  if (!t.empty() && t.back() == ',') throw SyntaxError(ErrorCode::SyntaxError, t.size() - 1, "trailing comma");
  return out;
}

struct ParsedIndex {
  bool orthogonal = false;
  GrIndex gr;
  OgIndex og;
};

/// Reads either text form and validates it.
inline ParsedIndex parse_index(std::string_view text) {
  static const std::regex gr_re(R"(^\s*([0-9,\s]*)\s*@\s*G\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$)");
  static const std::regex og_re(R"(^\s*([0-9,\s\-]*?)\s*('?)\s*\|\s*([0-9,\s\-]*)\s*@\s*OG\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$)");
  std::string t(text);
  std::smatch m;
  ParsedIndex out;
  if (std::regex_match(t, m, og_re)) {
    out.orthogonal = true;
    out.og = validate_og(std::stoi(m[4]), std::stoi(m[5]), parse_int_list(m[1].str()), parse_int_list(m[3].str()),
                         !m[2].str().empty());
    return out;
  }
  if (std::regex_match(t, m, gr_re)) {
    out.gr = validate_gr(std::stoi(m[2]), std::stoi(m[3]), parse_int_list(m[1].str()));
    return out;
  }
  throw SyntaxError(ErrorCode::SyntaxError, 0, "not an index: '" + t + "'");
}

}  // namespace srk
