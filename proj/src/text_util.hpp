#pragma once

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "howson/errors.hpp"

namespace howson {

  inline std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
      ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
      --e;
    }
    return std::string(s.substr(b, e - b));
  }

  // Splits on ';' and drops empty clauses.
  inline std::vector<std::string> split_clauses(std::string_view s) {
    std::vector<std::string> out;
    std::size_t              start = 0;
    while (start <= s.size()) {
      auto end = s.find(';', start);
      if (end == std::string_view::npos) {
        end = s.size();
      }
      auto clause = trim(s.substr(start, end - start));
      if (!clause.empty()) {
        out.push_back(std::move(clause));
      }
      start = end + 1;
    }
    return out;
  }

  inline bool starts_with_word(std::string_view s, std::string_view word) {
    return s.substr(0, word.size()) == word
           && (s.size() == word.size()
               || std::isspace(static_cast<unsigned char>(s[word.size()])));
  }

  inline std::size_t parse_count(std::string_view s, std::string_view what) {
    auto        t     = trim(s);
    std::size_t value = 0;
    auto        res   = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size()) {
      throw ParseError("expected a non-negative integer after '"
                       + std::string(what) + "', got '" + t + "'");
    }
    return value;
  }

}  // namespace howson
