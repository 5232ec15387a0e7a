#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace howson {

  // One generator occurrence in an expanded expression. Names are always
  // lowercase; an uppercase spelling in the source sets `inverse`.
  struct Symbol {
    std::string name;
    bool        inverse = false;

    bool operator==(Symbol const&) const = default;
  };

  // Expands the shared text syntax used for words, HNN expressions and
  // certificate witnesses into a flat symbol sequence.
  //
  //   expr  := term*
  //   term  := atom ('^' exponent)?
  //   atom  := identifier | '1' | '(' expr ')'
  //
  // Identifiers are a letter followed by optional digits (`a`, `x12`, `k1`),
  // so `aBa` is three symbols. Exponents may be written `^-1`, `^3` or
  // `^{-2}`. Whitespace and `*` separate terms and are otherwise ignored.
  // Throws ParseError on bad syntax or if expansion exceeds `max_symbols`.
  std::vector<Symbol> expand_expression(std::string_view text,
                                        std::size_t max_symbols = 1u << 20);

}  // namespace howson
