#include "howson/expression.hpp"

#include <cctype>
#include <limits>

#include "howson/errors.hpp"

namespace howson {

  namespace {

    class Expander {
     public:
      Expander(std::string_view text, std::size_t max_symbols)
          : _text(text), _max(max_symbols) {}

      std::vector<Symbol> run() {
        auto result = sequence();
        skip_space();
        if (_pos != _text.size()) {
          fail("unexpected character");
        }
        return result;
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError(what + " at offset " + std::to_string(_pos) + " in '"
                         + std::string(_text) + "'");
      }

      void skip_space() {
        while (_pos < _text.size()
               && (std::isspace(static_cast<unsigned char>(_text[_pos]))
                   || _text[_pos] == '*')) {
          ++_pos;
        }
      }

      bool at_end() const {
        return _pos >= _text.size();
      }

      char peek() const {
        return _text[_pos];
      }

      std::vector<Symbol> sequence() {
        std::vector<Symbol> out;
        while (true) {
          skip_space();
          if (at_end() || peek() == ')') {
            return out;
          }
          auto term = atom();
          skip_space();
          if (!at_end() && peek() == '^') {
            ++_pos;
            long long e = exponent();
            term        = power(term, e);
          }
          if (out.size() + term.size() > _max) {
            fail("expression expands past the symbol limit");
          }
          out.insert(out.end(), term.begin(), term.end());
        }
      }

      std::vector<Symbol> atom() {
        char c = peek();
        if (c == '(') {
          ++_pos;
          auto inner = sequence();
          skip_space();
          if (at_end() || peek() != ')') {
            fail("missing ')'");
          }
          ++_pos;
          return inner;
        }
        if (c == '1') {
          ++_pos;
          return {};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
          Symbol s;
          s.inverse = std::isupper(static_cast<unsigned char>(c)) != 0;
          s.name.push_back(static_cast<char>(
              std::tolower(static_cast<unsigned char>(c))));
          ++_pos;
          while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            s.name.push_back(peek());
            ++_pos;
          }
          return {s};
        }
        fail("unexpected character");
      }

      long long exponent() {
        skip_space();
        bool braced = !at_end() && peek() == '{';
        if (braced) {
          ++_pos;
        }
        bool negative = false;
        if (!at_end() && (peek() == '-' || peek() == '+')) {
          negative = peek() == '-';
          ++_pos;
        }
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
          fail("expected exponent");
        }
        long long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
          value = value * 10 + (peek() - '0');
          if (value > static_cast<long long>(_max)) {
            fail("exponent too large");
          }
          ++_pos;
        }
        if (braced) {
          if (at_end() || peek() != '}') {
            fail("missing '}'");
          }
          ++_pos;
        }
        return negative ? -value : value;
      }

      std::vector<Symbol> power(std::vector<Symbol> const& base, long long e) {
        std::vector<Symbol> unit = base;
        if (e < 0) {
          unit.assign(base.rbegin(), base.rend());
          for (auto& s : unit) {
            s.inverse = !s.inverse;
          }
          e = -e;
        }
        if (!unit.empty()
            && static_cast<unsigned long long>(e)
                   > _max / unit.size()) {
          fail("expression expands past the symbol limit");
        }
        std::vector<Symbol> out;
        out.reserve(unit.size() * static_cast<std::size_t>(e));
        for (long long i = 0; i < e; ++i) {
          out.insert(out.end(), unit.begin(), unit.end());
        }
        return out;
      }

      std::string_view _text;
      std::size_t      _max;
      std::size_t      _pos = 0;
    };

  }  // namespace

  std::vector<Symbol> expand_expression(std::string_view text,
                                        std::size_t      max_symbols) {
    return Expander(text, max_symbols).run();
  }

}  // namespace howson
