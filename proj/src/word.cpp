#include "howson/word.hpp"

#include <algorithm>
#include <charconv>

#include "howson/errors.hpp"
#include "howson/expression.hpp"

namespace howson {

  namespace {
    constexpr std::size_t letter_name_limit = 19;  // a..s

    void check_letter(Letter x, std::size_t rank) {
      if (x.value() == 0 || x.generator() > rank) {
        throw AlphabetError("letter " + std::to_string(x.value())
                            + " outside alphabet of rank "
                            + std::to_string(rank));
      }
    }
  }  // namespace

  Word reduce(std::size_t rank, std::span<Letter const> letters) {
    return Word(rank, letters);
  }

  Word::Word(std::size_t rank, std::span<Letter const> letters) : _rank(rank) {
    _letters.reserve(letters.size());
    for (Letter x : letters) {
      check_letter(x, rank);
      if (!_letters.empty() && _letters.back() == x.inverse()) {
        _letters.pop_back();
      } else {
        _letters.push_back(x);
      }
    }
  }

  Word::Word(std::size_t rank, std::initializer_list<int> signed_generators)
      : Word(rank, [&] {
          std::vector<Letter> tmp;
          for (int v : signed_generators) {
            tmp.emplace_back(v);
          }
          return tmp;
        }()) {}

  Word Word::generator(std::size_t rank, std::size_t g) {
    Letter x = Letter::positive(g);
    return Word(rank, std::span<Letter const>(&x, 1));
  }

  std::strong_ordering operator<=>(Word const& u, Word const& v) {
    if (auto c = u.length() <=> v.length(); c != 0) {
      return c;
    }
    return std::lexicographical_compare_three_way(
        u._letters.begin(), u._letters.end(), v._letters.begin(),
        v._letters.end());
  }

  Word multiply(Word const& u, Word const& v) {
    if (u.rank() != v.rank()) {
      throw AlphabetError("cannot multiply words over alphabets of rank "
                          + std::to_string(u.rank()) + " and "
                          + std::to_string(v.rank()));
    }
    auto lu = u.letters();
    auto lv = v.letters();
    std::size_t k = 0;
    while (k < lu.size() && k < lv.size()
           && lu[lu.size() - 1 - k] == lv[k].inverse()) {
      ++k;
    }
    std::vector<Letter> out;
    out.reserve(lu.size() + lv.size() - 2 * k);
    out.insert(out.end(), lu.begin(), lu.end() - static_cast<std::ptrdiff_t>(k));
    out.insert(out.end(), lv.begin() + static_cast<std::ptrdiff_t>(k), lv.end());
    return Word(u.rank(), out);
  }

  Word invert(Word const& w) {
    std::vector<Letter> out;
    out.reserve(w.length());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      out.push_back(it->inverse());
    }
    return Word(w.rank(), out);
  }

  Word power(Word const& w, long long exponent) {
    Word unit = exponent < 0 ? invert(w) : w;
    Word result(w.rank());
    for (long long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) {
      result = result * unit;
    }
    return result;
  }

  std::string generator_name(std::size_t g, std::size_t rank) {
    if (rank <= letter_name_limit) {
      return std::string(1, static_cast<char>('a' + (g - 1)));
    }
    return "x" + std::to_string(g);
  }

  std::optional<std::size_t> generator_index(std::string_view name,
                                             std::size_t      rank) {
    if (name.size() == 1 && name[0] >= 'a' && name[0] <= 'z') {
      std::size_t g = static_cast<std::size_t>(name[0] - 'a') + 1;
      if (g <= rank) {
        return g;
      }
      return std::nullopt;
    }
    if (name.size() > 1 && name[0] == 'x') {
      std::size_t g   = 0;
      auto        res = std::from_chars(name.data() + 1,
                                 name.data() + name.size(), g);
      if (res.ec == std::errc() && res.ptr == name.data() + name.size()
          && g >= 1 && g <= rank) {
        return g;
      }
    }
    return std::nullopt;
  }

  Word parse_word(std::string_view text, std::size_t rank) {
    std::vector<Letter> letters;
    for (auto const& s : expand_expression(text)) {
      auto g = generator_index(s.name, rank);
      if (!g) {
        throw ParseError("'" + s.name + "' is not a generator of the rank "
                         + std::to_string(rank) + " alphabet");
      }
      letters.push_back(s.inverse ? Letter::negative(*g) : Letter::positive(*g));
    }
    return Word(rank, letters);
  }

  std::string to_string(Word const& w) {
    if (w.is_identity()) {
      return "1";
    }
    std::string out;
    bool const  compact = w.rank() <= letter_name_limit;
    for (Letter x : w) {
      if (compact) {
        char c = static_cast<char>('a' + (x.generator() - 1));
        out.push_back(x.is_inverse() ? static_cast<char>(c - 'a' + 'A') : c);
      } else {
        if (!out.empty()) {
          out.push_back(' ');
        }
        out += generator_name(x.generator(), w.rank());
        if (x.is_inverse()) {
          out += "^-1";
        }
      }
    }
    return out;
  }

}  // namespace howson
