#pragma once

#include <compare>
#include <cstddef>
#include <cstdlib>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace howson {

  // A generator or its formal inverse, stored as a signed 1-based index.
  class Letter {
   public:
    constexpr Letter() = default;
    constexpr explicit Letter(int signed_generator) : _value(signed_generator) {}

    static constexpr Letter positive(std::size_t generator) {
      return Letter(static_cast<int>(generator));
    }
    static constexpr Letter negative(std::size_t generator) {
      return Letter(-static_cast<int>(generator));
    }

    constexpr std::size_t generator() const {
      return static_cast<std::size_t>(_value < 0 ? -_value : _value);
    }
    constexpr int sign() const {
      return _value < 0 ? -1 : 1;
    }
    constexpr bool is_inverse() const {
      return _value < 0;
    }
    constexpr Letter inverse() const {
      return Letter(-_value);
    }
    constexpr int value() const {
      return _value;
    }
    // Dense index in [0, 2 * rank): x_g -> 2(g-1), x_g^-1 -> 2(g-1)+1.
    // Slot order is the (label, sign) order used by graph canonicalisation.
    constexpr std::size_t slot() const {
      return 2 * (generator() - 1) + (is_inverse() ? 1 : 0);
    }
    static constexpr Letter from_slot(std::size_t slot) {
      auto g = static_cast<int>(slot / 2 + 1);
      return Letter(slot % 2 == 0 ? g : -g);
    }

    friend constexpr bool operator==(Letter, Letter) = default;
    friend constexpr std::strong_ordering operator<=>(Letter x, Letter y) {
      return x.slot() <=> y.slot();
    }

   private:
    int _value = 0;
  };

  // An element of the free group on `rank` generators. Always freely
  // reduced; the empty word is the identity.
  class Word {
   public:
    explicit Word(std::size_t rank = 0) : _rank(rank) {}
    // Freely reduces `letters`. Throws AlphabetError on out-of-range letters.
    Word(std::size_t rank, std::span<Letter const> letters);
    Word(std::size_t rank, std::initializer_list<int> signed_generators);

    static Word generator(std::size_t rank, std::size_t g);

    std::size_t rank() const {
      return _rank;
    }
    std::size_t length() const {
      return _letters.size();
    }
    bool is_identity() const {
      return _letters.empty();
    }
    std::span<Letter const> letters() const {
      return _letters;
    }
    Letter operator[](std::size_t i) const {
      return _letters[i];
    }
    auto begin() const {
      return _letters.begin();
    }
    auto end() const {
      return _letters.end();
    }

    friend bool operator==(Word const&, Word const&) = default;
    // Shortlex on letters, letters ordered by (generator, positive first).
    friend std::strong_ordering operator<=>(Word const& u, Word const& v);

   private:
    std::size_t         _rank = 0;
    std::vector<Letter> _letters;
  };

  Word reduce(std::size_t rank, std::span<Letter const> letters);
  // Throws AlphabetError if the ranks differ.
  Word multiply(Word const& u, Word const& v);
  Word invert(Word const& w);
  Word power(Word const& w, long long exponent);

  inline Word operator*(Word const& u, Word const& v) {
    return multiply(u, v);
  }

  // Generators are named a..s while the rank allows (t is reserved for the
  // stable letter), and x1..xN otherwise.
  std::string generator_name(std::size_t g, std::size_t rank);
  // Accepts both naming schemes; nullopt if the name is not a generator.
  std::optional<std::size_t> generator_index(std::string_view name,
                                             std::size_t      rank);

  // `a b^-1 a`, `aBa` and `x1 x2^-1 x1` all parse; `1` is the identity.
  Word        parse_word(std::string_view text, std::size_t rank);
  std::string to_string(Word const& w);

}  // namespace howson
