#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "howson/word.hpp"

namespace oracle {

  // Every reduced word of length at most `max_length`.
  std::vector<howson::Word> reduced_words(std::size_t rank, std::size_t max_length);

  // Reduced products of at most `max_factors` generators or inverses,
  // keeping those of length at most `max_length`.
  std::set<howson::Word> subgroup_ball(std::vector<howson::Word> const& gens,
                                      std::size_t                      max_factors,
                                      std::size_t                      max_length);

  // Direct multiplication of generators selected by signed 1-based indices.
  howson::Word product_of(std::vector<howson::Word> const& gens,
                          std::vector<int> const&          indices);

  // x -> 2^k x + q with q = num / 2^den, in lowest terms.
  struct Affine {
    int      k   = 0;
    __int128 num = 0;
    int      den = 0;

    bool operator==(Affine const&) const = default;
  };

  Affine      compose(Affine const& f, Affine const& g);
  Affine      inverse(Affine const& f);
  std::string to_string(Affine const& f);

  // Faithful representation of ⟨a, t | t^-1 a t = a^2⟩: a(x) = x + 1,
  // t(x) = x / 2.
  Affine bs12_letter(char symbol);

  // Syllable sequences over {a, t} with exponents ±1, ±2, adjacent
  // syllables on different letters, at most `max_syllables` syllables.
  std::vector<std::string> bs12_expressions(std::size_t max_syllables);

  Affine bs12_evaluate(std::string const& expression);

  std::int64_t geometric_sum(std::int64_t base, std::size_t terms);

}  // namespace oracle
