#include "howson/constructions.hpp"

#include <algorithm>
#include <random>

#include "howson/errors.hpp"

namespace howson {

  namespace {

    using Rng = std::mt19937_64;

    std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
      return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    }

    // Random nonidentity element of ⟨part⟩: a reduced word of length 1..3
    // in the part's generators. Parts that are not free bases can still
    // produce the identity; those draws are retried.
    Word random_syllable(Rng& rng, Basis const& part) {
      for (int attempt = 0; attempt < 64; ++attempt) {
        std::size_t length = uniform(rng, 1, 3);
        Word        w(part.front().rank());
        int         last = 0;
        for (std::size_t i = 0; i < length; ++i) {
          int pick;
          do {
            auto g = static_cast<int>(uniform(rng, 1, part.size()));
            pick   = uniform(rng, 0, 1) ? g : -g;
          } while (pick == -last);
          last = pick;
          w    = w * (pick > 0 ? part[static_cast<std::size_t>(pick) - 1]
                               : invert(part[static_cast<std::size_t>(-pick) - 1]));
        }
        if (!w.is_identity()) {
          return w;
        }
      }
      throw DegeneratePartError("could not draw a nonidentity element of a part");
    }

    Basis nontrivial(Basis const& part) {
      Basis out;
      for (auto const& w : part) {
        if (!w.is_identity()) {
          out.push_back(w);
        }
      }
      return out;
    }

    std::vector<HnnLetter> conjugate_letters(Word const& g, long long n) {
      // t^-n g t^n
      std::vector<HnnLetter> out;
      std::size_t            reps = static_cast<std::size_t>(n < 0 ? -n : n);
      for (std::size_t i = 0; i < reps; ++i) {
        out.push_back(HnnLetter::t(n > 0));
      }
      for (Letter x : g) {
        out.push_back(HnnLetter::base(x.generator() - 1, x.is_inverse()));
      }
      for (std::size_t i = 0; i < reps; ++i) {
        out.push_back(HnnLetter::t(n < 0));
      }
      return out;
    }

  }  // namespace

  Basis build_Kn(Basis const&    k,
                 FreeEndo const& e,
                 std::size_t     n,
                 std::size_t     depth_limit) {
    if (!e.is_injective()) {
      throw NotApplicableError("K_n needs an injective endomorphism");
    }
    if (n > depth_limit) {
      throw DepthLimitError("K_" + std::to_string(n) + " exceeds the depth limit");
    }
    FreeEndo const power_n = power(e, n);
    FreeHnn const  hnn(FreeBase(e), depth_limit);
    Basis          out;
    for (auto const& w : k) {
      Word image = power_n.apply(w);
      auto conj  = hnn.eval_word(conjugate_letters(w, static_cast<long long>(n)));
      if (!hnn.equals(conj, hnn.from_base(image))) {
        throw ConstructionError("t^-n k t^n disagrees with k under φ^n");
      }
      out.push_back(std::move(image));
    }
    return out;
  }

  std::vector<std::size_t> rank_growth(FreeEndo const& e,
                                       Basis const&    k,
                                       std::size_t     r_max,
                                       std::size_t     depth_limit) {
    if (r_max > depth_limit) {
      throw DepthLimitError("r_max " + std::to_string(r_max)
                            + " exceeds the depth limit "
                            + std::to_string(depth_limit));
    }
    std::vector<std::size_t> ranks;
    Basis                    level = k;
    Basis                    all;
    for (std::size_t r = 0; r <= r_max; ++r) {
      if (r > 0) {
        for (auto& w : level) {
          w = e.apply(w);
        }
      }
      all.insert(all.end(), level.begin(), level.end());
      auto rank = SubgroupGraph::build(all, e.rank()).rank();
      if (rank != (r + 1) * k.size()) {
        throw ConstructionError("rank(M_" + std::to_string(r) + ") = "
                                + std::to_string(rank) + ", expected "
                                + std::to_string((r + 1) * k.size()));
      }
      ranks.push_back(rank);
    }
    return ranks;
  }

  ProbeResult free_product_probe(std::vector<Basis> const& parts,
                                 std::size_t               samples,
                                 std::uint64_t             seed) {
    std::vector<Basis> clean;
    for (auto const& p : parts) {
      clean.push_back(nontrivial(p));
      if (clean.back().empty()) {
        throw DegeneratePartError("free product part contains only the identity");
      }
    }
    if (clean.empty()) {
      throw DegeneratePartError("free product probe needs at least one part");
    }
    Rng         rng(seed);
    ProbeResult result;
    for (std::size_t s = 0; s < samples; ++s) {
      std::size_t       length = clean.size() == 1 ? 1 : uniform(rng, 2, 6);
      std::vector<Word> syllables;
      std::size_t       prev = clean.size();
      Word              product(clean.front().front().rank());
      for (std::size_t i = 0; i < length; ++i) {
        std::size_t part = uniform(rng, 0, clean.size() - 1);
        while (part == prev) {
          part = uniform(rng, 0, clean.size() - 1);
        }
        prev = part;
        syllables.push_back(random_syllable(rng, clean[part]));
        product = product * syllables.back();
      }
      ++result.samples;
      if (product.is_identity()) {
        result.passed  = false;
        result.witness = std::move(syllables);
        return result;
      }
    }
    return result;
  }

  Lemma2Result lemma2_probe(FreeEndo const&      e,
                            Basis const&         k,
                            std::size_t          samples,
                            std::uint64_t        seed,
                            Lemma2Options const& options,
                            std::size_t          depth_limit) {
    Basis const kk = nontrivial(k);
    if (kk.empty()) {
      throw DegeneratePartError("complement K is trivial");
    }
    FreeHnn const hnn(FreeBase(e), depth_limit);
    Rng           rng(seed);
    Lemma2Result  result;
    auto const    lo = -options.max_index;
    auto const    hi = options.max_index;

    auto draw_indices = [&](long long min_index) {
      std::size_t            r = uniform(rng, 1, options.max_syllables);
      std::vector<long long> n;
      for (std::size_t i = 0; i < r; ++i) {
        long long v;
        do {
          v = std::uniform_int_distribution<long long>(min_index, hi)(rng);
        } while (!n.empty() && v == n.back());
        n.push_back(v);
      }
      return n;
    };

    auto describe = [](std::vector<long long> const& n) {
      std::string s;
      for (auto v : n) {
        s += (s.empty() ? "" : ",") + std::to_string(v);
      }
      return "[" + s + "]";
    };

    for (int kind = 0; kind < 2 && result.passed; ++kind) {
      bool const negative = kind == 0;
      for (std::size_t s = 0; s < samples; ++s) {
        std::vector<long long> n;
        do {
          n = draw_indices(negative ? lo : 0);
        } while (negative
                 && std::none_of(n.begin(), n.end(),
                                 [](long long v) { return v < 0; }));
        auto u        = hnn.identity();
        Word expected(e.rank());
        for (long long ni : n) {
          Word g = random_syllable(rng, kk);
          u = hnn.multiply(u, hnn.eval_word(conjugate_letters(g, ni)));
          if (!negative) {
            expected = expected
                       * hnn.base().apply_power(g, static_cast<std::size_t>(ni));
          }
        }
        bool const in_base = hnn.in_base(u);
        if (negative) {
          ++result.negative_samples;
          if (in_base) {
            result.passed  = false;
            result.failure = "word with indices " + describe(n)
                             + " lies in the base group";
            break;
          }
        } else {
          ++result.nonnegative_samples;
          if (!in_base || u.g != expected) {
            result.passed  = false;
            result.failure = "word with indices " + describe(n)
                             + " does not reduce to its base image";
            break;
          }
        }
      }
    }
    return result;
  }

}  // namespace howson
