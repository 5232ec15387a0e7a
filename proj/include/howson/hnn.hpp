#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "howson/base_group.hpp"
#include "howson/errors.hpp"
#include "howson/expression.hpp"

namespace howson {

  inline constexpr std::size_t default_depth_limit = 64;

  // t^m · g · t^-n in G(φ), with m, n ≥ 0. Values produced by an
  // HnnExtension are always canonical: m == 0, n == 0 or g ∉ Gφ.
  template <class BaseElement>
  struct HnnElement {
    std::size_t   m = 0;
    BaseElement   g;
    std::size_t   n = 0;
    std::uint64_t instance = 0;

    friend bool operator==(HnnElement const&, HnnElement const&) = default;
  };

  // Atom of an HNN word: a base generator (0-based) or the stable letter t.
  struct HnnLetter {
    bool        stable    = false;
    std::size_t generator = 0;
    bool        inverse   = false;

    static HnnLetter base(std::size_t generator, bool inverse = false) {
      return {false, generator, inverse};
    }
    static HnnLetter t(bool inverse = false) {
      return {true, 0, inverse};
    }
  };

  namespace detail {
    inline std::uint64_t next_instance_id() {
      static std::atomic<std::uint64_t> counter{0};
      return ++counter;
    }
  }  // namespace detail

  // The descending HNN-extension G(φ) = ⟨G, t | t^-1 g t = gφ⟩ over any
  // BaseGroup. Elements are kept as canonical triples; relations used:
  //   g t^k = t^k (gφ^k),   t^-k g = (gφ^k) t^-k,   t (gφ) t^-1 = g.
  //
  // Every multiply or normalize may spend at most `depth_limit` endomorphism
  // applications (forward or inverse); exceeding that throws DepthLimitError.
  template <BaseGroup Base>
  class HnnExtension {
   public:
    using BaseElement = typename Base::Element;
    using Element     = HnnElement<BaseElement>;

    explicit HnnExtension(Base base, std::size_t depth_limit = default_depth_limit)
        : _base(std::move(base)),
          _limit(depth_limit),
          _id(detail::next_instance_id()) {}

    Base const& base() const {
      return _base;
    }
    std::size_t depth_limit() const {
      return _limit;
    }

    Element identity() const {
      return {0, _base.identity(), 0, _id};
    }
    Element stable_letter() const {
      return {1, _base.identity(), 0, _id};
    }
    Element from_base(BaseElement g) const {
      return {0, std::move(g), 0, _id};
    }

    Element normalize(std::size_t m, BaseElement g, std::size_t n) const {
      Budget budget{_limit};
      return normalize(m, std::move(g), n, budget);
    }

    Element multiply(Element const& x, Element const& y) const {
      check(x);
      check(y);
      Budget budget{_limit};
      if (y.m >= x.n) {
        std::size_t k = y.m - x.n;
        auto        g = _base.multiply(apply_power(x.g, k, budget), y.g);
        return normalize(x.m + k, std::move(g), y.n, budget);
      }
      std::size_t k = x.n - y.m;
      auto        g = _base.multiply(x.g, apply_power(y.g, k, budget));
      return normalize(x.m, std::move(g), k + y.n, budget);
    }

    Element invert(Element const& x) const {
      check(x);
      return normalize(x.n, _base.invert(x.g), x.m);
    }

    Element power(Element const& x, long long exponent) const {
      Element unit   = exponent < 0 ? invert(x) : x;
      Element result = identity();
      for (long long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) {
        result = multiply(result, unit);
      }
      return result;
    }

    bool equals(Element const& x, Element const& y) const {
      check(x);
      check(y);
      return x.m == y.m && x.n == y.n && x.g == y.g;
    }

    // Image under G(φ) -> Z killing the base group.
    long long t_exponent(Element const& x) const {
      check(x);
      return static_cast<long long>(x.m) - static_cast<long long>(x.n);
    }

    bool in_base(Element const& x) const {
      check(x);
      return x.m == 0 && x.n == 0;
    }

    Element letter(HnnLetter const& l) const {
      if (l.stable) {
        return l.inverse ? Element{0, _base.identity(), 1, _id} : stable_letter();
      }
      if (l.generator >= _base.generator_count()) {
        throw AlphabetError("base generator " + std::to_string(l.generator)
                            + " out of range");
      }
      auto g = _base.generator(l.generator);
      return from_base(l.inverse ? _base.invert(g) : std::move(g));
    }

    Element eval_word(std::span<HnnLetter const> letters) const {
      Element result = identity();
      for (auto const& l : letters) {
        result = multiply(result, letter(l));
      }
      return result;
    }

    // `t`, `T` or `t^-1`, base generator names, juxtaposition, powers and
    // parentheses, e.g. `(t b)^3` or `t^-1 a t`.
    std::vector<HnnLetter> parse_letters(std::string_view text) const {
      std::vector<HnnLetter> out;
      for (auto const& s : expand_expression(text)) {
        if (s.name == "t") {
          out.push_back(HnnLetter::t(s.inverse));
          continue;
        }
        auto g = generator_index(s.name, _base.generator_count());
        if (!g) {
          throw ParseError("unknown symbol '" + s.name + "'");
        }
        out.push_back(HnnLetter::base(*g - 1, s.inverse));
      }
      return out;
    }

    Element parse(std::string_view text) const {
      return eval_word(parse_letters(text));
    }

    std::string format_base(BaseElement const& g) const {
      return format_runs(_base.runs(g), _base.generator_count());
    }

    std::string format(Element const& x) const {
      return "(" + std::to_string(x.m) + ", " + format_base(x.g) + ", "
             + std::to_string(x.n) + ")";
    }

   private:
    struct Budget {
      std::size_t remaining;

      void spend(std::size_t k) {
        if (k > remaining) {
          throw DepthLimitError("operation needs more than the depth limit of "
                                "endomorphism applications");
        }
        remaining -= k;
      }
    };

    void check(Element const& x) const {
      if (x.instance != _id) {
        throw InstanceMismatchError(
            "element belongs to a different HNN-extension instance");
      }
    }

    BaseElement apply_power(BaseElement const& g, std::size_t k,
                            Budget& budget) const {
      if (k == 0 || _base.is_identity(g)) {
        return g;
      }
      budget.spend(k);
      return _base.apply_power(g, k);
    }

    Element normalize(std::size_t m, BaseElement g, std::size_t n,
                      Budget& budget) const {
      while (m > 0 && n > 0) {
        if (_base.is_identity(g)) {
          std::size_t k = m < n ? m : n;
          m -= k;
          n -= k;
          break;
        }
        auto pre = _base.preimage(g);
        if (!pre) {
          break;
        }
        budget.spend(1);
        g = std::move(*pre);
        --m;
        --n;
      }
      return {m, std::move(g), n, _id};
    }

    Base          _base;
    std::size_t   _limit;
    std::uint64_t _id;
  };

}  // namespace howson
