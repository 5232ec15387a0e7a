#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "howson/abelian.hpp"
#include "howson/free_endo.hpp"
#include "howson/word.hpp"

namespace howson {

  // (generator index, exponent) run of an element's display form.
  using Run = std::pair<std::size_t, std::int64_t>;

  // What the HNN engine needs from a base group G with an injective
  // endomorphism φ. Generators are 0-based here.
  template <class B>
  concept BaseGroup = requires(B const&                     base,
                               typename B::Element const&   x,
                               std::size_t                  i) {
    { base.identity() } -> std::same_as<typename B::Element>;
    { base.multiply(x, x) } -> std::same_as<typename B::Element>;
    { base.invert(x) } -> std::same_as<typename B::Element>;
    { base.is_identity(x) } -> std::same_as<bool>;
    { base.apply(x) } -> std::same_as<typename B::Element>;
    { base.apply_power(x, i) } -> std::same_as<typename B::Element>;
    { base.preimage(x) } -> std::same_as<std::optional<typename B::Element>>;
    { base.image_contains(x) } -> std::same_as<bool>;
    { base.generator_count() } -> std::same_as<std::size_t>;
    { base.generator(i) } -> std::same_as<typename B::Element>;
    { base.runs(x) } -> std::same_as<std::vector<Run>>;
    { base.spec() } -> std::same_as<std::string>;
  } && std::equality_comparable<typename B::Element>;

  // Free group of finite rank with a FreeEndo.
  class FreeBase {
   public:
    using Element = Word;

    explicit FreeBase(FreeEndo endo) : _endo(std::move(endo)) {}

    FreeEndo const& endo() const {
      return _endo;
    }
    Word identity() const {
      return Word(_endo.rank());
    }
    Word multiply(Word const& x, Word const& y) const {
      return x * y;
    }
    Word invert(Word const& x) const {
      return howson::invert(x);
    }
    bool is_identity(Word const& x) const {
      return x.is_identity();
    }
    Word apply(Word const& x) const {
      return _endo.apply(x);
    }
    Word apply_power(Word const& x, std::size_t k) const {
      Word out = x;
      for (std::size_t i = 0; i < k && !out.is_identity(); ++i) {
        out = _endo.apply(out);
      }
      return out;
    }
    std::optional<Word> preimage(Word const& x) const {
      return _endo.preimage(x);
    }
    bool image_contains(Word const& x) const {
      return _endo.image_contains(x);
    }
    std::size_t generator_count() const {
      return _endo.rank();
    }
    Word generator(std::size_t i) const {
      return Word::generator(_endo.rank(), i + 1);
    }
    std::vector<Run> runs(Word const& x) const;
    std::string      spec() const {
      return to_string(_endo);
    }

   private:
    FreeEndo _endo;
  };

  // Z^n with a MatrixEndo; the group operation is written additively in
  // AbelianVector but multiplicatively everywhere else.
  class AbelianBase {
   public:
    using Element = AbelianVector;

    explicit AbelianBase(MatrixEndo endo) : _endo(std::move(endo)) {}

    MatrixEndo const& endo() const {
      return _endo;
    }
    AbelianVector identity() const {
      return AbelianVector(_endo.dimension());
    }
    AbelianVector multiply(AbelianVector const& x, AbelianVector const& y) const {
      return add(x, y);
    }
    AbelianVector invert(AbelianVector const& x) const {
      return negate(x);
    }
    bool is_identity(AbelianVector const& x) const {
      return x.is_zero();
    }
    AbelianVector apply(AbelianVector const& x) const {
      return _endo.apply(x);
    }
    AbelianVector apply_power(AbelianVector const& x, std::size_t k) const {
      AbelianVector out = x;
      for (std::size_t i = 0; i < k && !out.is_zero(); ++i) {
        out = _endo.apply(out);
      }
      return out;
    }
    std::optional<AbelianVector> preimage(AbelianVector const& x) const {
      return ab_preimage(_endo, x);
    }
    bool image_contains(AbelianVector const& x) const {
      return ab_image_contains(_endo, x);
    }
    std::size_t generator_count() const {
      return _endo.dimension();
    }
    AbelianVector generator(std::size_t i) const {
      return AbelianVector::unit(_endo.dimension(), i);
    }
    std::vector<Run> runs(AbelianVector const& x) const;
    std::string      spec() const {
      return to_string(_endo);
    }

   private:
    MatrixEndo _endo;
  };

  // Direct product A × B with the componentwise endomorphism. Generators of
  // A come first, then those of B.
  template <BaseGroup A, BaseGroup B>
  class ProductBase {
   public:
    using Element = std::pair<typename A::Element, typename B::Element>;

    ProductBase(A a, B b) : _a(std::move(a)), _b(std::move(b)) {}

    A const& left() const {
      return _a;
    }
    B const& right() const {
      return _b;
    }
    Element identity() const {
      return {_a.identity(), _b.identity()};
    }
    Element multiply(Element const& x, Element const& y) const {
      return {_a.multiply(x.first, y.first), _b.multiply(x.second, y.second)};
    }
    Element invert(Element const& x) const {
      return {_a.invert(x.first), _b.invert(x.second)};
    }
    bool is_identity(Element const& x) const {
      return _a.is_identity(x.first) && _b.is_identity(x.second);
    }
    Element apply(Element const& x) const {
      return {_a.apply(x.first), _b.apply(x.second)};
    }
    Element apply_power(Element const& x, std::size_t k) const {
      return {_a.apply_power(x.first, k), _b.apply_power(x.second, k)};
    }
    std::optional<Element> preimage(Element const& x) const {
      auto pa = _a.preimage(x.first);
      if (!pa) {
        return std::nullopt;
      }
      auto pb = _b.preimage(x.second);
      if (!pb) {
        return std::nullopt;
      }
      return Element{std::move(*pa), std::move(*pb)};
    }
    bool image_contains(Element const& x) const {
      return _a.image_contains(x.first) && _b.image_contains(x.second);
    }
    std::size_t generator_count() const {
      return _a.generator_count() + _b.generator_count();
    }
    Element generator(std::size_t i) const {
      if (i < _a.generator_count()) {
        return {_a.generator(i), _b.identity()};
      }
      return {_a.identity(), _b.generator(i - _a.generator_count())};
    }
    std::vector<Run> runs(Element const& x) const {
      auto out = _a.runs(x.first);
      for (auto [g, e] : _b.runs(x.second)) {
        out.emplace_back(g + _a.generator_count(), e);
      }
      return out;
    }
    std::string spec() const {
      return "product; A: " + _a.spec() + "; B: " + _b.spec();
    }

    // Embeddings of the factors.
    Element from_left(typename A::Element x) const {
      return {std::move(x), _b.identity()};
    }
    Element from_right(typename B::Element y) const {
      return {_a.identity(), std::move(y)};
    }

   private:
    A _a;
    B _b;
  };

  // Display form shared by all bases: `a^2 b^-1 c`, `1` for the identity.
  std::string format_runs(std::vector<Run> const& runs,
                          std::size_t             generator_count);

  static_assert(BaseGroup<FreeBase>);
  static_assert(BaseGroup<AbelianBase>);
  static_assert(BaseGroup<ProductBase<AbelianBase, FreeBase>>);

}  // namespace howson
