#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "howson/base_group.hpp"

namespace howson {

  // One factor of a direct product, or a whole base group.
  using Factor = std::variant<FreeBase, AbelianBase>;

  struct ProductInstance {
    Factor a;
    Factor b;
  };

  using Instance = std::variant<FreeBase, AbelianBase, ProductInstance>;

  // `rank 2; a -> a a; b -> b b` or `dim 2; [[2,0],[0,3]]`.
  Factor parse_factor(std::string_view spec);

  // A factor spec, or `product; A: <spec>; B: <spec>`. Generator names of a
  // product run over A's generators first, then B's.
  Instance parse_instance(std::string_view spec);

  std::string to_string(Factor const& f);
  std::string to_string(Instance const& i);

  // Calls f with the concrete ProductBase<A, B> for the two factor types.
  template <class F>
  decltype(auto) with_product(ProductInstance const& p, F&& f) {
    return std::visit(
        [&](auto const& a, auto const& b) -> decltype(auto) {
          return f(ProductBase(a, b));
        },
        p.a, p.b);
  }

  // Calls f with the concrete BaseGroup realising the instance.
  template <class F>
  decltype(auto) with_base(Instance const& instance, F&& f) {
    return std::visit(
        [&](auto const& alt) -> decltype(auto) {
          if constexpr (std::is_same_v<std::decay_t<decltype(alt)>,
                                       ProductInstance>) {
            return with_product(alt, f);
          } else {
            return f(alt);
          }
        },
        instance);
  }

}  // namespace howson
