#include "howson/instance.hpp"

#include "howson/errors.hpp"
#include "text_util.hpp"

namespace howson {

  Factor parse_factor(std::string_view spec) {
    auto s = trim(spec);
    if (starts_with_word(s, "dim")) {
      return AbelianBase(parse_matrix_endo(s));
    }
    return FreeBase(parse_free_endo(s));
  }

  Instance parse_instance(std::string_view spec) {
    auto s = trim(spec);
    if (!starts_with_word(s, "product") && s.rfind("product;", 0) != 0) {
      auto f = parse_factor(s);
      return std::visit([](auto const& x) -> Instance { return x; }, f);
    }
    auto a = s.find("A:");
    auto b = s.find("B:", a == std::string::npos ? 0 : a);
    if (a == std::string::npos || b == std::string::npos) {
      throw ParseError("product spec needs 'A: <spec>; B: <spec>'");
    }
    auto a_spec = trim(std::string_view(s).substr(a + 2, b - a - 2));
    while (!a_spec.empty() && a_spec.back() == ';') {
      a_spec.pop_back();
    }
    auto b_spec = trim(std::string_view(s).substr(b + 2));
    return ProductInstance{parse_factor(a_spec), parse_factor(b_spec)};
  }

  std::string to_string(Factor const& f) {
    return std::visit([](auto const& x) { return x.spec(); }, f);
  }

  std::string to_string(Instance const& i) {
    return with_base(i, [](auto const& base) { return base.spec(); });
  }

}  // namespace howson
