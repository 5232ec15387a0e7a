#include <doctest.h>

#include <map>

#include "howson/constructions.hpp"
#include "howson/errors.hpp"
#include "howson/hnn.hpp"
#include "howson/instance.hpp"
#include "oracles.hpp"

using namespace howson;

namespace {
  FreeHnn bs12() {
    return FreeHnn(FreeBase(parse_free_endo("a -> aa")));
  }
}  // namespace

TEST_CASE("defining relation and canonical forms") {
  auto g = bs12();
  CHECK(g.format(g.parse("t^-1 a t")) == "(0, a^2, 0)");
  CHECK(g.format(g.parse("t a t^-1")) == "(1, a, 1)");
  CHECK(g.format(g.parse("t a^2 t^-1")) == "(0, a, 0)");
  CHECK(g.format(g.parse("t^2 a^4 T^2")) == "(0, a, 0)");
  CHECK(g.format(g.parse("a t")) == "(1, a^2, 0)");
  CHECK(g.format(g.parse("T a")) == "(0, a^2, 1)");
  CHECK(g.format(g.parse("1")) == "(0, 1, 0)");
  CHECK(g.in_base(g.parse("t^-1 a t")));
  CHECK_FALSE(g.in_base(g.parse("t a t^-1")));
  CHECK(g.t_exponent(g.parse("t a t t a^-1")) == 3);
  CHECK(g.equals(g.parse("t a T"), g.invert(g.parse("t A T"))));
  CHECK(g.equals(g.power(g.parse("t a"), -2), g.parse("A T A T")));
  CHECK_THROWS_AS(g.parse("b"), ParseError);
}

TEST_CASE("equality agrees with the affine representation") {
  // Both BS(1,2) realisations: free base of rank one and Z with x2.
  auto free_g = bs12();
  HnnExtension z_g(AbelianBase(parse_matrix_endo("dim 1; [[2]]")));
  auto exprs = oracle::bs12_expressions(4);
  CHECK(exprs.size() == 681);
  std::map<std::string, std::string> by_form;
  std::map<std::string, std::string> by_map;
  std::size_t disagreements = 0;
  for (auto const& e : exprs) {
    auto form   = free_g.format(free_g.parse(e));
    auto affine = oracle::to_string(oracle::bs12_evaluate(e));
    if (z_g.format(z_g.parse(e)) != form) {
      ++disagreements;
    }
    auto [i, fi] = by_form.emplace(form, affine);
    auto [j, fj] = by_map.emplace(affine, form);
    if (i->second != affine || j->second != form) {
      ++disagreements;
    }
  }
  CHECK(disagreements == 0);
  CHECK(by_form.size() == by_map.size());
}

TEST_CASE("group axioms on sampled elements") {
  auto g = bs12();
  auto exprs = oracle::bs12_expressions(2);
  for (std::size_t i = 0; i < exprs.size(); i += 3) {
    for (std::size_t j = 0; j < exprs.size(); j += 5) {
      auto x = g.parse(exprs[i]);
      auto y = g.parse(exprs[j]);
      auto z = g.parse(exprs[(i + j) % exprs.size()]);
      CHECK(g.equals(g.multiply(g.multiply(x, y), z), g.multiply(x, g.multiply(y, z))));
      CHECK(g.equals(g.multiply(x, g.invert(x)), g.identity()));
      CHECK(g.equals(g.invert(g.multiply(x, y)), g.multiply(g.invert(y), g.invert(x))));
    }
  }
}

TEST_CASE("free base of rank two") {
  FreeHnn g(FreeBase(parse_free_endo("a -> aa; b -> bb")));
  CHECK(g.format(g.parse("t^-2 a b t^2")) == "(0, a^4 b^4, 0)");
  CHECK(g.format(g.parse("t a b t^-1")) == "(1, a b, 1)");
  CHECK(g.format(g.parse("t a^2 b^2 a^-2 t^-1")) == "(0, a b a^-1, 0)");
  for (std::size_t n = 1; n <= 4; ++n) {
    auto k = build_Kn({parse_word("abA", 2)}, g.base().endo(), n);
    std::string e = "t^-" + std::to_string(n) + " a b A t^" + std::to_string(n);
    CHECK(g.equals(g.parse(e), g.from_base(k.front())));
  }
}

TEST_CASE("product base and the geometric sum") {
  auto instance = std::get<ProductInstance>(
      parse_instance("product; A: dim 1; [[2]]; B: dim 1; [[3]]"));
  with_product(instance, [](auto const& base) {
    HnnExtension g(base);
    CHECK(g.format(g.parse("(t b)^3")) == "(3, b^13, 0)");
    for (std::size_t m = 1; m <= 20; ++m) {
      auto x = g.power(g.parse("t b"), static_cast<long long>(m));
      CHECK(x.m == m);
      CHECK(x.n == 0);
      auto s = oracle::geometric_sum(3, m);
      CHECK(g.format_base(x.g) == (s == 1 ? "b" : "b^" + std::to_string(s)));
    }
  });
}

TEST_CASE("depth guard and instance checks") {
  FreeHnn g(FreeBase(parse_free_endo("a -> aa; b -> bb")), 5);
  CHECK_NOTHROW(g.parse("t^-5 a t^5"));
  CHECK_THROWS_AS(g.parse("t^-6 a t^6"), DepthLimitError);
  auto h = bs12();
  auto k = bs12();
  CHECK_THROWS_AS(h.multiply(h.identity(), k.identity()), InstanceMismatchError);
}
