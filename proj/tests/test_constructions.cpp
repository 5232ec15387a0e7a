#include <doctest.h>

#include "howson/constructions.hpp"
#include "howson/errors.hpp"

using namespace howson;

namespace {
  FreeEndo squares() {
    return parse_free_endo("a -> aa; b -> bb");
  }
  Basis single(FreeEndo const& e) {
    return hall_complement(e.image_graph(), ComplementSize::single);
  }
}  // namespace

TEST_CASE("K_n is the image under the n-th power") {
  auto e = squares();
  Basis k{parse_word("b", 2)};
  CHECK(build_Kn(k, e, 0) == k);
  CHECK(build_Kn(k, e, 2) == Basis{parse_word("bbbb", 2)});
  CHECK_THROWS_AS(build_Kn(k, e, 9, 8), DepthLimitError);
}

TEST_CASE("rank growth follows the free product law") {
  auto e = squares();
  auto k = single(e);
  REQUIRE(k.size() == 1);
  CHECK(rank_growth(e, k, 0) == std::vector<std::size_t>{1});
  CHECK(rank_growth(e, k, 6) == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7});

  auto full = hall_complement(e.image_graph(), ComplementSize::full);
  auto ranks = rank_growth(e, full, 4);
  for (std::size_t r = 0; r < ranks.size(); ++r) {
    CHECK(ranks[r] == (r + 1) * full.size());
  }

  auto g = parse_free_endo("a -> ab; b -> ba");
  auto kg = single(g);
  auto rg = rank_growth(g, kg, 5);
  CHECK(rg.back() == 6 * kg.size());

  // b² lies in the image, so it cannot complement it.
  CHECK_THROWS_AS(rank_growth(e, {parse_word("bb", 2)}, 2), ConstructionError);
  CHECK_THROWS_AS(rank_growth(e, k, 10, 8), DepthLimitError);
}

TEST_CASE("free product probe") {
  auto a = parse_word("a", 2);
  auto b = parse_word("b", 2);
  CHECK(free_product_probe({{a}, {b}}, 2000, 1).passed);

  auto bad = free_product_probe({{a}, {parse_word("aa", 2)}}, 2000, 1);
  CHECK_FALSE(bad.passed);
  REQUIRE_FALSE(bad.witness.empty());
  Word product(2);
  for (auto const& w : bad.witness) {
    CHECK_FALSE(w.is_identity());
    product = product * w;
  }
  CHECK(product.is_identity());

  CHECK_THROWS_AS(free_product_probe({{a}, {Word(2)}}, 10, 1), DegeneratePartError);

  auto e = squares();
  std::vector<Basis> parts;
  for (std::size_t n = 0; n <= 4; ++n) {
    parts.push_back(build_Kn(single(e), e, n));
  }
  auto ok = free_product_probe(parts, 3000, 5);
  CHECK(ok.passed);
  CHECK(ok.samples == 3000);
}

TEST_CASE("probes are reproducible") {
  auto e = squares();
  auto k = single(e);
  auto x = lemma2_probe(e, k, 200, 9);
  auto y = lemma2_probe(e, k, 200, 9);
  CHECK(x.passed);
  CHECK(x.negative_samples == 200);
  CHECK(x.nonnegative_samples == 200);
  CHECK(x.failure == y.failure);
}

TEST_CASE("the base-intersection probe rejects a non-complement") {
  // With K inside the image, t^-1 g t can land back in the base group.
  auto e = squares();
  auto r = lemma2_probe(e, {parse_word("aa", 2)}, 200, 2);
  CHECK_FALSE(r.passed);
  CHECK_FALSE(r.failure.empty());
}
