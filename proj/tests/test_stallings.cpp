#include <doctest.h>

#include <algorithm>
#include <random>

#include "howson/errors.hpp"
#include "howson/subgroup_graph.hpp"
#include "oracles.hpp"

using namespace howson;

namespace {
  Basis words(std::initializer_list<char const*> texts, std::size_t rank = 2) {
    Basis out;
    for (auto t : texts) {
      out.push_back(parse_word(t, rank));
    }
    return out;
  }

  // Brute-force ball members must be accepted; accepted words must have a
  // decomposition that multiplies back to them.
  void check_against_enumeration(Basis const& gens, std::size_t max_length,
                                 std::size_t max_factors) {
    auto g    = SubgroupGraph::build(gens, gens.front().rank());
    auto ball = oracle::subgroup_ball(gens, max_factors, max_length);
    auto b    = basis(g);
    for (auto const& w : oracle::reduced_words(gens.front().rank(), max_length)) {
      bool in_ball = ball.count(w) > 0;
      bool member  = g.contains(w);
      if (in_ball) {
        CHECK_MESSAGE(member, to_string(w));
      }
      auto e = express(g, w);
      CHECK(e.has_value() == member);
      if (e) {
        CHECK(oracle::product_of(b, *e) == w);
      }
    }
  }
}  // namespace

TEST_CASE("membership agrees with brute-force enumeration") {
  check_against_enumeration(words({"aa", "bb", "ab"}), 6, 6);
  check_against_enumeration(words({"a", "bab"}), 6, 6);
  check_against_enumeration(words({"aba", "bAb"}), 6, 4);
  check_against_enumeration(words({"abA"}), 7, 3);
}

TEST_CASE("the even-length subgroup has index 2") {
  auto g = SubgroupGraph::build(words({"aa", "bb", "ab"}), 2);
  CHECK(g.index() == 2);
  CHECK(g.rank() == 3);
  for (auto const& w : oracle::reduced_words(2, 6)) {
    CHECK(g.contains(w) == (w.length() % 2 == 0));
  }
}

TEST_CASE("ranks, indices and Schreier's formula") {
  CHECK(SubgroupGraph::build(words({"a", "b"}), 2).index() == 1);
  auto cyclic = SubgroupGraph::build(words({"abA"}), 2);
  CHECK(cyclic.rank() == 1);
  CHECK_FALSE(cyclic.index().has_value());
  auto squares = SubgroupGraph::build(words({"aa", "bb"}), 2);
  CHECK(squares.rank() == 2);
  CHECK_FALSE(squares.index().has_value());
  // Finite index j in F_n forces rank 1 + j(n - 1).
  for (auto const& gens : {words({"aa", "ab", "aB"}), words({"aaa", "b", "aba^-1", "aab^-1a^-2"}),
                           words({"a", "bbb", "bab^-1", "bbaB^2"})}) {
    auto g = SubgroupGraph::build(gens, 2);
    REQUIRE(g.index().has_value());
    CHECK(g.rank() == 1 + *g.index());
  }
  CHECK(SubgroupGraph::build(words({"a", "b", "c"}, 3), 3).rank() == 3);
}

TEST_CASE("intersections") {
  auto h1 = SubgroupGraph::build(words({"a", "bb"}), 2);
  auto h2 = SubgroupGraph::build(words({"aa", "b"}), 2);
  auto m  = intersect(h1, h2);
  CHECK(m.rank() == 2);
  auto runs_even = [](Word const& w) {
    std::size_t i = 0;
    while (i < w.length()) {
      std::size_t j = i;
      while (j < w.length() && w[j] == w[i]) {
        ++j;
      }
      if ((j - i) % 2 != 0) {
        return false;
      }
      i = j;
    }
    return true;
  };
  for (auto const& w : oracle::reduced_words(2, 8)) {
    CHECK(m.contains(w) == (h1.contains(w) && h2.contains(w)));
    CHECK(m.contains(w) == runs_even(w));
  }
  CHECK(m == SubgroupGraph::build(words({"aa", "bb"}), 2));

  auto c2 = SubgroupGraph::build(words({"aa"}), 2);
  auto c3 = SubgroupGraph::build(words({"aaa"}), 2);
  CHECK(intersect(c2, c3) == SubgroupGraph::build(words({"a^6"}), 2));
  CHECK(intersect(c2, SubgroupGraph::build(words({"b"}), 2)).rank() == 0);
}

TEST_CASE("folding is confluent") {
  Basis gens = words({"abA", "aab", "bAbA", "aaa"});
  auto  reference = SubgroupGraph::build(gens, 2).serialize();
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(gens.begin(), gens.end(), rng);
    Basis variant = gens;
    if (i % 2) {
      for (auto& w : variant) {
        w = invert(w);
      }
    }
    CHECK(SubgroupGraph::build(variant, 2).serialize() == reference);
  }
}

TEST_CASE("basis round trip and serialization") {
  auto g = SubgroupGraph::build(words({"aba", "bAb", "aaB"}), 2);
  CHECK(SubgroupGraph::build(basis(g), 2) == g);
  CHECK(basis(g).size() == g.rank());
  auto text = g.serialize();
  CHECK(text.rfind("V ", 0) == 0);
  auto e = SubgroupGraph::build(words({}), 2);
  CHECK(e.rank() == 0);
  CHECK(e.contains(Word(2)));
  CHECK_FALSE(e.contains(parse_word("a", 2)));
}

TEST_CASE("Hall completion yields a free complement") {
  for (auto const& gens : {words({"aa", "bb"}), words({"abA"}), words({"aab", "bbaBA"}),
                           words({"aaa", "bab"})}) {
    auto h = SubgroupGraph::build(gens, 2);
    for (auto size : {ComplementSize::full, ComplementSize::single}) {
      auto k = hall_complement(h, size);
      REQUIRE_FALSE(k.empty());
      if (size == ComplementSize::single) {
        CHECK(k.size() == 1);
      }
      Basis joint = basis(h);
      joint.insert(joint.end(), k.begin(), k.end());
      auto joined = SubgroupGraph::build(joint, 2);
      CHECK(joined.rank() == h.rank() + k.size());
      if (size == ComplementSize::full) {
        CHECK(joined.index().has_value());
      }
      for (auto const& w : k) {
        CHECK_FALSE(h.contains(w));
      }
    }
  }
  CHECK_THROWS_AS(hall_complement(SubgroupGraph::build(words({"aa", "b", "aba"}), 2)),
                  NoComplementError);
}
