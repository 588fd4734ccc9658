#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "b3cryst/braid.hpp"
#include "b3cryst/errors.hpp"

#include <random>

using namespace b3cryst;

namespace {
BraidWord w3(const std::string& s) { return BraidWord::parse(s, 3); }

BraidWord random_word(std::mt19937& rng, int max_len = 24) {
  std::vector<int> letters;
  const int len = static_cast<int>(rng() % (max_len + 1));
  for (int i = 0; i < len; ++i) {
    const int g = 1 + static_cast<int>(rng() % 2);
    letters.push_back((rng() % 2) ? g : -g);
  }
  return BraidWord(3, letters);
}
}  // namespace

TEST_CASE("composition freely reduces") {
  CHECK(compose(w3("1"), w3("-1")).empty());
  CHECK(compose(w3("1"), w3("2")) == w3("1 2"));
  CHECK(compose(w3("1 2"), w3("-2 -1")).empty());
  CHECK_THROWS_AS(compose(w3("1"), BraidWord::parse("1", 4)), precondition_error);
}

TEST_CASE("words stay freely reduced under construction") {
  CHECK(BraidWord(3, {1, -1, 2}) == w3("2"));
  CHECK(BraidWord(3, {1, 2, -2, -1}).empty());
  CHECK_THROWS_AS(BraidWord(3, {3}), precondition_error);
  CHECK_THROWS_AS(BraidWord(3, {0}), precondition_error);
}

TEST_CASE("parse accepts both text forms") {
  CHECK(BraidWord::parse("s1 s2 S1", 3) == w3("1 2 -1"));
  CHECK(BraidWord::parse("", 3).empty());
  CHECK_THROWS_AS(BraidWord::parse("x", 3), parse_error);
  CHECK_THROWS_AS(BraidWord::parse("7", 3), parse_error);
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    const BraidWord w = random_word(rng);
    CHECK(BraidWord::parse(w.str(), 3) == w);
  }
}

TEST_CASE("pure braid generators") {
  CHECK(pure_generator(1, 2, 3) == w3("1 1"));
  CHECK(pure_generator(1, 3, 3) == w3("2 1 1 -2"));
  CHECK(pure_generator(2, 3, 3) == w3("2 2"));
  CHECK_THROWS_AS(pure_generator(2, 2, 3), precondition_error);
}

TEST_CASE("full twist") {
  CHECK(full_twist(3) == w3("1 2 1 2 1 2"));
  CHECK(full_twist(2) == BraidWord::parse("1 1", 2));
  CHECK(full_twist(4).length() == 12);
}

TEST_CASE("exponent sum") {
  CHECK(exponent_sum(w3("1 2 1 -2 -1 -2")) == 0);
  CHECK(exponent_sum(full_twist(3).power(2)) == 12);
  CHECK(exponent_sum(w3("1 1 1")) == 3);
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    const BraidWord a = random_word(rng), b = random_word(rng);
    CHECK(exponent_sum(compose(a, b)) == exponent_sum(a) + exponent_sum(b));
  }
}

TEST_CASE("word problem for B_3") {
  CHECK(is_trivial_b3(w3("1 2 1 -2 -1 -2")));
  // the full twist squared maps to the identity matrix but is not trivial
  CHECK_FALSE(is_trivial_b3(full_twist(3).power(2)));
  CHECK(is_trivial_b3(commutator(full_twist(3), w3("1"))));
  CHECK_THROWS_AS(is_trivial_b3(BraidWord::parse("1", 4)), precondition_error);

  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) {
    const BraidWord w = random_word(rng);
    CHECK(is_trivial_b3(compose(w, w.inverse())));
  }
}

TEST_CASE("equal_b3 is a congruence") {
  const BraidWord lhs = w3("1 2 1");
  const BraidWord rhs = w3("2 1 2");
  CHECK(equal_b3(lhs, rhs));
  std::mt19937 rng(13);
  for (int i = 0; i < 30; ++i) {
    const BraidWord t = random_word(rng);
    CHECK(equal_b3(compose(t, lhs), compose(t, rhs)));
    CHECK(equal_b3(compose(lhs, t), compose(rhs, t)));
  }
}

TEST_CASE("pure braid relations and the full twist product at n=3") {
  CHECK(verify_pure_braid_relations(3));
  CHECK(verify_full_twist_product(3));
  // the explicit relation instances from the presentation
  const BraidWord a12 = pure_generator(1, 2, 3);
  const BraidWord a13 = pure_generator(1, 3, 3);
  const BraidWord a23 = pure_generator(2, 3, 3);
  CHECK(equal_b3(compose(compose(a12.inverse(), a13), a12),
                 conjugate(compose(a13, a23), a13)));
  CHECK(equal_b3(full_twist(3), compose(compose(a12, a13), a23)));
  CHECK(equal_b3(a12, compose(compose(full_twist(3), a23.inverse()), a13.inverse())));
}
