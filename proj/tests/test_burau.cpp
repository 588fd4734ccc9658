#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "b3cryst/braid.hpp"
#include "b3cryst/burau.hpp"
#include "b3cryst/errors.hpp"

#include <random>

using namespace b3cryst;

namespace {
BraidWord w3(const std::string& s) { return BraidWord::parse(s, 3); }
}

TEST_CASE("unreduced generator blocks") {
  CHECK(unreduced_burau_gen(1, 2) == IntMatrix{{2, -1}, {1, 0}});
  CHECK(unreduced_burau_gen(1, 3) == IntMatrix{{2, -1, 0}, {1, 0, 0}, {0, 0, 1}});
  CHECK(unreduced_burau_gen(2, 3) == IntMatrix{{1, 0, 0}, {0, 2, -1}, {0, 1, 0}});
  CHECK_THROWS_AS(unreduced_burau_gen(3, 3), precondition_error);
}

TEST_CASE("reduced convention at n=3") {
  CHECK(reduced_burau_gen(1, 3) == IntMatrix{{1, 0}, {1, 1}});
  CHECK(reduced_burau_gen(2, 3) == IntMatrix{{1, -1}, {0, 1}});
  CHECK(reduced_burau_neg1(w3("1 2 1 2 1 2")) == -IntMatrix::identity(2));
  CHECK(reduced_burau_neg1(w3("1 2 1 -2 -1 -2")).is_identity());
  CHECK(reduced_burau_neg1(w3("1 1 1")) == IntMatrix{{1, 0}, {3, 1}});
}

TEST_CASE("braid and commutation relations for n <= 8 in both representations") {
  for (int n = 2; n <= 8; ++n) {
    for (bool reduced : {false, true}) {
      auto image = [&](const std::vector<int>& ls) {
        const BraidWord w(n, ls);
        return reduced ? reduced_burau_neg1(w) : unreduced_burau(w);
      };
      for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          if (j == i + 1)
            CHECK(image({i, j, i}) == image({j, i, j}));
          else
            CHECK(image({i, j}) == image({j, i}));
        }
    }
  }
}

TEST_CASE("reduced image lands in SL") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> letters;
    for (int i = 0; i < 14; ++i) {
      const int g = 1 + static_cast<int>(rng() % 4);
      letters.push_back((rng() % 2) ? g : -g);
    }
    const BraidWord w(5, letters);
    CHECK(reduced_burau_neg1(w).det() == 1);
  }
}

TEST_CASE("reduced n=3 image satisfies aba=bab and (ab)^6 = 1") {
  const IntMatrix a = reduced_burau_gen(1, 3), b = reduced_burau_gen(2, 3);
  CHECK(a * b * a == b * a * b);
  IntMatrix p = IntMatrix::identity(2);
  for (int i = 0; i < 6; ++i) p = p * (a * b);
  CHECK(p.is_identity());
}

TEST_CASE("congruence membership") {
  CHECK(in_congruence(w3("1 1 1"), 3));
  CHECK(rho_m(w3("1 1 1"), 3).is_identity());
  CHECK_FALSE(in_congruence(w3("1"), 2));
  CHECK(in_congruence(pure_generator(1, 3, 3), 2));
  CHECK(in_congruence(pure_generator(1, 2, 3), 2));
  CHECK(in_congruence(pure_generator(2, 3, 3), 2));
  CHECK_THROWS_AS(in_congruence(w3("1"), 1), precondition_error);
}

TEST_CASE("rho_m is a homomorphism and membership descends to divisors") {
  std::mt19937 rng(17);
  auto random_word = [&]() {
    std::vector<int> letters;
    for (int i = 0; i < 16; ++i) {
      const int g = 1 + static_cast<int>(rng() % 2);
      letters.push_back((rng() % 2) ? g : -g);
    }
    return BraidWord(3, letters);
  };
  for (int trial = 0; trial < 25; ++trial) {
    const BraidWord a = random_word(), b = random_word();
    for (std::uint64_t m : {2, 3, 4, 6}) CHECK(rho_m(compose(a, b), m) == rho_m(a, m) * rho_m(b, m));
  }
  // in B_3[6] implies in B_3[2] and B_3[3]
  for (int trial = 0; trial < 200; ++trial) {
    const BraidWord w = random_word();
    if (in_congruence(w, 6)) {
      CHECK(in_congruence(w, 2));
      CHECK(in_congruence(w, 3));
    }
  }
  // explicit witness: sigma_1^6 is in B_3[6], hence in B_3[2] and B_3[3]
  const BraidWord s16 = w3("1").power(6);
  CHECK(in_congruence(s16, 6));
  CHECK(in_congruence(s16, 2));
  CHECK(in_congruence(s16, 3));
}

TEST_CASE("even strand counts use the unreduced (extended) definition") {
  CHECK(congruence_uses_extended_definition(4));
  CHECK_FALSE(congruence_uses_extended_definition(3));
  const BraidWord w = BraidWord::parse("1 1", 4);
  CHECK(rho_m(w, 2).dim() == 4);
}

TEST_CASE("invariant skew form discovery") {
  const auto r3 = discover_invariant_form(3);
  CHECK(r3.solution_dim == 1);
  CHECK(r3.unimodular);
  CHECK(r3.form == IntMatrix{{0, 1}, {-1, 0}});
  for (int n : {5, 7}) {
    const auto r = discover_invariant_form(n);
    CHECK(r.solution_dim == 1);
    CHECK(r.unimodular);
    CHECK(r.form.transposed() == -r.form);
    // B^T J B = J for every generator image
    for (int i = 1; i < n; ++i) {
      const IntMatrix b = reduced_burau_gen(i, n);
      CHECK(b.transposed() * r.form * b == r.form);
    }
  }
  CHECK_THROWS_AS(discover_invariant_form(4), precondition_error);
}

TEST_CASE("common fixed vectors of the unreduced representation") {
  const auto r2 = common_fixed_vectors(2);
  REQUIRE(r2.basis.cols() == 1);
  CHECK(r2.basis.at(0, 0) == r2.basis.at(1, 0));
  for (int n : {4, 6}) {
    const auto r = common_fixed_vectors(n);
    CHECK(r.basis.cols() >= 1);
    for (int c = 0; c < r.basis.cols(); ++c)
      for (int i = 1; i < n; ++i) {
        const IntMatrix b = unreduced_burau_gen(i, n);
        for (int row = 0; row < n; ++row) {
          Int acc = 0;
          for (int k = 0; k < n; ++k) acc += b.at(row, k) * r.basis.at(k, c);
          CHECK(acc == r.basis.at(row, c));
        }
      }
  }
}
