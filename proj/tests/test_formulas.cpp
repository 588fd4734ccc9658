#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "b3cryst/errors.hpp"
#include "b3cryst/formulas.hpp"

using namespace b3cryst;

TEST_CASE("moebius") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(2) == -1);
  CHECK(moebius(4) == 0);
  CHECK(moebius(6) == 1);
  CHECK(moebius(30) == -1);
  CHECK(moebius(12) == 0);
}

TEST_CASE("witt ranks against hand values and the Lyndon oracle") {
  CHECK(witt_rank(3, 1) == 3);
  CHECK(witt_rank(3, 2) == 3);   // (9-3)/2
  CHECK(witt_rank(5, 2) == 10);  // (25-5)/2
  CHECK(witt_rank(2, 2) == 1);
  CHECK(witt_rank(2, 3) == 2);
  for (int m = 1; m <= 6; ++m)
    for (int k = 1; k <= 6; ++k) CHECK(witt_rank(m, k) == lyndon_word_count(m, k));
}

TEST_CASE("hirsch lengths") {
  CHECK(hirsch_length(3, 2) == 4);
  CHECK(hirsch_length(5, 2) == 6);
  CHECK(hirsch_length(3, 3) == 7);
  CHECK(hirsch_length(11, 2) == 12);
  // consecutive difference is the Witt rank (free lower central quotients)
  for (int m = 2; m <= 5; ++m)
    for (int k = 2; k <= 5; ++k)
      CHECK(hirsch_length(m, k + 1) - hirsch_length(m, k) == witt_rank(m, k));
  CHECK_THROWS_AS(hirsch_length(3, 1), precondition_error);
}

TEST_CASE("free factor ranks M(p)") {
  CHECK(rank_m(3) == 3);
  CHECK(rank_m(5) == 11);
  CHECK(rank_m(7) == 29);
  CHECK(rank_m(11) == 111);
  CHECK_THROWS_AS(rank_m(4), precondition_error);
  CHECK_THROWS_AS(rank_m(2), precondition_error);
  CHECK(free_factor_rank(4) == 5);
  CHECK(free_factor_rank(3) == 3);
  CHECK_THROWS_AS(free_factor_rank(6), precondition_error);
}

TEST_CASE("almost crystallographic dimensions") {
  CHECK(almost_cryst_dimension(3, 2) == 4);
  CHECK(almost_cryst_dimension(4, 2) == 6);
  CHECK(almost_cryst_dimension(5, 2) == 12);
  CHECK(almost_cryst_dimension(3, 3) == 7);
  CHECK(almost_cryst_dimension(4, 3) == 16);  // 6 + witt(5,2)
}
