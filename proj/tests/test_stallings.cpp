#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "b3cryst/errors.hpp"
#include "b3cryst/stallings.hpp"

#include <algorithm>
#include <random>

using namespace b3cryst;

namespace {
const FreeWord kComm = {2, 1, -2, -1};  // [y, x]

std::vector<FreeWord> kernel_gens(const FreeWord& fifth) {
  return {{1, 1}, {2, 2}, {1, 2, 2, -1}, kComm, fifth};
}
}  // namespace

TEST_CASE("single loop and whole group") {
  const auto single = build_and_fold(2, {{1}});
  CHECK(single.rank() == 1);
  CHECK_FALSE(single.index().has_value());

  const auto whole = build_and_fold(2, {{1}, {2}});
  CHECK(whole.rank() == 2);
  CHECK(whole.index() == 1);

  const auto squares = build_and_fold(1, {{1, 1}});
  CHECK(squares.rank() == 1);
  CHECK(squares.index() == 2);
}

TEST_CASE("mod-2 kernel of F_2: fifth generator variants") {
  // x[y,x]x (freely reduces to x y x y^-1): a genuine free basis of the kernel
  const auto a = kernel_check(2, kernel_gens(free_reduce({1, 2, 1, -2, -1, 1})), {2, 2});
  CHECK(a.generators_in_kernel);
  CHECK(a.index == 4);
  CHECK(a.rank == 5);
  CHECK(a.certified);

  // x[y,x]x^-1: also a basis (differs from the first by a Nielsen move)
  const auto c = kernel_check(2, kernel_gens(free_reduce({1, 2, 1, -2, -1, -1})), {2, 2});
  CHECK(c.certified);
  CHECK(c.rank == 5);

  // y[y,x]y^-1: lies in the kernel but the five words generate a proper
  // infinite-index subgroup, so this variant does not certify
  const auto b = kernel_check(2, kernel_gens(free_reduce({2, 2, 1, -2, -1, -2})), {2, 2});
  CHECK(b.generators_in_kernel);
  CHECK_FALSE(b.index.has_value());
  CHECK_FALSE(b.certified);
}

TEST_CASE("rank-1 sanity case for kernel_check") {
  const auto r = kernel_check(1, {{1, 1}}, {2});
  CHECK(r.certified);
  CHECK(r.index == 2);
  CHECK(r.rank == 1);
}

TEST_CASE("membership on the folded kernel graph") {
  const auto g = build_and_fold(2, kernel_gens(free_reduce({1, 2, 1, -2, -1, 1})));
  CHECK(g.contains({1, 1, 2, 2}));
  CHECK_FALSE(g.contains({1}));
  CHECK_FALSE(g.contains({1, 2}));
  // every input generator traces a loop
  for (const auto& gen : kernel_gens(free_reduce({1, 2, 1, -2, -1, 1}))) CHECK(g.contains(gen));
  CHECK(g.contains({}));
}

TEST_CASE("folding is confluent under generator insertion order") {
  const auto gens = kernel_gens(free_reduce({1, 2, 1, -2, -1, 1}));
  const auto reference = build_and_fold(2, gens).edges();
  std::mt19937 rng(2024);
  std::vector<FreeWord> shuffled = gens;
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(build_and_fold(2, shuffled).edges() == reference);
  }
}

TEST_CASE("Nielsen-Schreier identity on random finite-index subgroups") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 3);
    const int d = 1 + static_cast<int>(rng() % 7);
    std::vector<std::vector<int>> perm(k, std::vector<int>(d));
    std::vector<std::vector<int>> inv(k, std::vector<int>(d));
    for (int i = 0; i < k; ++i) {
      std::iota(perm[i].begin(), perm[i].end(), 0);
      std::shuffle(perm[i].begin(), perm[i].end(), rng);
      for (int v = 0; v < d; ++v) inv[i][perm[i][v]] = v;
    }
    // BFS orbit of 0 with transversal words
    std::vector<FreeWord> tree(d);
    std::vector<bool> seen(d, false);
    std::vector<int> queue = {0};
    seen[0] = true;
    for (size_t h = 0; h < queue.size(); ++h)
      for (int i = 0; i < k; ++i)
        for (int dir : {0, 1}) {
          const int u = dir ? inv[i][queue[h]] : perm[i][queue[h]];
          if (seen[u]) continue;
          seen[u] = true;
          tree[u] = tree[queue[h]];
          tree[u].push_back(dir ? -(i + 1) : (i + 1));
          queue.push_back(u);
        }
    std::vector<FreeWord> sgens;
    for (int v : queue)
      for (int i = 0; i < k; ++i) {
        FreeWord w = tree[v];
        w.push_back(i + 1);
        const FreeWord back = free_inverse(tree[perm[i][v]]);
        w.insert(w.end(), back.begin(), back.end());
        if (const FreeWord r = free_reduce(w); !r.empty()) sgens.push_back(r);
      }
    if (sgens.empty()) continue;  // whole group on one point
    const auto g = build_and_fold(k, sgens);
    REQUIRE(g.index().has_value());
    CHECK(*g.index() == static_cast<int>(queue.size()));
    CHECK(g.rank() - 1 == *g.index() * (k - 1));
    for (const auto& s : sgens) CHECK(g.contains(s));
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(build_and_fold(0, {}), precondition_error);
  CHECK_THROWS_AS(build_and_fold(2, {{3}}), precondition_error);
  CHECK_THROWS_AS(kernel_check(2, {}, {2}), precondition_error);
}
