#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "b3cryst/braid.hpp"
#include "b3cryst/cryst.hpp"
#include "b3cryst/errors.hpp"
#include "b3cryst/rewriting.hpp"

#include <algorithm>
#include <memory>

using namespace b3cryst;

namespace {
BraidWord w3(const std::string& s) { return BraidWord::parse(s, 3); }

std::vector<BraidWord> e_basis() {
  return {w3("1 1 1"), w3("1 2 2 2 -1"), w3("-1 2 2 2 1"), w3("2 2 2")};
}

std::shared_ptr<const AbelianizationContext> ctx_of(std::uint64_t m, SubgroupMode mode,
                                                    std::array<int, 4> order = {0, 1, 2, 3}) {
  return std::make_shared<const AbelianizationContext>(
      build_coset_context(m, mode, {}, order));
}
}  // namespace

TEST_CASE("action matrices in the e-basis match the published permutations") {
  const auto ab = ctx_of(3, SubgroupMode::FullKernel);
  const BasisSpec basis = change_basis(*ab, e_basis());
  const IntMatrix t1 = action_matrix(ab->cosets().coset_of(w3("1")), *ab, basis);
  const IntMatrix t2 = action_matrix(ab->cosets().coset_of(w3("2")), *ab, basis);
  CHECK(t1 == IntMatrix{{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  CHECK(t2 == IntMatrix{{0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}});
  const IntMatrix tft = action_matrix(ab->cosets().coset_of(w3("1 1 2 1 1 2")), *ab, basis);
  CHECK(tft.is_identity());
}

TEST_CASE("extension shapes") {
  const auto p3 = build_extension(3, SubgroupMode::FullKernel);
  CHECK(p3.holonomy.size() == 24);
  CHECK(p3.rank == 4);
  const auto p4 = build_extension(4, SubgroupMode::CenterQuotientKernel);
  CHECK(p4.holonomy.size() == 24);
  CHECK(p4.rank == 6);
  const auto p3cq = build_extension(3, SubgroupMode::CenterQuotientKernel);
  CHECK(p3cq.holonomy.size() == 12);
  CHECK(p3cq.rank == 4);
}

TEST_CASE("theta is multiplicative and integral over all pairs, m = 2,3,4") {
  for (std::uint64_t m : {2, 3, 4}) {
    const auto mode = (m == 4) ? SubgroupMode::CenterQuotientKernel : SubgroupMode::FullKernel;
    const auto p = build_extension(m, mode);
    const auto& cc = p.ab->cosets();
    for (size_t i = 0; i < p.holonomy.size(); ++i) CHECK(abs(p.theta[i].det()) == 1);
    for (size_t i = 0; i < p.holonomy.size(); ++i)
      for (size_t j = 0; j < p.holonomy.size(); ++j) {
        const int prod = cc.quotient().multiply(cc.coset_element(p.holonomy[i]),
                                                cc.coset_element(p.holonomy[j]));
        // coset of the product element (kernel modes: cosets = elements)
        int prod_coset = -1;
        for (size_t c = 0; c < p.holonomy.size(); ++c)
          if (cc.coset_element(p.holonomy[c]) == prod) {
            prod_coset = p.holonomy[c];
            break;
          }
        REQUIRE(prod_coset >= 0);
        CHECK(p.theta[i] * p.theta[j] == p.theta[p.position_of(prod_coset)]);
      }
  }
}

TEST_CASE("theta applies to arbitrary subgroup classes") {
  const auto ab = ctx_of(3, SubgroupMode::FullKernel);
  const BasisSpec basis = snf_basis(*ab);
  const auto& cc = ab->cosets();
  const std::vector<BraidWord> words = {w3("1 1 1"), w3("2 2 2"),
                                        compose(w3("1 1 1"), w3("2 2 2")),
                                        conjugate(w3("1 2"), w3("2 2 2"))};
  for (const BraidWord& t : {w3("1"), w3("2"), w3("1 2"), w3("2 -1")}) {
    const IntMatrix theta = action_matrix(cc.coset_of(t), *ab, basis);
    for (const BraidWord& w : words) {
      const auto lhs = ab->class_of(conjugate(t, w));
      const auto rhs_in = ab->class_of(w);
      for (int i = 0; i < ab->free_rank(); ++i) {
        Int acc = 0;
        for (int j = 0; j < ab->free_rank(); ++j) acc += theta.at(i, j) * rhs_in[j];
        CHECK(lhs[i] == acc);
      }
    }
  }
}

TEST_CASE("torsion verdicts") {
  SUBCASE("m=3 full kernel is torsion free") {
    const auto p = build_extension(3, SubgroupMode::FullKernel);
    CHECK(torsion_test(p).torsion_free);
  }
  SUBCASE("m=2 has an order-3 witness that validates") {
    const auto p = build_extension(2, SubgroupMode::FullKernel);
    const auto t = torsion_test(p);
    REQUIRE_FALSE(t.torsion_free);
    REQUIRE(t.witness.has_value());
    CHECK(t.witness->order == 3);
    const auto cls = p.ab->class_of(t.witness->word.power(3));
    CHECK(std::all_of(cls.begin(), cls.end(), [](const Int& x) { return x == 0; }));
    CHECK_FALSE(p.ab->cosets().in_subgroup(t.witness->word));
  }
  SUBCASE("m=4 center quotient has torsion (no Bieberbach claim)") {
    const auto p = build_extension(4, SubgroupMode::CenterQuotientKernel);
    const auto t = torsion_test(p);
    CHECK_FALSE(t.torsion_free);
    REQUIRE(t.witness.has_value());
    CHECK(t.witness->order == 3);
  }
  SUBCASE("trivial holonomy is torsion free") {
    const auto p = build_extension(3, SubgroupMode::FullKernel);
    const auto sub = sub_extension(p, {0});
    CHECK(torsion_test(sub).torsion_free);
    const auto v = crystallographic_verdict(sub);
    CHECK(v.bieberbach);
    CHECK(v.holonomy_name == "Z/1");
  }
}

TEST_CASE("crystallographic verdicts") {
  SUBCASE("m=3 center quotient: Bieberbach dim 4 holonomy A4") {
    const auto v = crystallographic_verdict(build_extension(3, SubgroupMode::CenterQuotientKernel));
    CHECK(v.holonomy_faithful);
    CHECK(v.torsion_free);
    CHECK(v.crystallographic);
    CHECK(v.bieberbach);
    CHECK(v.dimension == 4);
    CHECK(v.holonomy_name == "A4");
  }
  SUBCASE("m=4 center quotient: crystallographic dim 6 holonomy S4") {
    const auto v = crystallographic_verdict(build_extension(4, SubgroupMode::CenterQuotientKernel));
    CHECK(v.crystallographic);
    CHECK(v.dimension == 6);
    CHECK(v.holonomy_name == "S4");
    CHECK_FALSE(v.bieberbach);  // torsion witness exists
  }
  SUBCASE("m=3 full kernel: kernel is exactly {I, -I}") {
    const auto p = build_extension(3, SubgroupMode::FullKernel);
    const auto v = crystallographic_verdict(p);
    CHECK_FALSE(v.holonomy_faithful);
    REQUIRE(v.kernel.size() == 2);
    const auto& cc = p.ab->cosets();
    // the nontrivial kernel class is the image of the full twist
    const int ft = cc.coset_of(w3("1 1 2 1 1 2"));
    CHECK(std::find(v.kernel.begin(), v.kernel.end(), ft) != v.kernel.end());
    CHECK(v.torsion_free);
  }
}

TEST_CASE("sub-extension with Z/3 holonomy is Bieberbach of dimension 4") {
  const auto p = build_extension(3, SubgroupMode::CenterQuotientKernel);
  const auto& q = p.ab->cosets().quotient();
  const auto sub = q.generated_subgroup({q.image_of_word(w3("1"))});
  REQUIRE(sub.size() == 3);
  const auto v = crystallographic_verdict(sub_extension(p, sub));
  CHECK(v.bieberbach);
  CHECK(v.dimension == 4);
  CHECK(v.holonomy_name == "Z/3");
}

TEST_CASE("sub_extension validates closure") {
  const auto p = build_extension(3, SubgroupMode::FullKernel);
  const auto& q = p.ab->cosets().quotient();
  const int g = q.image_of_word(w3("1"));  // order 3 element; {1, g} is not closed
  CHECK_THROWS_AS(sub_extension(p, {0, g}), precondition_error);
}

TEST_CASE("verdicts are stable under transversal tie-break permutation") {
  for (std::uint64_t m : {2, 3}) {
    const auto a = crystallographic_verdict(
        build_extension(ctx_of(m, SubgroupMode::FullKernel, {0, 1, 2, 3})));
    const auto b = crystallographic_verdict(
        build_extension(ctx_of(m, SubgroupMode::FullKernel, {2, 3, 1, 0})));
    CHECK(a.holonomy_faithful == b.holonomy_faithful);
    CHECK(a.torsion_free == b.torsion_free);
    CHECK(a.crystallographic == b.crystallographic);
    CHECK(a.bieberbach == b.bieberbach);
    CHECK(a.dimension == b.dimension);
    CHECK(a.holonomy_name == b.holonomy_name);
  }
}

TEST_CASE("preimage contexts are rejected by build_extension") {
  auto ab = std::make_shared<const AbelianizationContext>(
      build_coset_context(3, SubgroupMode::SubgroupPreimage, {w3("1")}));
  CHECK_THROWS_AS(build_extension(ab), precondition_error);
}
