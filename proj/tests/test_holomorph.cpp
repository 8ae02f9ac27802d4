#include <gtest/gtest.h>

#include <random>
#include <set>

#include "braceforge/errors.hpp"
#include "braceforge/holomorph.hpp"
#include "braceforge/regularity.hpp"
#include "support.hpp"

namespace bf = braceforge;
using testing_support::hol;
using testing_support::spec;

namespace {

const bf::GroupSpec kC4 = spec({4});
const bf::GroupSpec kV4 = spec({2, 2});
const bf::IntMatrix kSwap{{0, 1}, {1, 0}};

bf::Subgroup klein_on_c4() {
  return bf::closure(kC4, std::vector<bf::HolElement>{hol(kC4, {2}, {{1}}), hol(kC4, {1}, {{3}})});
}

TEST(HolMul, Examples) {
  EXPECT_EQ(bf::hol_mul(kC4, hol(kC4, {1}, {{3}}), hol(kC4, {2}, {{1}})), hol(kC4, {3}, {{3}}));
  const bf::HolElement x = hol(kC4, {3}, {{3}});
  EXPECT_EQ(bf::hol_mul(kC4, bf::hol_identity(kC4), x), x);
  EXPECT_EQ(bf::hol_mul(kV4, hol(kV4, {1, 0}, kSwap), hol(kV4, {0, 1}, kSwap)),
            hol(kV4, {0, 0}, {{1, 0}, {0, 1}}));
}

TEST(HolInv, Examples) {
  EXPECT_EQ(bf::hol_inv(kC4, hol(kC4, {2}, {{3}})), hol(kC4, {2}, {{3}}));
  EXPECT_EQ(bf::hol_inv(kC4, bf::hol_identity(kC4)), bf::hol_identity(kC4));
  EXPECT_EQ(bf::hol_inv(kC4, hol(kC4, {1}, {{1}})), hol(kC4, {3}, {{1}}));
}

TEST(HolAct, Examples) {
  EXPECT_EQ(bf::hol_act(kC4, hol(kC4, {1}, {{3}}), bf::make_element(kC4, std::vector<std::int64_t>{2})),
            bf::make_element(kC4, std::vector<std::int64_t>{3}));
  for (const bf::HolElement& x : testing_support::all_hol_elements(kC4)) {
    EXPECT_EQ(bf::hol_act(kC4, x, bf::zero_element(kC4)), x.g);
    EXPECT_EQ(bf::projection(x), bf::hol_act(kC4, x, bf::zero_element(kC4)));
  }
  for (const bf::GroupElement& h : bf::enumerate_elements(kC4))
    EXPECT_EQ(bf::hol_act(kC4, bf::hol_identity(kC4), h), h);
}

TEST(Projection, IsNotAHomomorphism) {
  const bf::HolElement x = hol(kC4, {0}, {{3}});
  const bf::HolElement y = hol(kC4, {1}, {{1}});
  EXPECT_EQ(bf::projection(bf::hol_mul(kC4, x, y)), bf::make_element(kC4, std::vector<std::int64_t>{3}));
  EXPECT_NE(bf::projection(bf::hol_mul(kC4, x, y)),
            bf::add(kC4, bf::projection(x), bf::projection(y)));
}

TEST(GroupAxioms, ExhaustiveOnSmallHolomorphs) {
  for (const bf::GroupSpec& s : {kC4, kV4, spec({3, 3})}) {
    const auto all = testing_support::all_hol_elements(s);
    for (const auto& x : all) {
      EXPECT_EQ(bf::hol_mul(s, x, bf::hol_inv(s, x)), bf::hol_identity(s));
      EXPECT_EQ(bf::hol_mul(s, bf::hol_inv(s, x), x), bf::hol_identity(s));
      for (const auto& y : all) {
        // (xy)*h = x*(y*h) against the raw matrix action.
        const auto xy = testing_support::permutation(s, bf::hol_mul(s, x, y));
        const auto px = testing_support::permutation(s, x);
        const auto py = testing_support::permutation(s, y);
        for (std::size_t h = 0; h < s.order(); ++h) ASSERT_EQ(xy[h], px[py[h]]);
        if (all.size() > 100) continue;
        for (const auto& z : all)
          ASSERT_EQ(bf::hol_mul(s, bf::hol_mul(s, x, y), z), bf::hol_mul(s, x, bf::hol_mul(s, y, z)));
      }
    }
  }
}

TEST(GroupAxioms, RandomOnLargerHolomorph) {
  const bf::GroupSpec s = spec({4, 4, 4});
  const auto gens = bf::sylow_p_hol_generators(s, 2);
  std::mt19937_64 rng(testing_support::seed());
  const auto random_element = [&] {
    bf::HolElement x = bf::hol_identity(s);
    for (int k = 0; k < 10; ++k) x = bf::hol_mul(s, x, gens[rng() % gens.size()]);
    return x;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = random_element(), y = random_element(), z = random_element();
    ASSERT_EQ(bf::hol_mul(s, bf::hol_mul(s, x, y), z), bf::hol_mul(s, x, bf::hol_mul(s, y, z)));
    ASSERT_EQ(bf::hol_mul(s, x, bf::hol_inv(s, x)), bf::hol_identity(s));
    EXPECT_EQ(bf::hol_pow(s, x, -3), bf::hol_inv(s, bf::hol_pow(s, x, 3)));
  }
}

TEST(Action, Faithful) {
  for (const bf::GroupSpec& s : {kC4, kV4}) {
    std::set<std::vector<std::uint64_t>> maps;
    const auto all = testing_support::all_hol_elements(s);
    for (const auto& x : all) maps.insert(testing_support::permutation(s, x));
    EXPECT_EQ(maps.size(), all.size());
  }
}

TEST(Closure, Examples) {
  EXPECT_EQ(bf::closure(kC4, std::vector<bf::HolElement>{}).order(), 1u);
  const bf::Subgroup t = bf::closure(kC4, std::vector<bf::HolElement>{hol(kC4, {1}, {{1}})});
  EXPECT_EQ(t, bf::translations_subgroup(kC4));
  const bf::Subgroup two = bf::closure(kC4, std::vector<bf::HolElement>{hol(kC4, {1}, {{3}})});
  const std::vector<bf::HolElement> expected{hol(kC4, {0}, {{1}}), hol(kC4, {1}, {{3}})};
  EXPECT_TRUE(std::equal(two.elements().begin(), two.elements().end(), expected.begin(),
                         expected.end()));
  EXPECT_THROW(bf::closure(spec({4, 4}), bf::sylow_p_hol_generators(spec({4, 4}), 2), 100),
               bf::CapacityError);
}

TEST(Closure, MatchesNaiveClosure) {
  const bf::GroupSpec s = spec({2, 4});
  const auto all = testing_support::all_hol_elements(s);
  std::mt19937_64 rng(testing_support::seed());
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<bf::HolElement> gens;
    for (int k = 0; k < 2; ++k) gens.push_back(all[rng() % all.size()]);
    const bf::Subgroup h = bf::closure(s, gens);
    const auto naive = testing_support::naive_closure(s, gens);
    ASSERT_TRUE(std::equal(h.elements().begin(), h.elements().end(), naive.begin(), naive.end()));
    const bf::HolElement extra[] = {all[rng() % all.size()]};
    gens.push_back(extra[0]);
    const auto with = bf::closure_with(s, h, extra);
    EXPECT_EQ(with, bf::closure(s, gens));
    EXPECT_EQ(bf::closure(s, bf::generating_set(s, with)), with);
  }
}

TEST(Translations, Examples) {
  EXPECT_EQ(bf::translations_subgroup(kC4).order(), 4u);
  EXPECT_EQ(bf::translations_subgroup(spec({4, 4, 4})).order(), 64u);
  EXPECT_TRUE(bf::is_regular(kC4, bf::translations_subgroup(kC4)));
}

TEST(Sylow, Orders) {
  EXPECT_EQ(bf::closure(kC4, bf::sylow_p_hol_generators(kC4, 2)).order(), 8u);
  EXPECT_EQ(bf::closure(spec({2, 2, 2}), bf::sylow_p_hol_generators(spec({2, 2, 2}), 2)).order(),
            64u);
  EXPECT_EQ(bf::closure(spec({4, 4, 4}), bf::sylow_p_hol_generators(spec({4, 4, 4}), 2)).order(),
            262144u);
  EXPECT_THROW(bf::sylow_p_hol_generators(spec({9}), 2), bf::DomainError);
}

TEST(Conjugation, Examples) {
  const bf::Subgroup t = bf::translations_subgroup(kC4);
  for (const auto& x : testing_support::all_hol_elements(kC4))
    EXPECT_EQ(bf::conjugate_subgroup(kC4, x, t), t);
  const bf::Subgroup h = klein_on_c4();
  EXPECT_EQ(bf::conjugate_subgroup(kC4, bf::hol_identity(kC4), h), h);
  const bf::Subgroup c = bf::conjugate_subgroup(kC4, hol(kC4, {1}, {{1}}), h);
  EXPECT_TRUE(bf::is_regular(kC4, c));
  EXPECT_TRUE(testing_support::is_regular_naive(kC4, {c.elements().begin(), c.elements().end()}));
}

TEST(HolText, RoundTrip) {
  const bf::GroupSpec s = spec({4, 4, 4});
  const bf::HolElement x = hol(s, {1, 2, 3}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(bf::format_hol(x), "1,2,3 | 1,0,0;0,1,0;0,0,1");
  EXPECT_EQ(bf::parse_hol(s, "1,2,3 | 1,0,0;0,1,0;0,0,1"), x);
  const std::vector<bf::HolElement> list{x, bf::hol_identity(s), hol(s, {0, 0, 1}, {{1, 1, 0}, {0, 1, 0}, {0, 0, 3}})};
  EXPECT_EQ(bf::parse_hol_list(s, bf::format_hol_list(list)), list);
  EXPECT_TRUE(bf::parse_hol_list(s, "").empty());
  EXPECT_THROW(bf::parse_hol(s, "1,2,3 1,0,0;0,1,0;0,0,1"), bf::ParseError);
  EXPECT_THROW(bf::parse_hol_list(s, "1,0,0;0,1,0 | 1,2,3"), bf::ParseError);
}

TEST(Normality, TranslationsAreNormal) {
  const bf::GroupSpec s = spec({2, 4});
  const auto gens = bf::sylow_p_hol_generators(s, 2);
  EXPECT_TRUE(bf::is_normal_in(s, bf::translations_subgroup(s), gens));
  const bf::Subgroup line = bf::closure(s, std::vector<bf::HolElement>{hol(s, {1, 0}, {{1, 0}, {0, 1}})});
  EXPECT_FALSE(bf::is_normal_in(s, line, std::vector<bf::HolElement>{hol(s, {0, 0}, {{1, 0}, {2, 1}})}));
}

}  // namespace
