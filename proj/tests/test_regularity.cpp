#include <gtest/gtest.h>

#include <random>

#include "braceforge/errors.hpp"
#include "braceforge/regularity.hpp"
#include "support.hpp"

namespace bf = braceforge;
using testing_support::hol;
using testing_support::spec;

namespace {

const bf::GroupSpec kC4 = spec({4});

bf::Subgroup as_subgroup(const std::vector<bf::HolElement>& sorted) {
  return bf::Subgroup::from_sorted(sorted);
}

bf::Subgroup aut_part(const bf::GroupSpec& s) {
  std::vector<bf::HolElement> xs;
  for (const auto& a : bf::aut_generators(s)) xs.push_back(bf::pure_automorphism(s, a));
  return bf::closure(s, xs);
}

const std::vector<bf::HolElement> kKleinC4{hol(kC4, {0}, {{1}}), hol(kC4, {1}, {{3}}),
                                           hol(kC4, {2}, {{1}}), hol(kC4, {3}, {{3}})};

TEST(OrbitOfZero, Examples) {
  const bf::GroupSpec s = spec({2, 4});
  EXPECT_EQ(bf::orbit_of_zero(s, bf::translations_subgroup(s)), bf::enumerate_elements(s));
  EXPECT_EQ(bf::orbit_of_zero(s, aut_part(s)), std::vector<bf::GroupElement>{bf::zero_element(s)});
  EXPECT_EQ(bf::orbit_of_zero(kC4, as_subgroup(kKleinC4)), bf::enumerate_elements(kC4));
}

TEST(Stabilizer, Examples) {
  const bf::GroupSpec s = spec({2, 4});
  EXPECT_EQ(bf::stabilizer_of_zero(s, bf::translations_subgroup(s)).order(), 1u);
  EXPECT_EQ(bf::stabilizer_of_zero(s, aut_part(s)), aut_part(s));
}

TEST(IsRegular, Examples) {
  EXPECT_TRUE(bf::is_regular(kC4, bf::translations_subgroup(kC4)));
  EXPECT_FALSE(bf::is_regular(kC4, aut_part(kC4)));
  EXPECT_TRUE(bf::is_regular(kC4, as_subgroup(kKleinC4)));
  EXPECT_TRUE(bf::is_regular_by_definition(kC4, as_subgroup(kKleinC4)));
}

TEST(TransitivePreimageFilter, Examples) {
  const bf::GroupSpec s22 = spec({2, 2});
  const bf::Subgroup sylow = bf::closure(s22, bf::sylow_p_hol_generators(s22, 2));
  EXPECT_TRUE(bf::transitive_preimage_filter(s22, sylow));
  EXPECT_FALSE(bf::transitive_preimage_filter(s22, aut_part(s22)));
  const bf::Subgroup line =
      bf::closure(s22, std::vector<bf::HolElement>{hol(s22, {1, 0}, {{1, 0}, {0, 1}})});
  EXPECT_FALSE(bf::transitive_preimage_filter(s22, line));
}

TEST(SizeFilter, Examples) {
  EXPECT_TRUE(bf::size_filter(32, 4, 64));
  EXPECT_FALSE(bf::size_filter(8, 4, 64));
  EXPECT_FALSE(bf::size_filter(48, 4, 64));
  EXPECT_THROW(bf::size_filter(0, 4, 64), bf::ContractError);
}

// All subgroups of Hol(C4) by brute force: orbit-stabiliser and the
// characterisations of regularity.
TEST(Regularity, ExhaustiveOnHolC4) {
  const auto all = testing_support::all_subgroups(kC4, testing_support::all_hol_elements(kC4));
  EXPECT_EQ(all.size(), 10u);  // subgroups of the dihedral group of order 8
  std::size_t regular = 0;
  for (const auto& elems : all) {
    const bf::Subgroup h = as_subgroup(elems);
    EXPECT_EQ(h.order(),
              bf::orbit_of_zero(kC4, h).size() * bf::stabilizer_of_zero(kC4, h).order());
    EXPECT_EQ(bf::is_regular(kC4, h), testing_support::is_regular_naive(kC4, elems));
    EXPECT_EQ(bf::is_regular(kC4, h), bf::is_regular_by_definition(kC4, h));
    regular += bf::is_regular(kC4, h) ? 1 : 0;
  }
  EXPECT_EQ(regular, 2u);
}

TEST(Regularity, RandomSubgroupsOfHolC2xC4) {
  const bf::GroupSpec s = spec({2, 4});
  const auto elements = testing_support::all_hol_elements(s);
  ASSERT_EQ(elements.size(), 64u);
  std::mt19937_64 rng(testing_support::seed());
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<bf::HolElement> gens;
    const int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) gens.push_back(elements[rng() % elements.size()]);
    const bf::Subgroup h = bf::closure(s, gens);
    const bool order = h.order() == s.order();
    const bool stab = bf::has_trivial_stabilizer(s, h);
    const bool onto = bf::has_surjective_projection(s, h);
    const bool regular = bf::is_regular_by_definition(s, h);
    EXPECT_EQ(h.order(), bf::orbit_of_zero(s, h).size() * bf::stabilizer_of_zero(s, h).order());
    EXPECT_EQ(order && stab, regular);
    EXPECT_EQ(order && onto, regular);
    EXPECT_EQ(stab && onto, regular);
    EXPECT_EQ(bf::is_regular(s, h), regular);
  }
}

}  // namespace
