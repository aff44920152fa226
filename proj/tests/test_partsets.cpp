#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qpl/error.hpp"
#include "qpl/partsets.hpp"

using namespace qpl;

TEST(PartSet, MembershipMatchesPredicates)
{
    for (std::int64_t k = 3; k <= 9; ++k) {
        for (std::int64_t l = 1; l < k; ++l) {
            const ModularParams p(k, l);
            const auto I = PartSet::residue(p);
            for (std::int64_t x = -3; x <= 80; ++x)
                ASSERT_EQ(I.contains(x), oracle::in_residue(k, l, x));
            if (!p.is_interior())
                continue;
            const auto J = PartSet::J(p), Jb = PartSet::Jbar(p);
            for (std::int64_t x = -3; x <= 80; ++x) {
                ASSERT_EQ(J.contains(x), oracle::in_J(k, l, x)) << p.str() << " " << x;
                ASSERT_EQ(Jb.contains(x), oracle::in_Jbar(k, l, x)) << p.str() << " " << x;
            }
        }
    }
}

TEST(PartSet, MembersUpto)
{
    const auto J = PartSet::J(ModularParams(5, 2));
    EXPECT_EQ(J.members_upto(13), (std::vector<std::int64_t>{2, 3, 7, 8, 12, 13}));
    const auto Jb = PartSet::Jbar(ModularParams(3, 1));
    EXPECT_EQ(Jb.members_upto(6), (std::vector<std::int64_t>{1, 2, 3, 4, 5, 6}));
    EXPECT_EQ(PartSet::multiples(4).members_upto(13), (std::vector<std::int64_t>{4, 8, 12}));
    EXPECT_EQ(PartSet::explicit_set({7, 1, 3, 3}).members_upto(5), (std::vector<std::int64_t>{1, 3}));
    EXPECT_TRUE(J.members_upto(0).empty());
}

TEST(PartSet, FiniteJs)
{
    // first s terms of k(i-1)+l and k i - l
    const auto js = PartSet::Js(ModularParams(5, 2), 3);
    EXPECT_EQ(js.members_upto(100), (std::vector<std::int64_t>{2, 3, 7, 8, 12, 13}));
    EXPECT_THROW(PartSet::Js(ModularParams(5, 2), 0), ParameterError);
}

TEST(PartSet, Scaling)
{
    const auto s = PartSet::Jbar(ModularParams(4, 1)).scaled(3);
    EXPECT_EQ(s.members_upto(20), (std::vector<std::int64_t>{3, 9, 12, 15}));
    EXPECT_FALSE(s.contains(4));
    EXPECT_EQ(s.scaled(2).members_upto(30), (std::vector<std::int64_t>{6, 18, 24, 30}));
    EXPECT_THROW(s.scaled(0), ParameterError);
}

TEST(PartSet, InteriorHypothesis)
{
    EXPECT_THROW(PartSet::J(ModularParams(4, 2)), ParameterError);
    EXPECT_THROW(PartSet::Jbar(ModularParams(5, 0)), ParameterError);
    EXPECT_NO_THROW(PartSet::residue(ModularParams(4, 2)));
}

TEST(PartSet, ParseRoundTrip)
{
    for (const std::string text : {"I:4,1", "J:5,2", "Jbar:3,1", "Js:7,3,4", "mult:6", "set:1,3,7", "2*Jbar:3,1",
                                   "3*set:2,5"}) {
        const auto s = parse_part_set(text);
        EXPECT_EQ(s.str(), text);
        EXPECT_EQ(parse_part_set(s.str()).members_upto(60), s.members_upto(60));
    }
    EXPECT_EQ(parse_part_set("Jbar:3,1").kind(), PartSet::Kind::Jbar);
    EXPECT_THROW(parse_part_set("Jbar"), std::invalid_argument);
    EXPECT_THROW(parse_part_set("Q:3,1"), std::invalid_argument);
    EXPECT_THROW(parse_part_set("J:3"), std::invalid_argument);
    EXPECT_THROW(parse_part_set("J:3,x"), std::invalid_argument);
    EXPECT_THROW(parse_part_set("J:6,3"), ParameterError);
}
