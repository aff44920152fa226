#include <cstdlib>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qpl/error.hpp"
#include "qpl/partitions.hpp"

using namespace qpl;

namespace {

std::vector<ModularParams> interior_grid(std::int64_t k_max)
{
    std::vector<ModularParams> out;
    for (std::int64_t k = 3; k <= k_max; ++k)
        for (std::int64_t l = 1; l < k; ++l)
            if (2 * l != k)
                out.emplace_back(k, l);
    return out;
}

std::vector<Integer> ints(std::initializer_list<long> v)
{
    return {v.begin(), v.end()};
}

// The oracle's counts for a part set, through the test-side counter.
Integer reference(std::int64_t n, const PartSet& set, const CountMode& mode)
{
    const auto cap = mode.cap();
    return oracle::count_partitions(
        n, [&](std::int64_t x) { return set.contains(x); }, cap ? *cap : -1, mode.gamma() == -1);
}

class ScopedEnv {
public:
    ScopedEnv(const char* name, const char* value) : name_(name) { setenv(name, value, 1); }
    ~ScopedEnv() { unsetenv(name_); }

private:
    const char* name_;
};

} // namespace

TEST(CountMode, Normalization)
{
    EXPECT_EQ(CountMode::at_most(1), CountMode::distinct());
    EXPECT_EQ(CountMode::at_most(3).cap(), 3);
    EXPECT_FALSE(CountMode::unrestricted().cap().has_value());
    EXPECT_EQ(CountMode::distinct_gamma(-1).gamma(), -1);
    EXPECT_THROW(CountMode::at_most(0), ParameterError);
    EXPECT_THROW(CountMode::distinct_gamma(2), ParameterError);
}

TEST(Oracle, SpecExamples)
{
    const auto all = PartSet::Jbar(ModularParams(3, 1));
    EXPECT_EQ(oracle_count(10, all, CountMode::unrestricted()), 42);
    EXPECT_EQ(oracle_count(50, all, CountMode::unrestricted()), 204226);
    EXPECT_EQ(oracle_count(5, PartSet::explicit_set({1, 2}), CountMode::unrestricted()), 3);
    EXPECT_EQ(oracle_count(0, all, CountMode::distinct()), 1);
}

TEST(Oracle, MatchesIndependentCounter)
{
    std::vector<PartSet> sets{PartSet::Jbar(ModularParams(3, 1)), PartSet::J(ModularParams(5, 2)),
                              PartSet::residue(ModularParams(4, 3)), PartSet::Js(ModularParams(7, 3), 3),
                              PartSet::explicit_set({2, 3, 11}), PartSet::Jbar(ModularParams(4, 1)).scaled(2)};
    std::vector<CountMode> modes{CountMode::unrestricted(), CountMode::distinct(), CountMode::at_most(2),
                                 CountMode::at_most(3, CountMode::Signing::length_signed),
                                 CountMode::distinct_gamma(-1), CountMode::unrestricted_gamma(-1)};
    for (const auto& s : sets)
        for (const auto& m : modes)
            for (std::int64_t n = 0; n <= 45; ++n)
                ASSERT_EQ(oracle_count(n, s, m), reference(n, s, m)) << s.str() << " " << m.str() << " n=" << n;
}

TEST(Oracle, LiteralEnumerationAgreesWithDp)
{
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<std::int64_t> members;
        for (std::int64_t x = 1; x <= 30; ++x)
            if (rng() % 3 == 0)
                members.push_back(x);
        if (members.empty())
            members.push_back(1);
        const auto set = PartSet::explicit_set(members);
        const CountMode modes[] = {CountMode::unrestricted(), CountMode::distinct(), CountMode::at_most(2),
                                   CountMode::distinct_gamma(-1)};
        for (const auto& m : modes)
            for (std::int64_t n = 0; n <= 22; ++n)
                ASSERT_EQ(literal_count(n, set, m), oracle_count(n, set, m));
    }
    EXPECT_THROW(literal_count(31, PartSet::multiples(1), CountMode::unrestricted()), OracleBoundError);
}

TEST(Oracle, BoundIsEnforcedAndConfigurable)
{
    const auto set = PartSet::multiples(1);
    EXPECT_EQ(oracle_bound(), 120);
    EXPECT_THROW(oracle_count(121, set, CountMode::unrestricted()), OracleBoundError);
    EXPECT_NO_THROW(oracle_count(200, set, CountMode::distinct(), 200));
    {
        ScopedEnv env("QPL_ORACLE_BOUND", "15");
        EXPECT_EQ(oracle_bound(), 15);
        EXPECT_THROW(oracle_table(set, CountMode::unrestricted(), 16), OracleBoundError);
        EXPECT_EQ(oracle_table(set, CountMode::unrestricted(), 15).values.back(), 176);
    }
    EXPECT_EQ(oracle_bound(), 120);
}

TEST(GeneratingFunction, MatchesOracle)
{
    std::vector<PartSet> sets{PartSet::Jbar(ModularParams(5, 1)), PartSet::J(ModularParams(7, 2)),
                              PartSet::Js(ModularParams(4, 1), 4), PartSet::multiples(3),
                              PartSet::explicit_set({1, 4, 9, 16}), PartSet::J(ModularParams(3, 1)).scaled(3)};
    std::vector<CountMode> modes{CountMode::unrestricted(), CountMode::distinct(), CountMode::at_most(3),
                                 CountMode::distinct_gamma(-1), CountMode::unrestricted_gamma(-1),
                                 CountMode::at_most(2, CountMode::Signing::length_signed)};
    for (const auto& s : sets) {
        for (const auto& m : modes) {
            const auto gf = gf_count(s, m, 90);
            const auto dp = oracle_table(s, m, 90);
            ASSERT_EQ(gf.values, dp.values) << s.str() << " " << m.str();
            EXPECT_EQ(gf.provenance, Provenance::generating_function);
        }
    }
}

TEST(GeneratingFunction, SignedDistinctIsFigurateIndicator)
{
    for (const auto& p : interior_grid(7)) {
        const auto t = gf_count(PartSet::Jbar(p), CountMode::distinct_gamma(-1), 150);
        std::vector<Integer> want(151, 0);
        for (std::int64_t j = -30; j <= 30; ++j) {
            const auto m = figurate(p, j);
            if (m <= 150)
                want[m] += (j % 2 == 0) ? 1 : -1;
        }
        ASSERT_EQ(t.values, want) << p.str();
    }
}

TEST(SequenceTable, NegativeIndexIsZero)
{
    const auto t = gf_count(PartSet::multiples(1), CountMode::unrestricted(), 5);
    EXPECT_EQ(t.at(-1), 0);
    EXPECT_EQ(t.at(5), 7);
    EXPECT_EQ(t.order(), 5);
}

TEST(Recursion, PbarExamples)
{
    const auto t = recursion_pbar(ModularParams(3, 1), 50);
    EXPECT_EQ(std::vector<Integer>(t.values.begin(), t.values.begin() + 11),
              ints({1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42}));
    EXPECT_EQ(t.values[50], 204226);
    EXPECT_EQ(t.provenance, Provenance::recursion);

    // (5, 1): parts = +-1 mod 5 or 0 mod 5
    EXPECT_EQ(recursion_pbar(ModularParams(5, 1), 8).values, ints({1, 1, 1, 1, 2, 3, 4, 4, 5}));
}

TEST(Recursion, PbarMatchesGeneratingFunction)
{
    for (const auto& p : interior_grid(8))
        ASSERT_EQ(recursion_pbar(p, 200).values, gf_count(PartSet::Jbar(p), CountMode::unrestricted(), 200).values)
            << p.str();
}

TEST(Recursion, RejectsBoundaryParameters)
{
    EXPECT_THROW(recursion_pbar(ModularParams(4, 2), 10), ParameterError);
    EXPECT_THROW(recursion_pbar(ModularParams(4, 0), 10), ParameterError);
    EXPECT_THROW(recursion_pdhat(ModularParams(6, 3), 2, 10), ParameterError);
    EXPECT_THROW(recursion_pdt_gamma(ModularParams(3, 1), 0, 10), ParameterError);
    EXPECT_THROW(recursion_pbar(ModularParams(3, 1), -1), ParameterError);
}

TEST(Recursion, GeneralQuotientMatchesDirectDivision)
{
    const auto grid = interior_grid(7);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& p1 = grid[i];
        const auto& p2 = grid[(i * 5 + 3) % grid.size()];
        for (const int g1 : {1, -1}) {
            for (const int g2 : {1, -1}) {
                const auto rec = recursion_general(p1, g1, p2, g2, 120);
                const auto direct = general_quotient_series(p1, g1, p2, g2, 120);
                ASSERT_EQ(rec.values, std::vector<Integer>(direct.coeffs().begin(), direct.coeffs().end()))
                    << p1.str() << " " << g1 << " " << p2.str() << " " << g2;
            }
        }
    }
}

TEST(Recursion, JSetsMatchGeneratingFunctions)
{
    for (const auto& p : interior_grid(8)) {
        for (const int g : {1, -1}) {
            ASSERT_EQ(recursion_pdt_gamma(p, g, 150).values,
                      gf_count(PartSet::J(p), CountMode::distinct_gamma(g), 150).values)
                << p.str() << " " << g;
            ASSERT_EQ(recursion_p_gamma(p, g, 150).values,
                      gf_count(PartSet::J(p), CountMode::unrestricted_gamma(g), 150).values)
                << p.str() << " " << g;
        }
    }
}

TEST(Recursion, CappedMultiplicity)
{
    // distinct partitions: 1,1,1,2,2,3,4,5,6,8,10
    EXPECT_EQ(recursion_pdhat(ModularParams(3, 1), 1, 10).values, ints({1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10}));
    for (const auto& p : interior_grid(6))
        for (std::int64_t d = 1; d <= 4; ++d)
            ASSERT_EQ(recursion_pdhat(p, d, 100).values, oracle_table(PartSet::Jbar(p), CountMode::at_most(d), 100).values)
                << p.str() << " d=" << d;
}

TEST(Identities, ShiftedPartitionsPassAndDetectPerturbation)
{
    const ModularParams p(5, 2);
    for (const int g : {1, -1})
        EXPECT_TRUE(identity_shifted_partitions(p, g, 120).passed());

    auto sides = shifted_partition_sides(p, -1, 60);
    sides.unrestricted_rhs[37] += 1;
    const auto r = check_shifted_partitions(sides, p, -1, 60);
    ASSERT_FALSE(r.passed());
    EXPECT_EQ(r.failure->q_exponent, 37);
    EXPECT_EQ(r.failure->rhs, r.failure->lhs + 1);
}

TEST(Identities, CappedMultiplicityPassAndDetectPerturbation)
{
    const ModularParams p(7, 3);
    for (std::int64_t d = 1; d <= 3; ++d)
        EXPECT_TRUE(identity_capped_multiplicity(p, d, 120).passed());

    auto sides = capped_multiplicity_sides(p, 2, 60);
    sides.lhs[12] -= 5;
    const auto r = check_capped_multiplicity(sides, p, 2, 60);
    ASSERT_FALSE(r.passed());
    EXPECT_EQ(r.failure->q_exponent, 12);
}
