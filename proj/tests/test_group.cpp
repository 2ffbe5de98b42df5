#include <gtest/gtest.h>

#include "ansig/group.hpp"
#include "ansig/oracle.hpp"
#include "gen.hpp"
#include "oracles.hpp"

using namespace ansig;

namespace {

Permutation P(int n, const char* s) { return Permutation::parse(n, s); }

GeneratorSet alternating_gens(int n)
{
    return GeneratorSet({Permutation::long_cycle(n, 1, 3),
                         n % 2 == 1 ? Permutation::long_cycle(n, 1, n) : Permutation::long_cycle(n, 2, n - 1)});
}

}  // namespace

TEST(Group, OrbitsAndTransitivity)
{
    const GeneratorSet gs({P(7, "(1 2)(3 4)"), P(7, "(2 3)")});
    EXPECT_EQ(orbit(gs, 1), (std::vector<Value>{1, 2, 3, 4}));
    EXPECT_EQ(orbit(gs, 6), (std::vector<Value>{6}));
    EXPECT_FALSE(is_transitive(gs));
    EXPECT_TRUE(is_transitive(alternating_gens(9)));
    EXPECT_THROW(GeneratorSet({}), PreconditionError);
    EXPECT_THROW(GeneratorSet({P(3, "(1 2)"), P(4, "(1 2)")}), DegreeMismatch);
}

TEST(Group, OrdersOfStandardGroups)
{
    EXPECT_EQ(group_order(GeneratorSet({P(6, "(1 2 3 4 5 6)")})), 6);
    EXPECT_EQ(group_order(GeneratorSet({P(6, "(1 2 3 4 5 6)"), P(6, "(2 6)(3 5)")})), 12);
    EXPECT_EQ(group_order(GeneratorSet({P(8, "(1 2)"), Permutation::long_cycle(8, 1, 8)})), factorial(8));
    for (int n = 5; n <= 44; ++n)
        EXPECT_EQ(group_order(alternating_gens(n)), alternating_order(n)) << n;
    // PSL(2,5) on the projective line over F_5: order 60 inside A_6.
    EXPECT_EQ(group_order(GeneratorSet({P(6, "(1 2 3 4 5)"), P(6, "(1 6)(2 5)")})), 60);
    EXPECT_THROW((void)group_order(alternating_gens(12), 10), PreconditionError);
}

TEST(GroupProperty, OrderMatchesClosure)
{
    gen::Rng rng(21);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = gen::uniform(rng, 2, 7);
        std::vector<Permutation> gens;
        const int k = gen::uniform(rng, 1, 3);
        for (int i = 0; i < k; ++i)
            gens.push_back(gen::uniform(rng, 0, 2) == 0 ? gen::cycle(rng, n, gen::uniform(rng, 2, n)) : gen::perm(rng, n));
        const auto elems = oracle::closure(oracle::tables(gens));
        EXPECT_EQ(group_order(GeneratorSet(gens)), static_cast<unsigned>(elems.size()));
    }
}

TEST(Group, MinimalBlockSystems)
{
    // Wreath product C2 wr C3 on pairs {1,2},{3,4},{5,6}.
    const GeneratorSet gs({P(6, "(1 3 5)(2 4 6)"), P(6, "(1 2)")});
    const auto b = minimal_block_system(gs, {1, 2});
    EXPECT_EQ(b.block_size, 2);
    EXPECT_EQ(b.blocks, (std::vector<std::vector<Value>>{{1, 2}, {3, 4}, {5, 6}}));
    EXPECT_FALSE(b.is_trivial());
    EXPECT_EQ(minimal_block_system(gs, {1, 3}).blocks.size(), 1u);
    EXPECT_FALSE(is_primitive(gs));
    EXPECT_TRUE(is_primitive(alternating_gens(8)));
    EXPECT_THROW((void)minimal_block_system(GeneratorSet({P(4, "(1 2)")}), {1, 2}), PreconditionError);
}

TEST(GroupProperty, PrimitivityMatchesSubsetOracle)
{
    gen::Rng rng(22);
    int transitive_seen = 0;
    for (int trial = 0; trial < 300 && transitive_seen < 60; ++trial) {
        const int n = gen::uniform(rng, 4, 8);
        std::vector<Permutation> gens{gen::perm(rng, n)};
        if (gen::uniform(rng, 0, 1))
            gens.push_back(gen::cycle(rng, n, gen::uniform(rng, 2, std::min(n, 4))));
        const GeneratorSet gs(gens);
        if (!is_transitive(gs))
            continue;
        ++transitive_seen;
        const auto group = oracle::closure(oracle::tables(gens));
        EXPECT_EQ(is_primitive(gs), oracle::primitive_by_subsets(group, n));

        // The returned blocks are permuted by every generator.
        const auto bs = minimal_block_system(gs, {1, gen::uniform(rng, 2, n)});
        for (const auto& g : gens)
            for (const auto& blk : bs.blocks) {
                std::vector<Value> img;
                for (Value v : blk)
                    img.push_back(g(v));
                std::sort(img.begin(), img.end());
                EXPECT_NE(std::find(bs.blocks.begin(), bs.blocks.end(), img), bs.blocks.end());
            }
    }
    EXPECT_GE(transitive_seen, 30);
}

TEST(Group, CoprimeCycleCriterion)
{
    const GeneratorSet gs = alternating_gens(9);
    EXPECT_TRUE(primitive_by_coprime_cycle(gs, Cycle({1, 2, 3, 4, 5, 6, 7})));
    // gcd(9, 9) != 1.
    EXPECT_FALSE(primitive_by_coprime_cycle(gs, Cycle({1, 2, 3, 4, 5, 6, 7, 8, 9})));
    // 3 does not exceed 9/2.
    EXPECT_FALSE(primitive_by_coprime_cycle(gs, Cycle({1, 2, 3})));
    // gcd(6, 4) != 1.
    EXPECT_FALSE(primitive_by_coprime_cycle(alternating_gens(6), Cycle({1, 2, 3, 4})));
}

TEST(Group, RecognitionRoutes)
{
    // (1 2 3) has six fixed points, so Jones fires.
    const auto a9 = is_full_alternating(alternating_gens(9));
    EXPECT_TRUE(a9.is_alternating);
    EXPECT_TRUE(a9.jones);
    EXPECT_EQ(a9.order, alternating_order(9));

    // A 5-cycle in A_10 with 5 fixed points: Jones.
    const GeneratorSet g10({Permutation::long_cycle(10, 1, 5), Permutation::long_cycle(10, 2, 9)});
    const auto r10 = is_full_alternating(g10);
    EXPECT_TRUE(r10.is_alternating);
    EXPECT_TRUE(r10.jones);

    // S_n is not A_n.
    const auto s6 = is_full_alternating(GeneratorSet({P(6, "(1 2)"), Permutation::long_cycle(6, 1, 6)}));
    EXPECT_FALSE(s6.is_alternating);

    // PSL(2,5) on 6 points: transitive, primitive, even, proper.
    const auto psl = is_full_alternating(GeneratorSet({P(6, "(1 2 3 4 5)"), P(6, "(1 6)(2 5)")}));
    EXPECT_FALSE(psl.is_alternating);
    EXPECT_FALSE(psl.miller);
    EXPECT_FALSE(psl.jones);
    EXPECT_EQ(psl.order, 60);
}

TEST(Group, MillerWitnessScan)
{
    // <(1..11 cycle), (1 2 3)> contains a 7-cycle on 11 points; passing it as a witness fires Miller.
    const GeneratorSet gs({Permutation::long_cycle(11, 1, 11), Permutation::long_cycle(11, 1, 3)});
    const std::vector<Permutation> w{Permutation::long_cycle(11, 1, 7)};
    RecognitionOptions fast;
    fast.compute_exact = false;
    const auto ans = is_full_alternating(gs, w, fast);
    EXPECT_TRUE(ans.miller);
    EXPECT_EQ(ans.route, Route::miller);
    EXPECT_FALSE(ans.order.has_value());
}

TEST(Group, ClassSplitting)
{
    EXPECT_TRUE(class_splits(CycleType::of(P(5, "(1 2 3 4 5)"))));
    EXPECT_FALSE(class_splits(CycleType::of(P(5, "(1 2 3)"))));
    EXPECT_TRUE(class_splits(CycleType::of(P(9, "(1 2 3)(4 5 6 7 8)"))));
    EXPECT_FALSE(class_splits(CycleType::of(P(6, "(1 2 3)(4 5 6)"))));
    EXPECT_TRUE(class_splits(CycleType::of(P(1, "()"))));
}

TEST(Group, EvenConjugatorsAgreeWithExhaustiveSearchInA5)
{
    const auto a5 = alternating_elements(5);
    for (const auto& a : a5)
        for (const auto& a2 : a5) {
            if (CycleType::of(a) != CycleType::of(a2))
                continue;
            bool exists = false;
            for (const auto& b : a5)
                exists = exists || conjugate(a, b) == a2;
            if (exists) {
                const auto b = conjugator_in_An(a, a2);
                EXPECT_TRUE(b.is_even());
                EXPECT_EQ(conjugate(a, b), a2);
            } else {
                EXPECT_THROW((void)conjugator_in_An(a, a2), ClassSplit) << a.to_string() << " " << a2.to_string();
            }
        }
    EXPECT_THROW((void)conjugator_in_An(P(5, "(1 2 3)"), P(5, "(1 2)(3 4)")), PreconditionError);
}

TEST(GroupProperty, EvenConjugatorsForRandomPairs)
{
    gen::Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = gen::uniform(rng, 5, 30);
        const auto a = gen::even_perm(rng, n);
        const auto a2 = conjugate(a, gen::perm(rng, n));
        if (class_splits(CycleType::of(a)))
            continue;
        const auto b = conjugator_in_An(a, a2);
        EXPECT_TRUE(b.is_even());
        EXPECT_EQ(conjugate(a, b), a2);
    }
}

TEST(Group, Factorials)
{
    EXPECT_EQ(factorial(0), 1);
    EXPECT_EQ(factorial(10), 3628800);
    EXPECT_EQ(alternating_order(5), 60);
    EXPECT_EQ(alternating_order(20).str(), "1216451004088320000");
}
