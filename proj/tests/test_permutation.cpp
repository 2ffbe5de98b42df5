#include <gtest/gtest.h>

#include "ansig/permutation.hpp"
#include "gen.hpp"
#include "oracles.hpp"

using namespace ansig;

TEST(Permutation, ParsesAndPrintsCanonicalForm)
{
    const auto p = Permutation::parse(7, "(3 1 2)(6 5)");
    EXPECT_EQ(p.to_string(), "(1 2 3)(5 6)");
    EXPECT_EQ(p(3), 1);
    EXPECT_EQ(p(4), 4);
    EXPECT_EQ(Permutation::parse(4, "()"), Permutation::identity(4));
    EXPECT_EQ(Permutation::identity(4).to_string(), "()");
}

TEST(Permutation, ParseErrorsCarryPositions)
{
    try {
        (void)Permutation::parse(5, "(1 2)(3 9)");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 8u);
    }
    EXPECT_THROW((void)Permutation::parse(5, "(1 2"), ParseError);
    EXPECT_THROW((void)Permutation::parse(5, "(1 1)"), ParseError);
    EXPECT_THROW((void)Permutation::parse(5, "(1 2)(2 3)"), ParseError);
    EXPECT_THROW((void)Permutation::parse(5, "1 2"), ParseError);
}

TEST(Permutation, RejectsNonBijections)
{
    const std::vector<int> dup{1, 1, 3};
    EXPECT_THROW((void)Permutation::from_images(dup), InvalidPermutation);
    const std::vector<int> out{1, 4, 2};
    EXPECT_THROW((void)Permutation::from_images(out), InvalidPermutation);
    const std::vector<std::vector<int>> overlap{{1, 2}, {2, 3}};
    EXPECT_THROW((void)Permutation::from_cycles(4, overlap), InvalidPermutation);
}

TEST(Permutation, ComposesLeftToRight)
{
    const auto p = Permutation::parse(3, "(1 2)");
    const auto q = Permutation::parse(3, "(2 3)");
    // 1 -> 2 -> 3, 3 -> 3 -> 2, 2 -> 1 -> 1
    EXPECT_EQ((p * q).to_string(), "(1 3 2)");
    EXPECT_THROW((void)compose(p, Permutation::identity(4)), DegreeMismatch);
}

TEST(Permutation, CommutatorAndConjugateConventions)
{
    const auto a = Permutation::parse(5, "(1 2 3)");
    const auto b = Permutation::parse(5, "(3 4 5)");
    EXPECT_EQ(commutator(a, b), a.inverse() * b.inverse() * a * b);
    // b^-1 a b relabels a's cycle by b.
    EXPECT_EQ(conjugate(a, b).to_string(), "(1 2 4)");
}

TEST(Permutation, CycleTypeAndSupport)
{
    const auto p = Permutation::parse(9, "(1 2 3)(4 5)(6 7)");
    const auto t = CycleType::of(p);
    EXPECT_EQ(t.lengths, (std::vector<int>{2, 2, 3}));
    EXPECT_EQ(t.support_size(), 7);
    EXPECT_EQ(t.fixed_points(), 2);
    EXPECT_EQ(t.order(), 6u);
    EXPECT_TRUE(t.is_even());
    const CycleDecomposition d(p);
    EXPECT_EQ(d.nc(), 3);
    EXPECT_EQ(d.complement(), (std::vector<int>{8, 9}));
}

TEST(PermutationProperty, MatchesPointwiseOracle)
{
    gen::Rng rng(11);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = gen::uniform(rng, 1, 24);
        const auto p = gen::perm(rng, n);
        const auto q = gen::perm(rng, n);
        EXPECT_EQ(oracle::table(p * q), oracle::then(oracle::table(p), oracle::table(q)));
        EXPECT_EQ(oracle::table(p.inverse()), oracle::inverse(oracle::table(p)));
        EXPECT_EQ(p.is_even(), oracle::even_by_inversions(oracle::table(p)));
        EXPECT_EQ(parity(p) == Parity::even, p.is_even());
        if (n <= 12) {
            EXPECT_EQ(p.order(), oracle::order_by_powers(oracle::table(p)));
        }
    }
}

TEST(PermutationProperty, TextRoundTrip)
{
    gen::Rng rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = gen::uniform(rng, 1, 40);
        const auto p = gen::perm(rng, n);
        EXPECT_EQ(Permutation::parse(n, p.to_string()), p);
        EXPECT_EQ(CycleDecomposition(p).recompose(), p);
    }
}

TEST(PermutationProperty, PowersAgreeWithRepeatedProducts)
{
    gen::Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = gen::uniform(rng, 1, 15);
        const auto p = gen::perm(rng, n);
        const int k = gen::uniform(rng, -6, 9);
        Permutation expect = Permutation::identity(n);
        const Permutation step = k >= 0 ? p : p.inverse();
        for (int i = 0; i < std::abs(k); ++i)
            expect = expect * step;
        EXPECT_EQ(p.power(k), expect) << p.to_string() << " ^ " << k;
        EXPECT_TRUE(p.power(static_cast<long long>(p.order())).is_identity());
    }
}

TEST(PermutationProperty, ConjugationRelabelsCycles)
{
    gen::Rng rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = gen::uniform(rng, 2, 20);
        const auto a = gen::perm(rng, n);
        const auto b = gen::perm(rng, n);
        const auto c = conjugate(a, b);
        EXPECT_EQ(CycleType::of(c), CycleType::of(a));
        for (int x = 1; x <= n; ++x)
            EXPECT_EQ(c(b(x)), b(a(x)));
    }
}

TEST(PermutationProperty, ProductOfSpanIsLeftToRight)
{
    gen::Rng rng(15);
    const std::vector<Permutation> xs{gen::perm(rng, 8), gen::perm(rng, 8), gen::perm(rng, 8)};
    EXPECT_EQ(product(xs), xs[0] * xs[1] * xs[2]);
    EXPECT_THROW((void)product(std::vector<Permutation>{}), PreconditionError);
}
