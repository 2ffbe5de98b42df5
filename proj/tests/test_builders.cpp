#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "ansig/builders.hpp"
#include "ansig/group.hpp"
#include "ansig/oracle.hpp"
#include "gen.hpp"
#include "oracles.hpp"

using namespace ansig;

namespace {

Signature S(const char* text) { return parse_signature(text); }

/// Re-checks a certificate with table arithmetic only: orders, parity,
/// the product relation and transitivity of the generated group.
void expect_independently_valid(const Certificate& cert)
{
    const auto& v = cert.vector;
    ASSERT_EQ(static_cast<int>(v.a.size()), cert.signature.h);
    ASSERT_EQ(v.c.size(), cert.signature.periods.size());
    oracle::Table prod(static_cast<std::size_t>(cert.degree));
    std::iota(prod.begin(), prod.end(), 0);
    std::vector<oracle::Table> gens;
    for (std::size_t i = 0; i < v.a.size(); ++i) {
        const auto a = oracle::table(v.a[i]);
        const auto b = oracle::table(v.b[i]);
        EXPECT_TRUE(oracle::even_by_inversions(a) && oracle::even_by_inversions(b));
        prod = oracle::then(prod, oracle::then(oracle::then(oracle::inverse(a), oracle::inverse(b)), oracle::then(a, b)));
        gens.push_back(a);
        gens.push_back(b);
    }
    for (std::size_t j = 0; j < v.c.size(); ++j) {
        const auto c = oracle::table(v.c[j]);
        EXPECT_TRUE(oracle::even_by_inversions(c));
        EXPECT_EQ(static_cast<long long>(oracle::order_by_powers(c)), cert.signature.periods[j]) << j;
        prod = oracle::then(prod, c);
        gens.push_back(c);
    }
    EXPECT_TRUE(oracle::is_identity(prod));
    EXPECT_TRUE(oracle::transitive(gens));
    EXPECT_TRUE(cert.report.all_pass());
    EXPECT_EQ(cert.sigma, rh_genus(cert.degree, cert.signature).sigma);
}

std::set<Value> support_union(const Permutation& x, const Permutation& y)
{
    std::set<Value> out;
    for (Value v = 1; v <= x.degree(); ++v)
        if (x(v) != v || y(v) != v)
            out.insert(v);
    return out;
}

Certificate base_for(int n, const Signature& s, std::uint64_t seed)
{
    SearchBudget b;
    b.seed = seed;
    b.max_states = 100000;
    const auto r = search_vector(n, s, b);
    if (!r.vector)
        throw std::runtime_error("no base vector for " + render(s));
    return make_certificate(n, s, *r.vector, Method::oracle, seed);
}

}  // namespace

TEST(Builders, CommutatorFromFactorization)
{
    const auto g = Permutation::parse(9, "(1 2 3 4 5)");
    const auto f = bertram_factorization(g, 3);
    const auto [a, b] = commutator_from_factorization(f);
    EXPECT_TRUE(a.is_even() && b.is_even());
    EXPECT_EQ(commutator(a, b), g);
}

TEST(Builders, SmallPrimesExamples)
{
    for (auto [n, text] : std::vector<std::pair<int, const char*>>{{40, "1;6"}, {41, "1;2,7"}, {44, "1;60"}, {42, "1;3,3"}}) {
        BuildTrace tr;
        const auto cert = build_small_primes(n, S(text), &tr);
        EXPECT_EQ(cert.method, Method::small_primes);
        expect_independently_valid(cert);
        ASSERT_TRUE(tr.prime && tr.factorization);
        EXPECT_GE(tr.prime->p, 3 * n / 4 + 3) << text;
        EXPECT_LE(tr.prime->p, n - 3) << text;
        EXPECT_EQ(tr.factorization->cycle_length(), tr.prime->p);
    }
    EXPECT_THROW((void)build_small_primes(40, S("1;5"), nullptr), PreconditionError);
}

TEST(Builders, MultiPeriodExamples)
{
    for (auto [n, text] : std::vector<std::pair<int, const char*>>{{25, "1;5,5"}, {24, "1;5,7,35"}, {30, "1;5,7,11,13"}}) {
        BuildTrace tr;
        const auto cert = build_multi_period(n, S(text), &tr);
        EXPECT_EQ(cert.method, Method::multi_period);
        expect_independently_valid(cert);
        ASSERT_TRUE(tr.alignment.has_value());
        const auto& al = *tr.alignment;
        EXPECT_EQ(al.forced_count, CycleDecomposition(al.c1).nc() + CycleDecomposition(al.c2).nc() - 1);
        // <c1, c2> is transitive on the union of supports.
        const auto dom = support_union(al.c1, al.c2);
        const auto orb = orbit(GeneratorSet({al.c1, al.c2}), *dom.begin());
        EXPECT_EQ(orb.size(), dom.size()) << text;
    }
    EXPECT_THROW((void)build_multi_period(24, S("1;5"), nullptr), PreconditionError);
}

TEST(Builders, OnePeriodExamples)
{
    const auto odd = build_one_period(17, S("1;5"));
    EXPECT_EQ(odd.method, Method::one_period_odd);
    expect_independently_valid(odd);

    for (auto [n, text] : std::vector<std::pair<int, const char*>>{{26, "1;25"}, {24, "1;35"}}) {
        BuildTrace tr;
        const auto cert = build_one_period(n, S(text), 1, &tr);
        EXPECT_EQ(cert.method, Method::one_period_even);
        expect_independently_valid(cert);
        ASSERT_TRUE(tr.factorization.has_value());
        const auto& f = *tr.factorization;
        EXPECT_EQ(oracle::then(oracle::table(f.left()), oracle::table(f.right())), oracle::table(f.target()));
    }
    EXPECT_THROW((void)build_one_period(17, S("1;6")), PreconditionError);
}

TEST(BuildersProperty, OnePeriodIsSeedStable)
{
    const auto a = build_one_period(28, S("1;7"), 5);
    const auto b = build_one_period(28, S("1;7"), 5);
    EXPECT_EQ(a.vector.entries(), b.vector.entries());
    EXPECT_EQ(a.seed, b.seed);
}

TEST(Builders, AmplifyOddPeriod)
{
    const auto base = base_for(9, S("1;5"), 3);
    const auto two = amplify_same_period(base, 2);
    EXPECT_EQ(two.vector.c[0], base.vector.c[0] * base.vector.c[0]);
    EXPECT_EQ(two.vector.c[1], base.vector.c[0].inverse());
    expect_independently_valid(two);
    for (int r = 1; r <= 6; ++r)
        expect_independently_valid(amplify_same_period(base, r));
}

TEST(Builders, AmplifyEvenPeriod)
{
    const auto base = base_for(8, S("1;4"), 3);
    const auto three = amplify_same_period(base, 3);
    const auto& c = base.vector.c[0];
    EXPECT_EQ(three.vector.c, (std::vector<Permutation>{c, c.inverse(), c}));
    expect_independently_valid(three);
    EXPECT_THROW((void)amplify_same_period(base, 2), PreconditionError);

    const auto pair = base_for(8, S("1;4,4"), 3);
    for (int r : {2, 4, 6})
        expect_independently_valid(amplify_same_period(pair, r));
    EXPECT_THROW((void)amplify_same_period(pair, 3), PreconditionError);
}

TEST(Builders, MixedPeriodExamples)
{
    const auto w7 = find_generating_pair(7, 5, 7, 1);
    ASSERT_TRUE(w7.has_value());
    const auto c7 = build_mixed_period(7, S("1;5,7"), *w7);
    EXPECT_EQ(c7.method, Method::mixed_period);
    expect_independently_valid(c7);

    const auto w9 = find_generating_pair(9, 3, 5, 1);
    ASSERT_TRUE(w9.has_value());
    expect_independently_valid(build_mixed_period(9, S("1;2,3,5"), *w9));

    // (1 2 3 4 5) and (1 2 3) only move five points.
    const std::pair<Permutation, Permutation> weak{Permutation::long_cycle(7, 1, 5), Permutation::long_cycle(7, 1, 3)};
    EXPECT_THROW((void)build_mixed_period(7, S("1;3,5"), weak), PreconditionError);
}

TEST(Builders, GenusHExamples)
{
    for (const char* text : {"2;-", "2;5,7", "3;3", "4;2,2"}) {
        const auto cert = build_genus_h(7, S(text));
        EXPECT_EQ(cert.method, Method::genus_h);
        expect_independently_valid(cert);
        for (int i = 1; i + 1 < cert.signature.h; ++i) {
            EXPECT_TRUE(cert.vector.a[static_cast<std::size_t>(i)].is_identity());
            EXPECT_TRUE(cert.vector.b[static_cast<std::size_t>(i)].is_identity());
        }
    }
    EXPECT_THROW((void)build_genus_h(7, S("1;3")), PreconditionError);
}

TEST(BuildersProperty, GenusHAcrossDegrees)
{
    gen::Rng rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = gen::uniform(rng, 5, 30);
        Signature s;
        s.h = gen::uniform(rng, 2, 4);
        const auto orders = order_set(n).orders;
        const std::vector<long long> pool(orders.begin(), orders.end());
        const int r = gen::uniform(rng, 0, 3);
        for (int j = 0; j < r; ++j)
            s.periods.push_back(pool[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<int>(pool.size()) - 1))]);
        if (!is_potential(n, s))
            continue;
        expect_independently_valid(build_genus_h(n, s));
    }
}
