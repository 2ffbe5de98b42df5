#include "ansig/builders.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ansig/oracle.hpp"
#include "ansig/rng.hpp"

namespace ansig {

namespace {

Permutation canonical_element(int n, long long k) { return element_of_type(minimal_cycle_type(n, k), 1); }

Permutation product_inverse(int n, const std::vector<Permutation>& xs)
{
    Permutation acc(n);
    for (const auto& x : xs)
        acc = acc * x;
    return acc.inverse();
}

std::vector<Value> outside_of(int n, std::initializer_list<const Permutation*> xs)
{
    std::vector<Value> out;
    for (Value v = 1; v <= n; ++v) {
        bool moved = false;
        for (const auto* x : xs)
            moved = moved || x->moves(v);
        if (!moved)
            out.push_back(v);
    }
    return out;
}

GeneratingVector one_handle(int n, std::pair<Permutation, Permutation> ab, std::vector<Permutation> c)
{
    GeneratingVector v;
    v.degree = n;
    v.a.push_back(std::move(ab.first));
    v.b.push_back(std::move(ab.second));
    v.c = std::move(c);
    return v;
}

bool coprime_to_6(long long k) { return k % 2 != 0 && k % 3 != 0; }

void require_potential(int n, const Signature& s)
{
    if (const auto p = is_potential(n, s); !p)
        throw PreconditionError(pretty(s) + " is not potential for A_" + std::to_string(n) + ": " + p.reason);
}

/// [a, b] = g by the first odd l from the Bertram bound whose l-cycle class
/// does not split, falling back to a randomized search for small n.
std::pair<Permutation, Permutation> solve_commutator(const Permutation& g, std::uint64_t seed)
{
    const int n = g.degree();
    int l = bertram_lower_bound(g);
    if (l % 2 == 0)
        ++l;
    for (; l <= n; l += 2) {
        try {
            return commutator_from_factorization(bertram_factorization(g, l));
        } catch (const ClassSplit&) {
        }
    }
    if (n <= 16)
        if (auto ab = brute_commutator(g, SearchMode::randomized, seed, 2'000'000))
            return *ab;
    throw ConstructionFailure("no commutator decomposition found for " + g.to_string());
}

/// Bertram at the least legal length, then padded to the prime p.
TwoCycleFactorization prime_factorization(const Permutation& g, int p, const std::vector<Value>& priority)
{
    const int bound = bertram_lower_bound(g);
    if (bound > p)
        throw ConstructionFailure("bertram bound " + std::to_string(bound) + " exceeds the prime " + std::to_string(p));
    return pad_factorization(bertram_factorization(g, bound), p, priority);
}

}  // namespace

std::pair<Permutation, Permutation> commutator_from_factorization(const TwoCycleFactorization& f)
{
    Permutation a = f.left().inverse();
    Permutation b = conjugator_in_An(a, f.right());
    if (commutator(a, b) != f.target())
        throw std::logic_error("commutator assembly failed its own check");
    return {std::move(a), std::move(b)};
}

Certificate build_small_primes(int n, const Signature& s, BuildTrace* trace)
{
    if (n < 40 || s.h != 1 || s.r() < 1)
        throw PreconditionError("small-primes construction needs n >= 40, h = 1 and r >= 1");
    require_potential(n, s);
    const auto it = std::find_if(s.periods.begin(), s.periods.end(), [](long long k) { return k % 2 == 0 || k % 3 == 0; });
    if (it == s.periods.end())
        throw PreconditionError("small-primes construction needs a period divisible by 2 or 3");
    const auto i0 = static_cast<std::size_t>(it - s.periods.begin());

    std::vector<Permutation> c;
    for (long long k : s.periods)
        c.push_back(canonical_element(n, k));

    std::vector<Value> priority;
    if (s.r() == 1) {
        c[0] = std::get<Permutation>(large_support_element(n, s.periods[0]));
        priority = outside_of(n, {&c[0]});
    } else {
        const std::size_t i1 = i0 == 0 ? 1 : 0;
        const CycleType t0 = period_cycle_type(n, s.periods[i0]);
        const CycleType t1 = period_cycle_type(n, s.periods[i1]);
        AlignmentPlan plan = t1.cycle_count() >= t0.cycle_count() ? transitive_alignment(t0, t1, n)
                                                                  : transitive_alignment(t1, t0, n);
        if (t1.cycle_count() >= t0.cycle_count()) {
            c[i0] = plan.c1;
            c[i1] = plan.c2;
        } else {
            c[i1] = plan.c1;
            c[i0] = plan.c2;
        }
        priority = outside_of(n, {&c[i0], &c[i1]});
        if (trace)
            trace->alignment = std::move(plan);
    }

    const PrimeWitness p = prime_in_range(n, PrimeRange::strict);
    const auto f = prime_factorization(product_inverse(n, c), p.p, priority);
    if (trace) {
        trace->factorization = f;
        trace->prime = p;
    }
    return make_certificate(n, s, one_handle(n, commutator_from_factorization(f), std::move(c)), Method::small_primes);
}

Certificate build_multi_period(int n, const Signature& s, BuildTrace* trace)
{
    if (n < 24 || s.h != 1 || s.r() < 2)
        throw PreconditionError("multi-period construction needs n >= 24, h = 1 and r >= 2");
    if (!std::all_of(s.periods.begin(), s.periods.end(), coprime_to_6))
        throw PreconditionError("multi-period construction needs every period coprime to 6");
    require_potential(n, s);

    std::vector<Permutation> c;
    for (long long k : s.periods)
        c.push_back(canonical_element(n, k));
    const CycleType t0 = period_cycle_type(n, s.periods[0]);
    const CycleType t1 = period_cycle_type(n, s.periods[1]);
    const bool forward = t1.cycle_count() >= t0.cycle_count();
    AlignmentPlan plan = forward ? transitive_alignment(t0, t1, n) : transitive_alignment(t1, t0, n);
    c[0] = forward ? plan.c1 : plan.c2;
    c[1] = forward ? plan.c2 : plan.c1;

    const PrimeWitness p = prime_in_range(n, PrimeRange::wide);
    const auto f = prime_factorization(product_inverse(n, c), p.p, outside_of(n, {&c[0], &c[1]}));
    if (trace) {
        trace->alignment = std::move(plan);
        trace->factorization = f;
        trace->prime = p;
    }
    return make_certificate(n, s, one_handle(n, commutator_from_factorization(f), std::move(c)), Method::multi_period);
}

namespace {

Certificate one_period_odd(int n, const Signature& s, BuildTrace* trace)
{
    const long long k = s.periods[0];
    auto e = large_support_element(n, k);
    Permutation c = std::holds_alternative<Permutation>(e) ? std::get<Permutation>(e) : Permutation::long_cycle(n, 1, static_cast<int>(k));
    const Permutation g = c.inverse();
    if (bertram_lower_bound(g) > n - 4)
        throw ConstructionFailure("bertram bound exceeds n - 4");
    // An (n-4)-cycle with 4 fixed points: isolatable, so primitivity gives A_n.
    const auto f = pad_factorization(bertram_factorization(g, bertram_lower_bound(g)), n - 4, outside_of(n, {&c}));
    if (trace)
        trace->factorization = f;
    return make_certificate(n, s, one_handle(n, commutator_from_factorization(f), {c}), Method::one_period_odd);
}

Certificate one_period_even(int n, const Signature& s, std::uint64_t seed, BuildTrace* trace)
{
    const long long k = s.periods[0];
    const Permutation c = canonical_element(n, k);
    const Permutation g = c.inverse();
    for (std::uint64_t attempt = 0; attempt < 8; ++attempt) {
        const std::uint64_t sd = hash_combine(seed, attempt);
        std::optional<TwoCycleFactorization> f;
        try {
            f = xu_factorization(g, sd, 2'000'000);
        } catch (const ConstructionFailure&) {
            continue;
        }
        auto ab = commutator_from_factorization(*f);
        GeneratingVector v = one_handle(n, std::move(ab), {c});
        if (!verify_vector(n, s, v).all_pass())
            continue;
        if (trace)
            trace->factorization = f;
        return make_certificate(n, s, std::move(v), Method::one_period_even, sd);
    }

    // Fallback: an element of order k with support >= n-3 and a prime cycle
    // length in the wide range.
    const auto types = cycle_types_of_order(n, k);
    const auto best = std::max_element(types.begin(), types.end(), [](const CycleType& x, const CycleType& y) {
        return x.support_size() < y.support_size();
    });
    if (best == types.end() || best->support_size() < n - 3)
        throw ConstructionFailure("no large-support element of order " + std::to_string(k));
    const Permutation c2 = element_of_type(*best, 1);
    const PrimeWitness p = prime_in_range(n, PrimeRange::wide);
    const auto f = prime_factorization(c2.inverse(), p.p, outside_of(n, {&c2}));
    GeneratingVector v = one_handle(n, commutator_from_factorization(f), {c2});
    if (!verify_vector(n, s, v).all_pass())
        throw ConstructionFailure("one-period constructions did not generate A_" + std::to_string(n));
    if (trace) {
        trace->factorization = f;
        trace->prime = p;
    }
    return make_certificate(n, s, std::move(v), Method::one_period_even);
}

}  // namespace

Certificate build_one_period(int n, const Signature& s, std::uint64_t seed, BuildTrace* trace)
{
    if (s.h != 1 || s.r() != 1)
        throw PreconditionError("one-period construction needs a signature [1; k]");
    const long long k = s.periods[0];
    if (!coprime_to_6(k))
        throw PreconditionError("one-period construction needs k coprime to 6");
    if (n % 2 == 1 ? n < 17 : n < 24)
        throw PreconditionError("one-period construction needs n >= 17 odd or n >= 24 even");
    require_potential(n, s);
    return n % 2 == 1 ? one_period_odd(n, s, trace) : one_period_even(n, s, seed, trace);
}

namespace {

/// `count` elements of order k with product x.
std::vector<Permutation> expand(const Permutation& x, int count, long long k)
{
    std::vector<Permutation> out;
    const Permutation xi = x.inverse();
    if (count % 2 == 1) {
        out.push_back(x);
    } else {
        if (k % 2 == 0)
            throw PreconditionError("an even number of period-" + std::to_string(k) +
                                    " entries cannot come from this base");
        // x^2 still has order k when k is odd.
        out.push_back(x * x);
        out.push_back(xi);
    }
    while (static_cast<int>(out.size()) < count) {
        out.push_back(xi);
        out.push_back(x);
    }
    return out;
}

}  // namespace

Certificate amplify_same_period(const Certificate& base, int r)
{
    const Signature& bs = base.signature;
    if (bs.h != 1 || bs.r() < 1 || bs.r() > 2)
        throw PreconditionError("amplification needs a [1;k] or [1;k,k] base");
    const long long k = bs.periods[0];
    if (bs.r() == 2 && bs.periods[1] != k)
        throw PreconditionError("amplification needs equal periods in the base");
    if (r < bs.r())
        throw PreconditionError("cannot amplify to fewer periods than the base has");

    const int n = base.degree;
    const auto& v = base.vector;
    std::vector<Permutation> c;
    if (bs.r() == 1) {
        c = expand(v.c[0], r, k);
    } else {
        if (k % 2 == 0 && r % 2 == 1)
            throw PreconditionError("odd r with even k needs a [1;k] base");
        c.push_back(v.c[0]);
        auto rest = expand(v.c[1], r - 1, k);
        c.insert(c.end(), rest.begin(), rest.end());
    }
    Signature s;
    s.h = 1;
    s.periods.assign(static_cast<std::size_t>(r), k);
    GeneratingVector out = v;
    out.c = std::move(c);
    return make_certificate(n, s, std::move(out), Method::amplified_same_period, base.seed);
}

Certificate build_mixed_period(int n, const Signature& s, const std::pair<Permutation, Permutation>& pair_witness)
{
    if (s.h != 1)
        throw PreconditionError("mixed-period construction needs h = 1");
    require_potential(n, s);
    const auto& [w1, w2] = pair_witness;
    if (w1.degree() != n || w2.degree() != n)
        throw DegreeMismatch("pair witness has the wrong degree");
    const auto o1 = static_cast<long long>(w1.order());
    const auto o2 = static_cast<long long>(w2.order());
    if (o1 == o2)
        throw PreconditionError("pair witness needs two distinct orders");
    if (!is_full_alternating(GeneratorSet({w1, w2})).is_alternating)
        throw PreconditionError("pair witness does not generate A_" + std::to_string(n));

    const auto i = std::find(s.periods.begin(), s.periods.end(), o1);
    const auto j = std::find(s.periods.begin(), s.periods.end(), o2);
    if (i == s.periods.end() || j == s.periods.end())
        throw PreconditionError("pair witness orders are not periods of " + pretty(s));

    std::vector<Permutation> c;
    for (long long k : s.periods)
        c.push_back(canonical_element(n, k));
    c[static_cast<std::size_t>(i - s.periods.begin())] = w1;
    c[static_cast<std::size_t>(j - s.periods.begin())] = w2;
    auto ab = solve_commutator(product_inverse(n, c), hash_combine(static_cast<std::uint64_t>(n), o1 * 1000 + o2));
    return make_certificate(n, s, one_handle(n, std::move(ab), std::move(c)), Method::mixed_period);
}

Certificate build_genus_h(int n, const Signature& s)
{
    if (s.h < 2)
        throw PreconditionError("genus-h construction needs h >= 2");
    require_potential(n, s);

    // (1 2 3) with (1 ... n) for odd n, or with (2 ... n) for even n.
    const Permutation x = Permutation::long_cycle(n, 1, 3);
    const Permutation y = n % 2 == 1 ? Permutation::long_cycle(n, 1, n) : Permutation::long_cycle(n, 2, n - 1);

    std::vector<Permutation> c;
    for (long long k : s.periods)
        c.push_back(canonical_element(n, k));
    std::vector<Permutation> tail{commutator(x, y)};
    tail.insert(tail.end(), c.begin(), c.end());
    auto [a1, b1] = solve_commutator(product_inverse(n, tail), static_cast<std::uint64_t>(n));

    GeneratingVector v;
    v.degree = n;
    v.a.push_back(std::move(a1));
    v.b.push_back(std::move(b1));
    for (int i = 1; i + 1 < s.h; ++i) {
        v.a.emplace_back(n);
        v.b.emplace_back(n);
    }
    v.a.push_back(x);
    v.b.push_back(y);
    v.c = std::move(c);
    return make_certificate(n, s, std::move(v), Method::genus_h);
}

}  // namespace ansig
