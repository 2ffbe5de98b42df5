#include "ansig/classify.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "ansig/builders.hpp"

namespace ansig {

std::string to_string(Outcome o)
{
    switch (o) {
    case Outcome::not_potential:
        return "not-potential";
    case Outcome::actual:
        return "actual";
    case Outcome::non_actual:
        return "non-actual";
    case Outcome::unresolved:
        return "unresolved";
    }
    return "unresolved";
}

bool is_known_exception(int n, const Signature& s)
{
    const Signature c = s.canonical();
    if (c.h != 1 || c.r() != 1)
        return false;
    return (n == 5 && c.periods[0] == 2) || (n == 6 && c.periods[0] == 3);
}

std::uint64_t cell_seed(std::uint64_t seed, int n, const Signature& s)
{
    // FNV-1a over the rendered signature keeps seeds stable across platforms.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : render(s)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return hash_combine(hash_combine(seed, static_cast<std::uint64_t>(n)), h);
}

namespace {

constexpr int kExhaustiveMaxDegree = 7;

ClassifyResult actual(Certificate cert, std::string reason)
{
    ClassifyResult r;
    r.outcome = Outcome::actual;
    r.reason = std::move(reason);
    r.certificate = std::move(cert);
    return r;
}

ClassifyResult unresolved(std::string reason)
{
    ClassifyResult r;
    r.outcome = Outcome::unresolved;
    r.reason = std::move(reason);
    return r;
}

/// Upper bound on the exhaustive leaves for s, matching the oracle's slots.
BigInt exhaustive_space(int n, const Signature& s)
{
    const int r = s.r();
    BigInt space = boost::multiprecision::pow(alternating_order(n), static_cast<unsigned>(2 * s.h + std::max(r - 2, 0)));
    if (r >= 2)
        space *= static_cast<unsigned>(cycle_types_of_order(n, s.periods[0]).size());
    return space;
}

ClassifyResult oracle_search(int n, const Signature& s, const ClassifyOptions& opts)
{
    SearchBudget budget;
    budget.workers = opts.workers;
    if (n <= kExhaustiveMaxDegree && exhaustive_space(n, s) <= opts.exhaustive_budget) {
        budget.mode = SearchMode::exhaustive;
        budget.max_states = opts.exhaustive_budget;
        const auto start = std::chrono::steady_clock::now();
        SearchResult res = search_vector(n, s, budget);
        if (res.status == SearchStatus::found)
            return actual(make_certificate(n, s, std::move(*res.vector), Method::oracle), "exhaustive oracle search");
        if (res.status == SearchStatus::exhausted) {
            NonexistenceProof proof;
            proof.degree = n;
            proof.signature = s;
            proof.space_size = res.space_size;
            proof.reductions = res.reductions;
            proof.elapsed_ms = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                              std::chrono::steady_clock::now() - start)
                                                              .count());
            ClassifyResult r;
            r.outcome = Outcome::non_actual;
            r.reason = "exhaustive search over " + res.space_size.str() + " states found no generating vector";
            r.proof = std::move(proof);
            return r;
        }
        return unresolved("exhaustive search ran out of budget");
    }
    if (s.h < 1)
        return unresolved("no construction or randomized search for h = 0");
    budget.mode = SearchMode::randomized;
    budget.seed = cell_seed(opts.seed, n, s);
    budget.max_states = opts.random_budget;
    SearchResult res = search_vector(n, s, budget);
    if (res.status == SearchStatus::found)
        return actual(make_certificate(n, s, std::move(*res.vector), Method::oracle, budget.seed),
                      "randomized oracle search");
    return unresolved("randomized search found nothing in " + std::to_string(res.states) + " trials");
}

Signature repeated(long long k, int r)
{
    Signature s;
    s.h = 1;
    s.periods.assign(static_cast<std::size_t>(r), k);
    return s;
}

ClassifyResult classify_h1(int n, const Signature& s, const ClassifyOptions& opts);

/// [1; k x r] from an amplified base, else directly.
ClassifyResult same_period(int n, const Signature& s, const ClassifyOptions& opts)
{
    const long long k = s.periods[0];
    const int r = s.r();
    const bool even_r_even_k = k % 2 == 0 && r % 2 == 0;
    if (!(even_r_even_k && r == 2)) {
        const Signature base_sig = even_r_even_k ? repeated(k, 2) : repeated(k, 1);
        if (is_potential(n, base_sig)) {
            const ClassifyResult base = classify_h1(n, base_sig, opts);
            if (base.outcome == Outcome::actual)
                return actual(amplify_same_period(*base.certificate, r), "amplified from " + pretty(base_sig));
        }
    }
    return oracle_search(n, s, opts);
}

ClassifyResult mixed_period(int n, const Signature& s, const ClassifyOptions& opts)
{
    const std::set<long long> distinct(s.periods.begin(), s.periods.end());
    const std::uint64_t seed = cell_seed(opts.seed, n, s);
    for (auto i = distinct.begin(); i != distinct.end(); ++i)
        for (auto j = std::next(i); j != distinct.end(); ++j) {
            const std::uint64_t pair_seed = hash_combine(seed, static_cast<std::uint64_t>(*i * 1009 + *j));
            if (auto pair = find_generating_pair(n, *i, *j, pair_seed, 2'000)) {
                Certificate cert = build_mixed_period(n, s, *pair);
                cert.seed = pair_seed;
                return actual(std::move(cert),
                              "periods " + std::to_string(*i) + " and " + std::to_string(*j) + " generate");
            }
        }
    return oracle_search(n, s, opts);
}

ClassifyResult classify_h1(int n, const Signature& s, const ClassifyOptions& opts)
{
    const auto& ps = s.periods;
    if (opts.use_table && is_known_exception(n, s)) {
        ClassifyResult r;
        r.outcome = Outcome::non_actual;
        r.reason = "known exception";
        r.proof = prove_nonexistence(n, s, opts.workers);
        return r;
    }
    if (ps.empty())
        return unresolved("signature [1; -] is never potential");
    const bool has_small = std::any_of(ps.begin(), ps.end(), [](long long k) { return k % 2 == 0 || k % 3 == 0; });
    const bool all_coprime = !has_small;

    if (n >= 40 && has_small)
        return actual(build_small_primes(n, s), "period divisible by 2 or 3");
    if (n >= 24 && s.r() >= 2 && all_coprime)
        return actual(build_multi_period(n, s), "periods coprime to 6");
    if (s.r() == 1 && all_coprime && (n % 2 == 1 ? n >= 17 : n >= 24)) {
        try {
            return actual(build_one_period(n, s, cell_seed(opts.seed, n, s)), "single period coprime to 6");
        } catch (const ConstructionFailure&) {
        }
    }

    if (s.r() == 1)
        return oracle_search(n, s, opts);
    if (std::all_of(ps.begin(), ps.end(), [&](long long k) { return k == ps[0]; }))
        return same_period(n, s, opts);
    return mixed_period(n, s, opts);
}

}  // namespace

ClassifyResult classify(int n, const Signature& s, const ClassifyOptions& opts)
{
    if (n < 5)
        throw PreconditionError("classification needs n >= 5");
    if (n > kMaxOrderDegree)
        throw PreconditionError("classification supports n <= " + std::to_string(kMaxOrderDegree));
    if (const Potential p = is_potential(n, s); !p) {
        ClassifyResult r;
        r.outcome = Outcome::not_potential;
        r.reason = p.reason;
        return r;
    }
    if (s.h >= 2)
        return actual(build_genus_h(n, s), "quotient genus at least 2");
    if (s.h == 0)
        return unresolved("h = 0 is out of scope");
    return classify_h1(n, s, opts);
}

}  // namespace ansig
