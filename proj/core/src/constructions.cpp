#include "ansig/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ansig/rng.hpp"

namespace ansig {

bool is_prime(long long p)
{
    if (p < 2)
        return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

std::vector<std::pair<int, int>> prime_power_factors(long long k)
{
    std::vector<std::pair<int, int>> out;
    for (long long p = 2; p * p <= k; ++p) {
        if (k % p)
            continue;
        long long q = 1;
        while (k % p == 0) {
            k /= p;
            q *= p;
        }
        out.emplace_back(static_cast<int>(p), static_cast<int>(q));
    }
    if (k > 1)
        out.emplace_back(static_cast<int>(k), static_cast<int>(k));
    return out;
}

Permutation element_of_type(const CycleType& t, int first)
{
    std::vector<std::vector<Value>> cycles;
    Value next = first;
    // Longest cycles first.
    for (auto it = t.lengths.rbegin(); it != t.lengths.rend(); ++it) {
        std::vector<Value> c(static_cast<std::size_t>(*it));
        std::iota(c.begin(), c.end(), next);
        next += *it;
        cycles.push_back(std::move(c));
    }
    if (next - 1 > t.degree)
        throw PreconditionError("cycle type does not fit its degree");
    return Permutation::from_cycles(t.degree, cycles);
}

CycleType minimal_cycle_type(int n, long long k)
{
    if (k < 2)
        throw PreconditionError("order must be at least 2");
    CycleType t;
    t.degree = n;
    for (auto [p, q] : prime_power_factors(k))
        t.lengths.push_back(q);
    if (k % 2 == 0)
        t.lengths.push_back(2);
    std::sort(t.lengths.begin(), t.lengths.end());
    if (t.support_size() > n)
        throw PreconditionError(std::to_string(k) + " is not an element order of A_" + std::to_string(n));
    return t;
}

namespace {

void enumerate_types(int remaining, int max_part, long long k, std::vector<int>& parts, int even_parts,
                     long long lcm, int n, std::vector<CycleType>& out)
{
    if (lcm == k && even_parts % 2 == 0 && !parts.empty()) {
        CycleType t;
        t.degree = n;
        t.lengths = parts;
        std::sort(t.lengths.begin(), t.lengths.end());
        out.push_back(std::move(t));
    }
    for (int part = std::min(max_part, remaining); part >= 2; --part) {
        if (k % part)
            continue;
        parts.push_back(part);
        enumerate_types(remaining - part, part, k, parts, even_parts + (part % 2 == 0), std::lcm(lcm, static_cast<long long>(part)), n,
                        out);
        parts.pop_back();
    }
}

}  // namespace

std::vector<CycleType> cycle_types_of_order(int n, long long k)
{
    std::vector<CycleType> out;
    std::vector<int> parts;
    enumerate_types(n, n, k, parts, 0, 1, n, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::variant<Permutation, ExceptionalPrime> large_support_element(int n, long long k)
{
    if (n < 12)
        throw PreconditionError("large_support_element requires n >= 12");
    const CycleType base = minimal_cycle_type(n, k);
    if (is_prime(k) && k > n / 2)
        return ExceptionalPrime{static_cast<int>(k)};

    const auto factors = prime_power_factors(k);
    const int p1 = factors.front().first;
    CycleType t = base;
    int free = n - t.support_size();
    if (p1 == 2) {
        while (free >= 4) {
            t.lengths.push_back(2);
            t.lengths.push_back(2);
            free -= 4;
        }
    } else {
        while (free >= p1) {
            t.lengths.push_back(p1);
            free -= p1;
        }
    }
    std::sort(t.lengths.begin(), t.lengths.end());
    return element_of_type(t);
}

CycleType period_cycle_type(int n, long long k)
{
    if (n >= 12) {
        auto e = large_support_element(n, k);
        if (auto* p = std::get_if<Permutation>(&e))
            return CycleType::of(*p);
        CycleType t;
        t.degree = n;
        t.lengths = {static_cast<int>(k)};
        return t;
    }
    return minimal_cycle_type(n, k);
}

AlignmentPlan transitive_alignment(const CycleType& type1, const CycleType& type2, int n)
{
    if (type1.degree != n || type2.degree != n)
        throw PreconditionError("cycle types must have degree n");
    if (type1.cycle_count() < 1 || type2.cycle_count() < type1.cycle_count())
        throw PreconditionError("transitive_alignment needs nc(type2) >= nc(type1) >= 1");
    if (type1.support_size() > n || type2.support_size() > n)
        throw PreconditionError("cycle type does not fit degree");

    const int t = type1.cycle_count();
    const int u = type2.cycle_count();

    // alpha_i laid out on consecutive values, longest first.
    std::vector<std::vector<Value>> alpha;
    Value next = 1;
    for (auto it = type1.lengths.rbegin(); it != type1.lengths.rend(); ++it) {
        std::vector<Value> c(static_cast<std::size_t>(*it));
        std::iota(c.begin(), c.end(), next);
        next += *it;
        alpha.push_back(std::move(c));
    }
    const int supp1 = next - 1;

    std::vector<int> beta_len(type2.lengths.rbegin(), type2.lengths.rend());
    std::vector<std::vector<Value>> beta(static_cast<std::size_t>(u));
    std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
    auto take = [&](std::size_t i, Value v) {
        if (used[static_cast<std::size_t>(v)])
            throw std::logic_error("alignment reused a value");
        used[static_cast<std::size_t>(v)] = true;
        beta[i].push_back(v);
    };

    // Forced values.
    if (t == 1) {
        take(0, alpha[0][0]);
    } else {
        take(0, alpha[0][0]);
        take(0, alpha[1][0]);
        for (int i = 1; i <= t - 2; ++i) {
            take(static_cast<std::size_t>(i), alpha[static_cast<std::size_t>(i)][1]);
            take(static_cast<std::size_t>(i), alpha[static_cast<std::size_t>(i + 1)][0]);
        }
    }
    const int first_fresh = t == 1 ? 1 : t - 1;
    Value scan = 1;
    for (int i = first_fresh; i < u; ++i) {
        while (scan <= supp1 && used[static_cast<std::size_t>(scan)])
            ++scan;
        if (scan > supp1)
            throw PreconditionError("not enough values of Supp(c1) to seed every cycle of c2");
        take(static_cast<std::size_t>(i), scan);
    }
    const int forced = t + u - 1;

    // Free values: Supp^c(c1) ascending, then unused Supp(c1) ascending.
    std::vector<Value> pool;
    for (Value v = supp1 + 1; v <= n; ++v)
        pool.push_back(v);
    for (Value v = 1; v <= supp1; ++v)
        if (!used[static_cast<std::size_t>(v)])
            pool.push_back(v);
    std::size_t pi = 0;
    int from_complement = 0;
    for (int i = 0; i < u; ++i) {
        auto& b = beta[static_cast<std::size_t>(i)];
        while (static_cast<int>(b.size()) < beta_len[static_cast<std::size_t>(i)]) {
            if (pi == pool.size())
                throw PreconditionError("insufficient values to keep the cycles of c2 disjoint");
            const Value v = pool[pi++];
            from_complement += v > supp1;
            take(static_cast<std::size_t>(i), v);
        }
        if (static_cast<int>(b.size()) > beta_len[static_cast<std::size_t>(i)])
            throw PreconditionError("cycle of c2 too short for its forced values");
    }

    AlignmentPlan plan{Permutation::from_cycles(n, alpha), Permutation::from_cycles(n, beta), forced,
                       type2.support_size() - forced, from_complement};
    return plan;
}

TwoCycleFactorization::TwoCycleFactorization(Permutation left, Permutation right, Permutation target,
                                             FactorizationKind kind)
    : left_(std::move(left)), right_(std::move(right)), target_(std::move(target)), kind_(kind)
{
    if (compose(left_, right_) != target_)
        throw std::logic_error("factorization product does not equal its target");
    const CycleType tl = CycleType::of(left_);
    const CycleType tr = CycleType::of(right_);
    if (kind_ == FactorizationKind::bertram) {
        if (tl.cycle_count() != 1 || tr.cycle_count() != 1 || tl != tr)
            throw std::logic_error("bertram factorization must use two cycles of equal length");
    } else {
        const int n = left_.degree();
        const int big = n % 2 == 0 ? n - 2 : n - 3;
        const CycleType shape{n, big == 2 ? std::vector<int>{2, 2} : std::vector<int>{2, big}};
        if (tl != shape || tr != shape)
            throw std::logic_error("xu factorization has the wrong cycle shape");
    }
}

int TwoCycleFactorization::cycle_length() const { return left_.support_size(); }

int TwoCycleFactorization::combined_support() const
{
    int s = 0;
    for (Value x = 1; x <= left_.degree(); ++x)
        s += left_.moves(x) || right_.moves(x);
    return s;
}

int bertram_lower_bound(const Permutation& c)
{
    const CycleDecomposition d(c);
    const int s = static_cast<int>(d.support().size()) + d.nc();
    return std::max(2, (s + 1) / 2);
}

namespace {

using CycleList = std::vector<Value>;

/// A pair of cycles (length-1 lists allowed while building) whose product
/// is the part of the target they cover.
struct Piece {
    CycleList left;
    CycleList right;
};

std::size_t index_of(const CycleList& c, Value v)
{
    return static_cast<std::size_t>(std::find(c.begin(), c.end(), v) - c.begin());
}

bool contains(const CycleList& c, Value v) { return std::find(c.begin(), c.end(), v) != c.end(); }

Value next_in(const CycleList& c, Value v) { return c[(index_of(c, v) + 1) % c.size()]; }

CycleList rotate_to(const CycleList& c, Value start)
{
    CycleList r = c;
    std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(index_of(r, start)), r.end());
    return r;
}

/// Some u in left with left(u) in right.
Value hook(const Piece& p)
{
    for (Value u : p.left)
        if (contains(p.right, next_in(p.left, u)))
            return u;
    throw std::logic_error("factorization piece without a hook");
}

/// Joins two disjoint pieces into one: left' = (u v) left, right' =
/// (left(u) left(v)) right, which preserves the product.
Piece merge(const Piece& a, const Piece& b)
{
    const Value u = hook(a);
    const Value v = hook(b);
    const Value s = next_in(a.left, u);
    const Value t = next_in(b.left, v);
    Piece m;
    m.left = rotate_to(a.left, s);
    const CycleList bl = rotate_to(b.left, t);
    m.left.insert(m.left.end(), bl.begin(), bl.end());
    m.right = rotate_to(a.right, next_in(a.right, s));
    const CycleList br = rotate_to(b.right, next_in(b.right, t));
    m.right.insert(m.right.end(), br.begin(), br.end());
    return m;
}

/// Splits the cycle (x0 ... x_{m-1}) as (x0 .. x_{a-1}) * (x0 x_a .. x_{m-1}).
Piece split_cycle(const Cycle& c, std::size_t a)
{
    Piece p;
    p.left.assign(c.values().begin(), c.values().begin() + static_cast<std::ptrdiff_t>(a));
    p.right.push_back(c[0]);
    p.right.insert(p.right.end(), c.values().begin() + static_cast<std::ptrdiff_t>(a), c.values().end());
    return p;
}

Permutation as_perm(int n, const CycleList& c)
{
    const std::vector<std::vector<Value>> cs{c};
    return Permutation::from_cycles(n, cs);
}

/// One padding step: put x into left just before y2 and repair right.
/// Requires x not in left, y2 in left, and exactly one of {x, y2} in right.
void pad_step(Piece& p, Value x, Value y2)
{
    const std::size_t at = index_of(p.left, y2);
    p.left.insert(p.left.begin() + static_cast<std::ptrdiff_t>(at), x);
    if (!contains(p.right, x)) {
        const std::size_t r = index_of(p.right, y2);
        p.right.insert(p.right.begin() + static_cast<std::ptrdiff_t>(r + 1), x);
    } else {
        const std::size_t r = index_of(p.right, x);
        p.right.insert(p.right.begin() + static_cast<std::ptrdiff_t>(r + 1), y2);
    }
}

Piece pad_piece(Piece p, int n, int target_len, std::span<const Value> priority)
{
    while (static_cast<int>(p.left.size()) < target_len) {
        std::vector<Value> shared;
        for (Value v : p.left)
            if (contains(p.right, v))
                shared.push_back(v);
        Value outside = 0;
        if (!shared.empty()) {
            for (Value v : priority)
                if (!contains(p.left, v) && !contains(p.right, v)) {
                    outside = v;
                    break;
                }
            for (Value v = 1; v <= n && !outside; ++v)
                if (!contains(p.left, v) && !contains(p.right, v))
                    outside = v;
        }
        if (outside) {
            pad_step(p, outside, shared.front());
            continue;
        }
        // Combined support stays put: move a value of right \ left into left.
        Value x = 0, y2 = 0;
        for (Value v : priority)
            if (contains(p.right, v) && !contains(p.left, v)) {
                x = v;
                break;
            }
        for (Value v : p.right)
            if (!x && !contains(p.left, v))
                x = v;
        for (Value v : p.left)
            if (!y2 && !contains(p.right, v))
                y2 = v;
        if (!x || !y2)
            throw PreconditionError("cannot lengthen the cycles to " + std::to_string(target_len));
        pad_step(p, x, y2);
    }
    return p;
}

Piece piece_of(const TwoCycleFactorization& f)
{
    Piece p;
    p.left = CycleDecomposition(f.left()).cycles().front().values();
    p.right = CycleDecomposition(f.right()).cycles().front().values();
    return p;
}

}  // namespace

TwoCycleFactorization bertram_factorization(const Permutation& c, int l)
{
    const int n = c.degree();
    if (!c.is_even())
        throw PreconditionError("bertram factorization needs an even permutation");
    const int lo = bertram_lower_bound(c);
    if (l < lo || l > n)
        throw PreconditionError("cycle length " + std::to_string(l) + " outside the legal range [" +
                                std::to_string(lo) + ", " + std::to_string(n) + "]");

    const CycleDecomposition d(c);
    Piece acc;
    if (d.nc() == 0) {
        acc.left.resize(2);
        std::iota(acc.left.begin(), acc.left.end(), 1);
        acc.right = {acc.left.rbegin(), acc.left.rend()};
    } else {
        std::vector<Piece> pieces;
        bool pending_even = false;
        for (const auto& cyc : d.cycles()) {
            const std::size_t m = cyc.length();
            if (m % 2 == 1) {
                pieces.push_back(split_cycle(cyc, (m + 1) / 2));
            } else {
                // Even cycles come in pairs; alternate which side is longer.
                pieces.push_back(split_cycle(cyc, pending_even ? m / 2 : m / 2 + 1));
                pending_even = !pending_even;
            }
        }
        acc = pieces.front();
        for (std::size_t i = 1; i < pieces.size(); ++i)
            acc = merge(acc, pieces[i]);
    }
    acc = pad_piece(std::move(acc), n, l, {});
    return TwoCycleFactorization(as_perm(n, acc.left), as_perm(n, acc.right), c, FactorizationKind::bertram);
}

TwoCycleFactorization pad_factorization(const TwoCycleFactorization& f, int target_len,
                                        std::span<const Value> priority)
{
    if (f.kind() != FactorizationKind::bertram)
        throw PreconditionError("only bertram factorizations can be padded");
    const int n = f.target().degree();
    if (target_len < f.cycle_length() || target_len > n)
        throw PreconditionError("cannot pad to length " + std::to_string(target_len));
    if (target_len == f.cycle_length())
        return f;
    Piece p = pad_piece(piece_of(f), n, target_len, priority);
    return TwoCycleFactorization(as_perm(n, p.left), as_perm(n, p.right), f.target(), FactorizationKind::bertram);
}

TwoCycleFactorization xu_factorization(const Permutation& c, std::uint64_t seed, std::uint64_t max_trials)
{
    const int n = c.degree();
    if (n < 6)
        throw PreconditionError("xu factorization needs degree >= 6");
    if (!c.is_even())
        throw PreconditionError("xu factorization needs an even permutation");
    for (int len : CycleType::of(c).lengths)
        if (len < 5)
            throw PreconditionError("xu factorization needs every cycle of length >= 5");

    const int big = n % 2 == 0 ? n - 2 : n - 3;
    const CycleType shape{n, {2, big}};
    CounterRng rng(seed, 0x5875);
    std::vector<Value> order(static_cast<std::size_t>(n));
    for (std::uint64_t trial = 0; trial < max_trials; ++trial) {
        std::iota(order.begin(), order.end(), 1);
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[rng.below(i)]);
        const std::vector<std::vector<Value>> cycles{
            {order[0], order[1]},
            std::vector<Value>(order.begin() + 2, order.begin() + 2 + big)};
        const Permutation left = Permutation::from_cycles(n, cycles);
        const Permutation right = left.inverse() * c;
        if (CycleType::of(right) != shape)
            continue;
        // The 2-cycle of right: the pair {x, right(x)} with right(right(x)) == x.
        int shared = 0;
        for (Value x = 1; x <= n; ++x)
            if (right(x) != x && right(right(x)) == x)
                shared += (x == order[0] || x == order[1]);
        if (shared != 1)
            continue;
        return TwoCycleFactorization(left, right, c, FactorizationKind::xu);
    }
    throw ConstructionFailure("xu factorization search exhausted its budget");
}

PrimeWitness prime_in_range(int n, PrimeRange variant)
{
    const bool strict = variant == PrimeRange::strict;
    if (strict && n < 40)
        throw PreconditionError("strict prime range needs n >= 40");
    if (!strict && n < 24)
        throw PreconditionError("wide prime range needs n >= 24");
    const int lower = (3 * n) / 4 + (strict ? 3 : 0);
    const int upper = n - 3;
    for (int p = lower; p <= upper; ++p)
        if (is_prime(p))
            return {p, lower, upper};
    throw ConstructionFailure("no prime in [" + std::to_string(lower) + ", " + std::to_string(upper) + "]");
}

}  // namespace ansig
