#pragma once

// Reference implementations used only by the tests. Each one is written
// from the definitions, sharing no code with the library beyond the
// Permutation value type used to pass data in and out.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "ansig/permutation.hpp"

namespace oracle {

using Table = std::vector<int>;  // 0-based images

inline Table table(const ansig::Permutation& p)
{
    Table t;
    for (int x = 1; x <= p.degree(); ++x)
        t.push_back(p(x) - 1);
    return t;
}

/// Left-to-right: first p, then q.
inline Table then(const Table& p, const Table& q)
{
    Table r(p.size());
    for (std::size_t x = 0; x < p.size(); ++x)
        r[x] = q[static_cast<std::size_t>(p[x])];
    return r;
}

inline Table inverse(const Table& p)
{
    Table r(p.size());
    for (std::size_t x = 0; x < p.size(); ++x)
        r[static_cast<std::size_t>(p[x])] = static_cast<int>(x);
    return r;
}

inline bool is_identity(const Table& p)
{
    for (std::size_t x = 0; x < p.size(); ++x)
        if (p[x] != static_cast<int>(x))
            return false;
    return true;
}

/// Smallest k >= 1 with p^k = id, by repeated multiplication.
inline std::uint64_t order_by_powers(const Table& p)
{
    Table q = p;
    std::uint64_t k = 1;
    while (!is_identity(q)) {
        q = then(q, p);
        ++k;
    }
    return k;
}

/// Parity from the inversion count.
inline bool even_by_inversions(const Table& p)
{
    std::size_t inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            inv += p[i] > p[j];
    return inv % 2 == 0;
}

/// Every element of <gens> by breadth-first closure. Small groups only.
inline std::set<Table> closure(const std::vector<Table>& gens, std::size_t limit = 400'000)
{
    const std::size_t n = gens.front().size();
    Table id(n);
    std::iota(id.begin(), id.end(), 0);
    std::set<Table> seen{id};
    std::vector<Table> frontier{id};
    while (!frontier.empty() && seen.size() <= limit) {
        std::vector<Table> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                Table y = then(x, g);
                if (seen.insert(y).second)
                    next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    return seen;
}

inline std::vector<Table> tables(const std::vector<ansig::Permutation>& ps)
{
    std::vector<Table> out;
    for (const auto& p : ps)
        out.push_back(table(p));
    return out;
}

inline std::uint64_t factorial(int n)
{
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i)
        f *= static_cast<std::uint64_t>(i);
    return f;
}

/// Sieve of Eratosthenes up to n.
inline std::vector<bool> sieve(int n)
{
    std::vector<bool> prime(static_cast<std::size_t>(n + 1), true);
    prime[0] = false;
    if (n >= 1)
        prime[1] = false;
    for (int p = 2; p * p <= n; ++p)
        if (prime[static_cast<std::size_t>(p)])
            for (int q = p * p; q <= n; q += p)
                prime[static_cast<std::size_t>(q)] = false;
    return prime;
}

/// All partitions of n (parts >= 1), as descending vectors.
inline void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

/// Orders of nontrivial even permutations of degree n, from partitions.
inline std::set<long long> even_orders(int n)
{
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    partitions(n, n, cur, all);
    std::set<long long> out;
    for (const auto& part : all) {
        int even_parts = 0;
        long long l = 1;
        for (int p : part) {
            even_parts += p % 2 == 0;
            l = std::lcm(l, static_cast<long long>(p));
        }
        if (even_parts % 2 == 0 && l > 1)
            out.insert(l);
    }
    return out;
}

/// Exact genus as a reduced fraction num/den over 128-bit integers.
struct Fraction {
    __int128 num;
    __int128 den;
};

inline __int128 gcd128(__int128 a, __int128 b)
{
    if (a < 0)
        a = -a;
    while (b) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// sigma = 1 + g(h-1) + (g/2) sum (1 - 1/k), g = n!/2. n <= 20.
inline Fraction genus(int n, int h, const std::vector<long long>& periods)
{
    const __int128 g = static_cast<__int128>(factorial(n) / 2);
    __int128 num = 2 * (1 + g * (h - 1));
    __int128 den = 2;
    for (long long k : periods) {
        // num/den + g (k-1) / (2k)
        num = num * 2 * k + g * (k - 1) * den;
        den = den * 2 * k;
        const __int128 d = gcd128(num, den);
        num /= d;
        den /= d;
    }
    const __int128 d = gcd128(num, den);
    return {num / d, den / d};
}

/// Whether the set `block` (0-based values, contains 0) is a block of the
/// group given by its full element list.
inline bool is_block(const std::set<Table>& group, const std::set<int>& block)
{
    for (const auto& g : group) {
        std::set<int> image;
        for (int x : block)
            image.insert(g[static_cast<std::size_t>(x)]);
        if (image == block)
            continue;
        std::vector<int> both;
        std::set_intersection(image.begin(), image.end(), block.begin(), block.end(), std::back_inserter(both));
        if (!both.empty())
            return false;
    }
    return true;
}

/// Primitivity of a transitive group by trying every candidate block
/// through 0 of proper nontrivial size.
inline bool primitive_by_subsets(const std::set<Table>& group, int n)
{
    for (std::uint32_t mask = 1; mask < (1U << n); mask += 2) {
        const int size = __builtin_popcount(mask);
        if (size <= 1 || size >= n || n % size != 0)
            continue;
        std::set<int> block;
        for (int x = 0; x < n; ++x)
            if (mask & (1U << x))
                block.insert(x);
        if (is_block(group, block))
            return false;
    }
    return true;
}

inline bool transitive(const std::vector<Table>& gens)
{
    const std::size_t n = gens.front().size();
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (const auto& g : gens) {
            const int y = g[static_cast<std::size_t>(x)];
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = true;
                stack.push_back(y);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace oracle
