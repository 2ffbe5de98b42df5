#include "ansig/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace ansig {

GeneratorSet::GeneratorSet(std::vector<Permutation> gens) : gens_(std::move(gens))
{
    if (gens_.empty())
        throw PreconditionError("generator set must be nonempty");
    degree_ = gens_.front().degree();
    for (const auto& g : gens_)
        if (g.degree() != degree_)
            throw DegreeMismatch("generators of different degrees");
}

bool GeneratorSet::all_even() const
{
    return std::all_of(gens_.begin(), gens_.end(), [](const Permutation& g) { return g.is_even(); });
}

std::vector<Value> orbit(const GeneratorSet& gs, Value seed)
{
    const int n = gs.degree();
    if (seed < 1 || seed > n)
        throw PreconditionError("orbit seed out of range");
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    std::vector<Value> out{seed};
    in[static_cast<std::size_t>(seed - 1)] = true;
    for (std::size_t head = 0; head < out.size(); ++head) {
        const Value x = out[head];
        for (const auto& g : gs.gens()) {
            const Value y = g(x);
            if (!in[static_cast<std::size_t>(y - 1)]) {
                in[static_cast<std::size_t>(y - 1)] = true;
                out.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_transitive(const GeneratorSet& gs) { return static_cast<int>(orbit(gs, 1).size()) == gs.degree(); }

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (a > b)
            std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
        return true;
    }
};

void require_transitive(const GeneratorSet& gs)
{
    if (!is_transitive(gs))
        throw PreconditionError("group is not transitive");
}

}  // namespace

BlockSystem minimal_block_system(const GeneratorSet& gs, std::pair<Value, Value> pair)
{
    require_transitive(gs);
    const int n = gs.degree();
    if (pair.first < 1 || pair.first > n || pair.second < 1 || pair.second > n)
        throw PreconditionError("block seed pair out of range");

    // Atkinson: merge the pair, then close under the action on merged pairs.
    UnionFind uf(n);
    std::deque<std::pair<int, int>> pending;
    if (uf.unite(pair.first - 1, pair.second - 1))
        pending.emplace_back(pair.first - 1, pair.second - 1);
    while (!pending.empty()) {
        const auto [x, y] = pending.front();
        pending.pop_front();
        for (const auto& g : gs.gens()) {
            const int gx = g(x + 1) - 1;
            const int gy = g(y + 1) - 1;
            const int rx = uf.find(gx);
            const int ry = uf.find(gy);
            if (rx != ry) {
                uf.unite(rx, ry);
                pending.emplace_back(rx, ry);
            }
        }
    }

    std::vector<std::vector<Value>> by_root(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        by_root[static_cast<std::size_t>(uf.find(v))].push_back(v + 1);
    BlockSystem bs;
    for (auto& b : by_root)
        if (!b.empty())
            bs.blocks.push_back(std::move(b));
    std::sort(bs.blocks.begin(), bs.blocks.end());
    bs.block_size = static_cast<int>(bs.blocks.front().size());
    for (const auto& b : bs.blocks)
        if (static_cast<int>(b.size()) != bs.block_size)
            throw std::logic_error("block system with unequal block sizes from a transitive group");
    return bs;
}

bool is_primitive(const GeneratorSet& gs)
{
    require_transitive(gs);
    const int n = gs.degree();
    for (Value x = 2; x <= n; ++x)
        if (minimal_block_system(gs, {1, x}).blocks.size() != 1)
            return false;
    return true;
}

bool primitive_by_coprime_cycle(const GeneratorSet& gs, const Cycle& witness)
{
    require_transitive(gs);
    const int n = gs.degree();
    const int len = static_cast<int>(witness.length());
    return std::gcd(n, len) == 1 && 2 * len > n;
}

BigInt factorial(int n)
{
    BigInt f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

BigInt alternating_order(int n) { return n < 2 ? BigInt(1) : factorial(n) / 2; }

std::string to_string(Route r)
{
    switch (r) {
    case Route::none:
        return "none";
    case Route::miller:
        return "miller";
    case Route::jones:
        return "jones";
    case Route::exact:
        return "exact";
    }
    return "none";
}

namespace {

bool is_prime_small(int p)
{
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

/// Lengths of cycles that some power of x isolates as a single cycle.
/// A cycle of length q is isolated by x^m, m = lcm of the other lengths,
/// exactly when gcd(m, q) = 1.
std::vector<int> isolatable_cycle_lengths(const Permutation& x)
{
    const CycleType t = CycleType::of(x);
    std::vector<int> out;
    for (std::size_t i = 0; i < t.lengths.size(); ++i) {
        long long m = 1;
        for (std::size_t j = 0; j < t.lengths.size(); ++j)
            if (j != i)
                m = std::lcm(m, static_cast<long long>(t.lengths[j]));
        if (std::gcd(m, static_cast<long long>(t.lengths[i])) == 1)
            out.push_back(t.lengths[i]);
    }
    return out;
}

}  // namespace

CertifiedAnswer is_full_alternating(const GeneratorSet& gs, std::span<const Permutation> witnesses,
                                    RecognitionOptions opts)
{
    CertifiedAnswer ans;
    const int n = gs.degree();
    const bool even = gs.all_even();

    std::vector<int> cycle_lengths;
    auto scan = [&](const Permutation& x) {
        if (x.degree() != n)
            throw DegreeMismatch("witness degree differs from generator degree");
        for (int q : isolatable_cycle_lengths(x))
            cycle_lengths.push_back(q);
    };
    for (const auto& g : gs.gens())
        scan(g);
    for (const auto& w : witnesses)
        scan(w);

    if (n >= 3 && even) {
        const bool transitive = is_transitive(gs);
        if (transitive) {
            ans.miller = std::any_of(cycle_lengths.begin(), cycle_lengths.end(), [n](int p) {
                return is_prime_small(p) && 2 * p > n && p <= n - 3;
            });
            const bool has_cycle_with_3_fixed = std::any_of(
                cycle_lengths.begin(), cycle_lengths.end(), [n](int q) { return n - q >= 3; });
            if (has_cycle_with_3_fixed)
                ans.jones = is_primitive(gs);
        }
    }
    if (ans.miller)
        ans.route = Route::miller;
    else if (ans.jones)
        ans.route = Route::jones;
    ans.is_alternating = ans.miller || ans.jones;

    if (opts.compute_exact) {
        ans.order = group_order(gs, opts.max_degree);
        const bool exact = even && *ans.order == alternating_order(n);
        if ((ans.miller || ans.jones) && !exact)
            throw std::logic_error("recognition criterion contradicts exact group order");
        if (!ans.miller && !ans.jones && exact)
            ans.route = Route::exact;
        ans.is_alternating = exact;
    }
    return ans;
}

bool class_splits(const CycleType& t)
{
    std::vector<int> all = t.lengths;
    for (int i = 0; i < t.fixed_points(); ++i)
        all.push_back(1);
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        return false;
    return std::all_of(all.begin(), all.end(), [](int len) { return len % 2 == 1; });
}

Permutation aligned_conjugator(const Permutation& a, const Permutation& a2, std::span<const int> pairing,
                               std::span<const int> rotation, std::span<const int> fixed_perm)
{
    const int n = a.degree();
    if (a2.degree() != n)
        throw DegreeMismatch("conjugator operands differ in degree");
    const CycleDecomposition da(a);
    const CycleDecomposition db(a2);
    if (da.type() != db.type())
        throw PreconditionError("elements have different cycle types");
    if (pairing.size() != da.cycles().size() || rotation.size() != da.cycles().size())
        throw PreconditionError("pairing does not match cycle count");

    std::vector<Value> img(static_cast<std::size_t>(n), 0);
    std::vector<bool> target_used(da.cycles().size(), false);
    for (std::size_t i = 0; i < da.cycles().size(); ++i) {
        const auto& src = da.cycles()[i];
        const auto j = static_cast<std::size_t>(pairing[i]);
        if (j >= db.cycles().size() || target_used[j])
            throw PreconditionError("pairing is not a bijection");
        target_used[j] = true;
        const auto& dst = db.cycles()[j];
        if (dst.length() != src.length())
            throw PreconditionError("paired cycles differ in length");
        const std::size_t k = src.length();
        for (std::size_t t = 0; t < k; ++t)
            img[static_cast<std::size_t>(src[t] - 1)] = dst[(t + static_cast<std::size_t>(rotation[i])) % k];
    }
    const auto fa = da.complement();
    const auto fb = db.complement();
    for (std::size_t t = 0; t < fa.size(); ++t) {
        const std::size_t idx = fixed_perm.empty() ? t : static_cast<std::size_t>(fixed_perm[t]);
        img[static_cast<std::size_t>(fa[t] - 1)] = fb[idx];
    }
    return Permutation::from_images(img);
}

Permutation make_even_conjugator(const Permutation& a, Permutation b)
{
    if (b.is_even())
        return b;
    const int n = a.degree();
    const CycleDecomposition d(a);
    const auto fixed = d.complement();
    if (fixed.size() >= 2) {
        const std::vector<std::vector<Value>> t{{fixed[0], fixed[1]}};
        return Permutation::from_cycles(n, t) * b;
    }
    for (const auto& c : d.cycles())
        if (c.length() % 2 == 0) {
            const std::vector<std::vector<Value>> z{c.values()};
            return Permutation::from_cycles(n, z) * b;
        }
    for (std::size_t i = 0; i < d.cycles().size(); ++i)
        for (std::size_t j = i + 1; j < d.cycles().size(); ++j) {
            const auto& x = d.cycles()[i];
            const auto& y = d.cycles()[j];
            if (x.length() != y.length())
                continue;
            std::vector<std::vector<Value>> swaps;
            for (std::size_t t = 0; t < x.length(); ++t)
                swaps.push_back({x[t], y[t]});
            return Permutation::from_cycles(n, swaps) * b;
        }
    throw ClassSplit("no even conjugator: cycle type " + a.to_string() + " splits in A_" + std::to_string(n));
}

Permutation conjugator_in_An(const Permutation& a, const Permutation& a2)
{
    if (a.degree() != a2.degree())
        throw DegreeMismatch("conjugator operands differ in degree");
    if (CycleType::of(a) != CycleType::of(a2))
        throw PreconditionError("elements have different cycle types");
    if (a == a2)
        return Permutation::identity(a.degree());

    // Pair cycles of equal length in order of appearance, rotation zero.
    const CycleDecomposition da(a);
    const CycleDecomposition db(a2);
    std::vector<int> pairing(da.cycles().size());
    std::vector<bool> used(db.cycles().size(), false);
    for (std::size_t i = 0; i < da.cycles().size(); ++i)
        for (std::size_t j = 0; j < db.cycles().size(); ++j)
            if (!used[j] && db.cycles()[j].length() == da.cycles()[i].length()) {
                used[j] = true;
                pairing[i] = static_cast<int>(j);
                break;
            }
    const std::vector<int> rotation(da.cycles().size(), 0);
    Permutation b = make_even_conjugator(a, aligned_conjugator(a, a2, pairing, rotation));
    if (conjugate(a, b) != a2 || !b.is_even())
        throw std::logic_error("conjugator construction failed its own check");
    return b;
}

}  // namespace ansig
