// Deterministic Schreier-Sims for degree <= 64.
//
// Elements are fixed-size byte arrays. The chain is built with the
// incremental algorithm: Schreier generators of level i are sifted
// through levels i+1.., and a nontrivial residue is added as a new strong
// generator at every level it fixes the base prefix of.
//
// The product of the basic orbit lengths of a partial chain is a lower
// bound on |G| (each partial level group is a subgroup of the true point
// stabilizer). Since G <= A_n when all generators are even and G <= S_n
// always, the computation stops as soon as that lower bound reaches the
// applicable ceiling.

#include <array>
#include <cstdint>
#include <optional>

#include "ansig/group.hpp"

namespace ansig {

namespace {

constexpr int kCap = 64;
using Elt = std::array<std::uint8_t, kCap>;

struct Chain {
    int n;
    explicit Chain(int degree) : n(degree) {}

    Elt identity() const
    {
        Elt e{};
        for (int i = 0; i < kCap; ++i)
            e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
        return e;
    }
    Elt mul(const Elt& a, const Elt& b) const
    {
        Elt r = identity();
        for (int i = 0; i < n; ++i)
            r[static_cast<std::size_t>(i)] = b[a[static_cast<std::size_t>(i)]];
        return r;
    }
    Elt inv(const Elt& a) const
    {
        Elt r = identity();
        for (int i = 0; i < n; ++i)
            r[a[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
        return r;
    }
    bool is_id(const Elt& a) const
    {
        for (int i = 0; i < n; ++i)
            if (a[static_cast<std::size_t>(i)] != i)
                return false;
        return true;
    }

    struct Level {
        int base = 0;
        std::vector<std::size_t> gens;  // indices into strong
        std::vector<int> orbit;
        std::vector<std::optional<Elt>> u;     // u[x]: base -> x
        std::vector<std::optional<Elt>> uinv;  // inverse of u[x]
    };

    std::vector<Elt> strong;
    std::vector<Level> levels;

    void rebuild_orbit(Level& L)
    {
        L.orbit.assign(1, L.base);
        L.u.assign(static_cast<std::size_t>(n), std::nullopt);
        L.uinv.assign(static_cast<std::size_t>(n), std::nullopt);
        L.u[static_cast<std::size_t>(L.base)] = identity();
        L.uinv[static_cast<std::size_t>(L.base)] = identity();
        for (std::size_t h = 0; h < L.orbit.size(); ++h) {
            const int y = L.orbit[h];
            for (std::size_t gi : L.gens) {
                const Elt& s = strong[gi];
                const int z = s[static_cast<std::size_t>(y)];
                if (!L.u[static_cast<std::size_t>(z)]) {
                    Elt t = mul(*L.u[static_cast<std::size_t>(y)], s);
                    L.uinv[static_cast<std::size_t>(z)] = inv(t);
                    L.u[static_cast<std::size_t>(z)] = t;
                    L.orbit.push_back(z);
                }
            }
        }
    }

    int first_moved(const Elt& g) const
    {
        for (int i = 0; i < n; ++i)
            if (g[static_cast<std::size_t>(i)] != i)
                return i;
        return -1;
    }

    /// Sifts g through levels [from, end). Returns the residue and the level
    /// where sifting stopped (levels.size() when it passed every level).
    std::pair<Elt, std::size_t> sift(Elt g, std::size_t from) const
    {
        for (std::size_t j = from; j < levels.size(); ++j) {
            const Level& L = levels[j];
            const int x = g[static_cast<std::size_t>(L.base)];
            if (!L.u[static_cast<std::size_t>(x)])
                return {g, j};
            g = mul(g, *L.uinv[static_cast<std::size_t>(x)]);
        }
        return {g, levels.size()};
    }

    BigInt lower_bound() const
    {
        BigInt b = 1;
        for (const auto& L : levels)
            b *= static_cast<unsigned>(L.orbit.size());
        return b;
    }

    void add_level_for(const Elt& g)
    {
        Level L;
        L.base = first_moved(g);
        levels.push_back(std::move(L));
    }

    BigInt run(const std::vector<Elt>& gens, const BigInt& ceiling)
    {
        for (const auto& g : gens)
            if (!is_id(g))
                strong.push_back(g);
        if (strong.empty())
            return 1;

        // Initial base: extend it until every generator moves a base point.
        for (const auto& g : strong) {
            bool moves_base = false;
            for (const auto& L : levels)
                moves_base = moves_base || g[static_cast<std::size_t>(L.base)] != L.base;
            if (!moves_base)
                add_level_for(g);
        }
        auto assign_gens = [&](std::size_t gi) {
            const Elt& g = strong[gi];
            for (auto& L : levels) {
                levels_gens_push(L, gi);
                if (g[static_cast<std::size_t>(L.base)] != L.base)
                    break;
            }
        };
        for (std::size_t gi = 0; gi < strong.size(); ++gi)
            assign_gens(gi);
        for (auto& L : levels)
            rebuild_orbit(L);

        if (lower_bound() >= ceiling)
            return lower_bound();

        std::size_t i = levels.size();
        while (i > 0) {
            const std::size_t lvl = i - 1;
            bool extended = false;
            for (std::size_t oi = 0; oi < levels[lvl].orbit.size() && !extended; ++oi) {
                const int y = levels[lvl].orbit[oi];
                for (std::size_t k = 0; k < levels[lvl].gens.size() && !extended; ++k) {
                    const Elt& s = strong[levels[lvl].gens[k]];
                    const int z = s[static_cast<std::size_t>(y)];
                    const Elt sg =
                        mul(mul(*levels[lvl].u[static_cast<std::size_t>(y)], s), *levels[lvl].uinv[static_cast<std::size_t>(z)]);
                    auto [res, stop] = sift(sg, lvl + 1);
                    if (is_id(res))
                        continue;
                    if (stop == levels.size())
                        add_level_for(res);
                    strong.push_back(res);
                    const std::size_t gi = strong.size() - 1;
                    for (std::size_t l = lvl + 1; l <= stop; ++l) {
                        levels[l].gens.push_back(gi);
                        rebuild_orbit(levels[l]);
                    }
                    if (lower_bound() >= ceiling)
                        return lower_bound();
                    i = stop + 1;
                    extended = true;
                }
            }
            if (!extended)
                --i;
        }
        return lower_bound();
    }

    static void levels_gens_push(Level& L, std::size_t gi) { L.gens.push_back(gi); }
};

}  // namespace

BigInt group_order(const GeneratorSet& gs, int max_degree)
{
    const int n = gs.degree();
    if (n > max_degree || n > kCap)
        throw PreconditionError("degree " + std::to_string(n) + " exceeds the exact-order bound " +
                                std::to_string(std::min(max_degree, kCap)));
    Chain chain(n);
    std::vector<Elt> gens;
    for (const auto& g : gs.gens()) {
        Elt e = chain.identity();
        for (int x = 0; x < n; ++x)
            e[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(g.raw()[static_cast<std::size_t>(x)]);
        gens.push_back(e);
    }
    const BigInt ceiling = gs.all_even() ? alternating_order(n) : factorial(n);
    return chain.run(gens, ceiling);
}

}  // namespace ansig
