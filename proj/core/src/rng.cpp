#include "ansig/rng.hpp"

#include <numeric>
#include <utility>
#include <vector>

namespace ansig {

std::uint64_t CounterRng::below(std::uint64_t bound) noexcept
{
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
        const std::uint64_t r = next();
        if (r < limit)
            return r % bound;
    }
}

Permutation random_permutation(int degree, CounterRng& rng)
{
    std::vector<std::uint16_t> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), std::uint16_t{0});
    for (std::size_t i = img.size(); i > 1; --i)
        std::swap(img[i - 1], img[rng.below(i)]);
    return Permutation::from_raw(std::move(img));
}

Permutation random_even_permutation(int degree, CounterRng& rng)
{
    Permutation p = random_permutation(degree, rng);
    if (!p.is_even() && degree >= 2) {
        auto img = p.raw();
        std::swap(img[0], img[1]);
        p = Permutation::from_raw(std::move(img));
    }
    return p;
}

std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) noexcept
{
    return CounterRng::mix(h ^ (CounterRng::mix(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

}  // namespace ansig
