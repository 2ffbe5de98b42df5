#pragma once

/**
 * @file constructions.hpp
 * @brief Explicit element builders: large-support elements, transitive
 * alignment of two elements, two-cycle factorizations and prime lookup.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "ansig/permutation.hpp"

namespace ansig {

bool is_prime(long long p);

/// Prime powers p^a exactly dividing k, ascending by p.
std::vector<std::pair<int, int>> prime_power_factors(long long k);

/// Returned instead of an element when k is prime and k > floor(n/2).
struct ExceptionalPrime {
    int k;
};

/// Element of order k (k in the order set of A_n, n >= 12) with support
/// > 2n/3. One cycle of length p^a per prime power of k (plus a 2-cycle
/// when k is even), then padding cycles of length p1, the least prime of k,
/// until fewer than p1 values remain free (fewer than 4 when p1 = 2, where
/// 2-cycles are added in pairs). The result has at least two cycles except
/// for an odd prime power k = p^a with n - k < p, where none exists.
std::variant<Permutation, ExceptionalPrime> large_support_element(int n, long long k);

/// Cycle type used by the builders for a period k: the large-support type
/// when it applies, else a single k-cycle.
CycleType period_cycle_type(int n, long long k);

/// Smallest-support cycle type of order k inside A_n: one cycle per prime
/// power, plus a 2-cycle when k is even. Throws PreconditionError if none fits.
CycleType minimal_cycle_type(int n, long long k);

/// All cycle types of even permutations of degree n with order k.
std::vector<CycleType> cycle_types_of_order(int n, long long k);

/// Lays the cycles of t out on consecutive values starting at `first`.
Permutation element_of_type(const CycleType& t, int first = 1);

struct AlignmentPlan {
    Permutation c1;
    Permutation c2;
    int forced_count = 0;
    int free_count = 0;
    int free_from_complement = 0;
};

/// Builds c1 of type1 on {1..|Supp|} and c2 of type2 with the forced
/// values linking consecutive cycles of c1, so that <c1,c2> is transitive
/// on Supp(c1) u Supp(c2). Free values come from Supp^c(c1) first, in
/// ascending order, then from unused values of Supp(c1).
/// Requires nc(type2) >= nc(type1).
AlignmentPlan transitive_alignment(const CycleType& type1, const CycleType& type2, int n);

enum class FactorizationKind { bertram, xu };

/// compose(left, right) == target, checked at construction.
class TwoCycleFactorization {
public:
    TwoCycleFactorization(Permutation left, Permutation right, Permutation target, FactorizationKind kind);

    const Permutation& left() const noexcept { return left_; }
    const Permutation& right() const noexcept { return right_; }
    const Permutation& target() const noexcept { return target_; }
    FactorizationKind kind() const noexcept { return kind_; }

    /// Cycle length for the bertram kind.
    int cycle_length() const;
    /// |Supp(left) u Supp(right)|.
    int combined_support() const;

private:
    Permutation left_;
    Permutation right_;
    Permutation target_;
    FactorizationKind kind_;
};

/// Least legal l for an even c: ceil((|Supp(c)| + nc(c)) / 2), at least 2.
int bertram_lower_bound(const Permutation& c);

/// Two l-cycles whose product is the even permutation c, for
/// bertram_lower_bound(c) <= l <= n.
TwoCycleFactorization bertram_factorization(const Permutation& c, int l);

/// Lengthens both cycles of a bertram factorization to target_len,
/// keeping the product. Each step inserts one new value into each cycle;
/// values from `priority` are used first, then the remaining fixed points
/// of the target in ascending order, then values already in one cycle.
TwoCycleFactorization pad_factorization(const TwoCycleFactorization& f, int target_len,
                                        std::span<const Value> priority = {});

/// left and right of type (2, n-2) for n even or (2, n-3) for n odd,
/// their 2-cycles sharing exactly one value, with product c. Seeded
/// randomized search; throws ConstructionFailure when the budget runs out.
TwoCycleFactorization xu_factorization(const Permutation& c, std::uint64_t seed = 1,
                                       std::uint64_t max_trials = 5'000'000);

enum class PrimeRange { strict, wide };

struct PrimeWitness {
    int p;
    int lower;
    int upper;
};

/// Smallest prime in [floor(3n/4)+3, n-3] (strict, n >= 40) or in
/// [floor(3n/4), n-3] (wide, n >= 24).
PrimeWitness prime_in_range(int n, PrimeRange variant);

}  // namespace ansig
