#pragma once

/**
 * @file oracle.hpp
 * @brief Ground-truth search for generating vectors.
 *
 * Exhaustive mode walks A_n in lexicographic order of image tables, so the
 * first vector found is stable across runs, platforms, and worker counts.
 * Randomized mode draws trial t from the counter stream (seed, t), so any
 * sharding of the trial range reproduces the same outcomes.
 *
 * Two reductions shrink the search space, both recorded in every result:
 *  - the last period entry c_r is determined by the relation, so it is
 *    computed instead of enumerated (for [1;k] this is the pair reduction:
 *    (a, b, [a,b]^-1) generates iff <a,b> does);
 *  - when r >= 2, c_1 runs over one representative per S_n class of its
 *    order. Conjugating a whole vector by any element of S_n is an
 *    automorphism of A_n, so it preserves generation, the orders and the
 *    product relation.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ansig/constructions.hpp"
#include "ansig/rng.hpp"
#include "ansig/signature.hpp"

namespace ansig {

/// Largest degree accepted by exhaustive searches.
inline constexpr int kMaxExhaustiveDegree = 12;

class InfeasibleSearch : public Error {
public:
    using Error::Error;
};

/// A nonexistence claim was refuted by an explicit vector.
class NonexistenceRefuted : public Error {
public:
    NonexistenceRefuted(const std::string& what, GeneratingVector v) : Error(what), vector_(std::move(v)) {}
    const GeneratingVector& vector() const noexcept { return vector_; }

private:
    GeneratingVector vector_;
};

enum class SearchMode { exhaustive, randomized };

struct SearchBudget {
    std::uint64_t max_states = 20'000'000;
    std::uint64_t seed = 1;
    SearchMode mode = SearchMode::randomized;
    /// Worker threads for exhaustive sweeps. Results do not depend on it.
    unsigned workers = 1;
    /// Randomized mode only: this run takes trials t with t % shards == shard.
    std::uint64_t shard = 0;
    std::uint64_t shards = 1;
};

enum class SearchStatus {
    found,
    /// The whole space was searched and holds no vector.
    exhausted,
    /// The budget ran out first; nothing is proved.
    budget_exhausted
};

struct SearchResult {
    SearchStatus status = SearchStatus::budget_exhausted;
    std::optional<GeneratingVector> vector;
    std::uint64_t states = 0;
    BigInt space_size = 0;
    std::vector<std::string> reductions;
    std::optional<std::uint64_t> seed;
    std::uint64_t shard = 0;
};

SearchResult search_vector(int n, const Signature& s, const SearchBudget& budget);

struct NonexistenceProof {
    int degree = 0;
    Signature signature;
    BigInt space_size = 0;
    std::vector<std::string> reductions;
    std::uint64_t hits = 0;
    std::uint64_t elapsed_ms = 0;
    std::optional<std::uint64_t> seed;
};

/// Exhaustive sweep that must come back empty. Throws InfeasibleSearch
/// when the space is beyond budget and NonexistenceRefuted on a hit.
NonexistenceProof prove_nonexistence(int n, const Signature& s, unsigned workers = 1,
                                     std::uint64_t max_states = 200'000'000);

/// (a, b) with [a, b] == g, both in A_n. Exhaustive for degree <= 8,
/// randomized up to 16. Exhaustive NotFound would contradict Ore's theorem
/// for A_n and is reported by std::logic_error.
std::optional<std::pair<Permutation, Permutation>> brute_commutator(const Permutation& g,
                                                                    SearchMode mode = SearchMode::exhaustive,
                                                                    std::uint64_t seed = 1,
                                                                    std::uint64_t max_states = 10'000'000);

/// x of order k1 and y of order k2 with <x, y> = A_n, seeded search.
std::optional<std::pair<Permutation, Permutation>> find_generating_pair(int n, long long k1, long long k2,
                                                                        std::uint64_t seed,
                                                                        std::uint64_t max_trials = 20'000);

/// Random element of A_n with order k: uniform cycle type of that order,
/// then a uniform conjugate.
Permutation random_element_of_order(int n, long long k, CounterRng& rng);

/// Random b in A_n with conjugate(a, b) == a2; nullopt on class splitting.
std::optional<Permutation> random_conjugator_in_An(const Permutation& a, const Permutation& a2, CounterRng& rng);

struct FactorizationSweep {
    int min_degree = 8;
    int max_degree = 8;
    /// Every even c of every degree in range and every legal l. Degree <= 8.
    bool exhaustive = true;
    std::uint64_t trials = 0;
    std::uint64_t seed = 1;
};

struct FactorizationReport {
    std::uint64_t bertram_cases = 0;
    std::uint64_t bertram_failures = 0;
    std::uint64_t xu_cases = 0;
    std::uint64_t xu_failures = 0;
    /// l one below the legal bound must be refused.
    std::uint64_t refusal_cases = 0;
    std::uint64_t refusal_failures = 0;
    /// One line per failure with the degree, l, element and trial seed.
    std::vector<std::string> failures;

    bool clean() const { return bertram_failures == 0 && xu_failures == 0 && refusal_failures == 0; }
};

FactorizationReport cross_check_factorizations(const FactorizationSweep& sweep);

/// Even permutations of degree n in lexicographic order of image tables.
/// Materialized, so only for small n.
std::vector<Permutation> alternating_elements(int n);

}  // namespace ansig
