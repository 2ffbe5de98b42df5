#pragma once

/**
 * @file builders.hpp
 * @brief Explicit generating-vector constructions, one per family of
 * signatures. Every builder returns a verified Certificate or throws;
 * none returns an unchecked vector.
 *
 * The common step turns a target g into a commutator: factor g as two
 * l-cycles x*y, set a = x^-1, and pick b in A_n conjugating a onto y, so
 * [a,b] = x*y = g.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "ansig/constructions.hpp"
#include "ansig/signature.hpp"

namespace ansig {

/// Intermediate objects a builder used, for tests and diagnostics.
struct BuildTrace {
    std::optional<AlignmentPlan> alignment;
    std::optional<TwoCycleFactorization> factorization;
    std::optional<PrimeWitness> prime;
};

/// (a, b) in A_n with [a, b] == f.left() * f.right().
std::pair<Permutation, Permutation> commutator_from_factorization(const TwoCycleFactorization& f);

/// Some period divisible by 2 or 3, h = 1, n >= 40. The l-cycles have
/// prime length in [floor(3n/4)+3, n-3].
Certificate build_small_primes(int n, const Signature& s, BuildTrace* trace = nullptr);

/// h = 1, r >= 2, every period coprime to 6, n >= 24.
Certificate build_multi_period(int n, const Signature& s, BuildTrace* trace = nullptr);

/// [1; k] with k coprime to 6, for n >= 17 odd or n >= 24 even.
/// Even n uses a seeded randomized factorization; odd n is deterministic.
Certificate build_one_period(int n, const Signature& s, std::uint64_t seed = 1, BuildTrace* trace = nullptr);

/// From a [1;k] or [1;k,k] certificate to [1; k x r]. Odd k takes any r
/// from a [1;k] base. Even k takes odd r from [1;k] and even r from [1;k,k].
Certificate amplify_same_period(const Certificate& base, int r);

/// Two distinct periods n1 != n2 of s carried by a pair of elements of
/// those orders that already generates A_n.
Certificate build_mixed_period(int n, const Signature& s, const std::pair<Permutation, Permutation>& pair_witness);

/// h >= 2: one handle carries a fixed generating pair, one handle absorbs
/// the product of the periods, the rest are trivial.
Certificate build_genus_h(int n, const Signature& s);

}  // namespace ansig
