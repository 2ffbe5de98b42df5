#pragma once

/**
 * @file group.hpp
 * @brief Orbits, block systems, exact group order and recognition of A_n.
 *
 * Everything here is deterministic. Randomized helpers live in the
 * constructions and oracle layers and take explicit seeds.
 */

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ansig/permutation.hpp"

namespace ansig {

using BigInt = boost::multiprecision::cpp_int;

/// Default upper bound on the degree accepted by group_order.
inline constexpr int kMaxOrderDegree = 64;

class GeneratorSet {
public:
    /// Throws PreconditionError on empty input, DegreeMismatch on mixed degrees.
    explicit GeneratorSet(std::vector<Permutation> gens);

    int degree() const noexcept { return degree_; }
    const std::vector<Permutation>& gens() const noexcept { return gens_; }
    bool all_even() const;

private:
    int degree_;
    std::vector<Permutation> gens_;
};

struct BlockSystem {
    int block_size = 0;
    /// Each block ascending; blocks ordered by their minimum.
    std::vector<std::vector<Value>> blocks;

    bool is_trivial() const { return block_size == 1 || blocks.size() == 1; }
};

/// Ascending orbit of seed.
std::vector<Value> orbit(const GeneratorSet& gs, Value seed);
bool is_transitive(const GeneratorSet& gs);

/// Finest block system in which pair.first and pair.second share a block.
/// Throws PreconditionError if gs is not transitive.
BlockSystem minimal_block_system(const GeneratorSet& gs, std::pair<Value, Value> pair);
bool is_primitive(const GeneratorSet& gs);

/// Sufficient condition only: a cycle of length l with gcd(n,l) = 1 and
/// l > n/2 in a transitive group forces primitivity. False means no
/// conclusion.
bool primitive_by_coprime_cycle(const GeneratorSet& gs, const Cycle& witness);

/// Exact order of <gens> via deterministic Schreier-Sims.
BigInt group_order(const GeneratorSet& gs, int max_degree = kMaxOrderDegree);

BigInt factorial(int n);
BigInt alternating_order(int n);

enum class Route { none, miller, jones, exact };
std::string to_string(Route r);

struct CertifiedAnswer {
    bool is_alternating = false;
    /// First route that certified the answer; `exact` when only ground truth fired.
    Route route = Route::none;
    bool miller = false;
    bool jones = false;
    std::optional<BigInt> order;
};

struct RecognitionOptions {
    bool compute_exact = true;
    int max_degree = kMaxOrderDegree;
};

/// Decides whether <gens> = A_n. Extra elements known to lie in the group
/// (for example an l-cycle built by the caller) may be passed as
/// witnesses; they are scanned for Miller and Jones cycles but are not
/// added as generators. When the exact route runs, throws std::logic_error
/// if a fast route contradicts it.
CertifiedAnswer is_full_alternating(const GeneratorSet& gs, std::span<const Permutation> witnesses = {},
                                    RecognitionOptions opts = {});

/// Some even b with conjugate(a, b) == a2. Throws ClassSplit when no even
/// conjugator exists, PreconditionError when the cycle types differ.
Permutation conjugator_in_An(const Permutation& a, const Permutation& a2);

/// True when the cycle type of p, fixed points included, consists of
/// distinct odd lengths: exactly the S_n classes that split in A_n.
bool class_splits(const CycleType& t);

/// Any b (not parity-corrected) with conjugate(a, b) == a2, given a choice
/// of which equal-length cycles pair up and the rotation of each.
/// `pairing[i]` indexes a2's cycles; `rotation[i]` offsets into that cycle.
/// Fixed points pair up in ascending order unless `fixed_perm` is given.
Permutation aligned_conjugator(const Permutation& a, const Permutation& a2, std::span<const int> pairing,
                               std::span<const int> rotation, std::span<const int> fixed_perm = {});

/// Makes b even while keeping conjugate(a, b) fixed, by composing with an
/// odd element of the centralizer of a. Throws ClassSplit when impossible.
Permutation make_even_conjugator(const Permutation& a, Permutation b);

}  // namespace ansig
