#pragma once

/**
 * @file classify.hpp
 * @brief Decides one (n, signature) cell: not potential, actual with a
 * certificate, non-actual with a proof, or unresolved within budget.
 */

#include <cstdint>
#include <optional>
#include <string>

#include "ansig/oracle.hpp"
#include "ansig/signature.hpp"

namespace ansig {

enum class Outcome { not_potential, actual, non_actual, unresolved };
std::string to_string(Outcome o);

struct ClassifyOptions {
    std::uint64_t seed = 1;
    /// Consult the table of known exceptions before searching.
    bool use_table = true;
    /// Leaves visited by an exhaustive sweep before giving up on it.
    std::uint64_t exhaustive_budget = 20'000'000;
    /// Trials for the randomized oracle.
    std::uint64_t random_budget = 400'000;
    unsigned workers = 1;
};

struct ClassifyResult {
    Outcome outcome = Outcome::unresolved;
    std::string reason;
    std::optional<Certificate> certificate;
    std::optional<NonexistenceProof> proof;
};

/// Deterministic for fixed options: the same seed yields the same
/// certificate, independent of the worker count.
ClassifyResult classify(int n, const Signature& s, const ClassifyOptions& opts = {});

/// (n, s) pairs that admit no generating vector although potential, each
/// confirmed by an exhaustive sweep.
bool is_known_exception(int n, const Signature& s);

/// Per-cell seed derived from the run seed, n and the rendered signature.
std::uint64_t cell_seed(std::uint64_t seed, int n, const Signature& s);

}  // namespace ansig
