#pragma once

/**
 * @file serialize.hpp
 * @brief JSON forms of certificates, nonexistence proofs and classify
 * results. Output is byte-stable: fixed key order, cycle notation for
 * permutations, decimal strings for big numbers.
 */

#include <optional>
#include <string>
#include <string_view>

#include "ansig/classify.hpp"
#include "ansig/oracle.hpp"
#include "ansig/signature.hpp"

namespace ansig {

std::string to_json(const Certificate& cert);
/// elapsed_ms is omitted when include_timing is false, for reproducible output.
std::string to_json(const NonexistenceProof& proof, bool include_timing = true);
std::string to_json(int n, const Signature& s, const ClassifyResult& res, bool include_timing = true);

/// A certificate as read from disk, before any check runs.
struct CertificateFile {
    int degree = 0;
    Signature signature;
    GeneratingVector vector;
    std::optional<Method> method;
    std::optional<std::uint64_t> seed;
    /// sigma as stated in the file, if present.
    std::optional<std::string> sigma;
};

/// Accepts a bare certificate or a classify result that carries one.
/// Throws ParseError on malformed JSON, unknown methods or bad cycles.
CertificateFile parse_certificate(std::string_view json);

}  // namespace ansig
