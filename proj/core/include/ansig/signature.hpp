#pragma once

/**
 * @file signature.hpp
 * @brief Signatures [h; n1,...,nr], Riemann-Hurwitz arithmetic, generating
 * vectors and their verification.
 */

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ansig/group.hpp"
#include "ansig/permutation.hpp"

namespace ansig {

using BigRational = boost::multiprecision::cpp_rational;

struct Signature {
    int h = 0;
    std::vector<long long> periods;

    int r() const { return static_cast<int>(periods.size()); }
    /// Periods sorted ascending.
    Signature canonical() const;

    bool operator==(const Signature&) const = default;
};

/// Grammar: "h;n1,n2,..." or "h;-". Throws ParseError with the offending
/// character position.
Signature parse_signature(std::string_view text);
/// "1;5,7", "2;-".
std::string render(const Signature& s);
/// "[1; 5, 7]", "[2; -]".
std::string pretty(const Signature& s);

struct OrderSet {
    int degree = 0;
    std::set<long long> orders;

    bool contains(long long k) const { return orders.count(k) != 0; }
};

/// Orders of nontrivial elements of A_n: lcms of partitions of n with an
/// even number of even parts. Cached per n.
const OrderSet& order_set(int n);

struct GenusResult {
    BigRational sigma;
    bool integral = false;
};

/// sigma = 1 + |A_n|(h-1) + |A_n|/2 * sum(1 - 1/n_j), exactly.
GenusResult rh_genus(int n, const Signature& s);

struct Potential {
    bool potential = false;
    std::string reason;

    explicit operator bool() const { return potential; }
};
Potential is_potential(int n, const Signature& s);

struct GeneratingVector {
    int degree = 0;
    std::vector<Permutation> a;
    std::vector<Permutation> b;
    std::vector<Permutation> c;

    /// a1, b1, ..., ah, bh, c1, ..., cr.
    std::vector<Permutation> entries() const;
    /// prod [a_i, b_i] * prod c_j.
    Permutation relation_product() const;
};

struct VerificationReport {
    bool shape_ok = false;
    bool orders_match = false;
    bool product_is_identity = false;
    bool generates = false;
    Route route = Route::none;
    BigRational sigma;
    bool sigma_ok = false;
    std::vector<std::string> diagnostics;

    bool all_pass() const { return shape_ok && orders_match && product_is_identity && generates && sigma_ok; }
};

/// Every check runs independently and reports into its own field.
VerificationReport verify_vector(int n, const Signature& s, const GeneratingVector& v);

enum class Method {
    small_primes,
    multi_period,
    one_period_odd,
    one_period_even,
    amplified_same_period,
    mixed_period,
    genus_h,
    oracle
};
std::string to_string(Method m);
std::optional<Method> parse_method(std::string_view s);

struct Certificate {
    int degree = 0;
    /// Periods in the order matching vector.c.
    Signature signature;
    BigRational sigma;
    GeneratingVector vector;
    Method method = Method::oracle;
    VerificationReport report;
    std::optional<std::uint64_t> seed;
};

/// Runs verify_vector and packages the result; throws std::logic_error if
/// the vector does not pass, so no failing certificate is ever emitted.
Certificate make_certificate(int n, const Signature& s, GeneratingVector v, Method m,
                             std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace ansig
