#pragma once

/**
 * @file permutation.hpp
 * @brief Exact arithmetic on permutations of {1,...,n}.
 *
 * Products are applied left to right: (p * q)(x) = q(p(x)). With this
 * convention a word a1 a2 ... ak is evaluated in the order it is written,
 * so a commutator [a,b] = a^-1 b^-1 a b and conjugate(a, b) = b^-1 a b.
 *
 * Every external surface is 1-based. Storage is 0-based.
 */

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ansig/error.hpp"

namespace ansig {

using Value = int;

class Permutation;

/// A nontrivial cycle, rotated so that its minimum value comes first.
class Cycle {
public:
    /// Throws InvalidPermutation unless values has >= 2 distinct entries.
    explicit Cycle(std::vector<Value> values);

    const std::vector<Value>& values() const noexcept { return values_; }
    std::size_t length() const noexcept { return values_.size(); }
    Value operator[](std::size_t j) const { return values_[j]; }

    bool operator==(const Cycle&) const = default;

private:
    std::vector<Value> values_;
};

/// Multiset of nontrivial cycle lengths, kept in ascending order.
struct CycleType {
    int degree = 0;
    std::vector<int> lengths;

    static CycleType of(const Permutation& p);

    int support_size() const;
    int fixed_points() const { return degree - support_size(); }
    int cycle_count() const { return static_cast<int>(lengths.size()); }
    std::uint64_t order() const;
    bool is_even() const;

    bool operator==(const CycleType&) const = default;
    auto operator<=>(const CycleType&) const = default;
};

class Permutation {
public:
    /// Identity of the given degree.
    explicit Permutation(int degree = 1);

    /// images[j-1] is the image of value j. Throws InvalidPermutation if the
    /// table is not a bijection on {1,...,degree}.
    static Permutation from_images(std::span<const Value> images);

    /// Product of the given disjoint cycles. Rejects overlapping cycles.
    static Permutation from_cycles(int degree, std::span<const std::vector<Value>> cycles);

    /// Parses disjoint cycle notation such as "(1 2 3)(5 6)" or "()".
    static Permutation parse(int degree, std::string_view text);

    static Permutation identity(int degree) { return Permutation(degree); }

    /// The single cycle (1 2 ... len) on values first..first+len-1.
    static Permutation long_cycle(int degree, int first, int len);

    int degree() const noexcept { return static_cast<int>(images_.size()); }

    Value operator()(Value x) const { return static_cast<Value>(images_[static_cast<std::size_t>(x - 1)]) + 1; }

    /// 1-based image table.
    std::vector<Value> images() const;

    bool is_identity() const;
    bool is_even() const;
    std::uint64_t order() const;
    int support_size() const;
    bool moves(Value x) const { return (*this)(x) != x; }

    Permutation inverse() const;
    Permutation power(long long k) const;

    /// Canonical disjoint cycle notation, "()" for the identity.
    std::string to_string() const;

    /// 0-based raw access, used by hot loops.
    const std::vector<std::uint16_t>& raw() const noexcept { return images_; }
    static Permutation from_raw(std::vector<std::uint16_t> raw);

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<std::uint16_t> images_;
};

/// p * q under the left-to-right convention.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// Product of a nonempty sequence, evaluated left to right.
Permutation product(std::span<const Permutation> factors);

/// a^-1 b^-1 a b.
Permutation commutator(const Permutation& a, const Permutation& b);

/// b^-1 a b. If a has a cycle (x1 ... xk), the result has (b(x1) ... b(xk)).
Permutation conjugate(const Permutation& a, const Permutation& b);

enum class Parity { even, odd };
Parity parity(const Permutation& p);

/// Disjoint nontrivial cycles of a permutation, sorted by minimum value.
class CycleDecomposition {
public:
    explicit CycleDecomposition(const Permutation& p);

    /// Throws InvalidPermutation if the cycles overlap or leave {1..degree}.
    CycleDecomposition(int degree, std::vector<Cycle> cycles);

    int degree() const noexcept { return degree_; }
    const std::vector<Cycle>& cycles() const noexcept { return cycles_; }
    int nc() const noexcept { return static_cast<int>(cycles_.size()); }

    /// Supp, ascending.
    std::vector<Value> support() const;
    /// Supp^c, ascending.
    std::vector<Value> complement() const;

    Permutation recompose() const;
    CycleType type() const;

private:
    int degree_;
    std::vector<Cycle> cycles_;
};

inline CycleDecomposition cycle_decompose(const Permutation& p) { return CycleDecomposition(p); }
inline Permutation recompose(const CycleDecomposition& d) { return d.recompose(); }

}  // namespace ansig
