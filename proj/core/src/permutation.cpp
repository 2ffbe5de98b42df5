#include "ansig/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace ansig {

namespace {

void check_degree(int degree)
{
    if (degree < 1 || degree > 65535)
        throw InvalidPermutation("degree must lie in [1, 65535], got " + std::to_string(degree));
}

void check_same_degree(const Permutation& p, const Permutation& q)
{
    if (p.degree() != q.degree())
        throw DegreeMismatch("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                             std::to_string(q.degree()));
}

}  // namespace

Cycle::Cycle(std::vector<Value> values) : values_(std::move(values))
{
    if (values_.size() < 2)
        throw InvalidPermutation("a cycle needs at least two values");
    std::vector<Value> sorted = values_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidPermutation("repeated value in cycle");
    auto min_it = std::min_element(values_.begin(), values_.end());
    std::rotate(values_.begin(), min_it, values_.end());
}

Permutation::Permutation(int degree)
{
    check_degree(degree);
    images_.resize(static_cast<std::size_t>(degree));
    std::iota(images_.begin(), images_.end(), std::uint16_t{0});
}

Permutation Permutation::from_images(std::span<const Value> images)
{
    const int n = static_cast<int>(images.size());
    check_degree(n);
    std::vector<std::uint16_t> raw(images.size());
    std::vector<bool> seen(images.size(), false);
    for (std::size_t j = 0; j < images.size(); ++j) {
        const Value v = images[j];
        if (v < 1 || v > n)
            throw InvalidPermutation("image " + std::to_string(v) + " outside {1.." + std::to_string(n) + "}");
        if (seen[static_cast<std::size_t>(v - 1)])
            throw InvalidPermutation("image " + std::to_string(v) + " repeated");
        seen[static_cast<std::size_t>(v - 1)] = true;
        raw[j] = static_cast<std::uint16_t>(v - 1);
    }
    Permutation p;
    p.images_ = std::move(raw);
    return p;
}

Permutation Permutation::from_raw(std::vector<std::uint16_t> raw)
{
    check_degree(static_cast<int>(raw.size()));
    Permutation p;
    p.images_ = std::move(raw);
    return p;
}

Permutation Permutation::from_cycles(int degree, std::span<const std::vector<Value>> cycles)
{
    check_degree(degree);
    Permutation p(degree);
    std::vector<bool> used(static_cast<std::size_t>(degree), false);
    for (const auto& cyc : cycles) {
        if (cyc.size() < 2) {
            if (cyc.size() == 1) {
                const Value v = cyc[0];
                if (v < 1 || v > degree)
                    throw InvalidPermutation("value " + std::to_string(v) + " out of range");
                if (used[static_cast<std::size_t>(v - 1)])
                    throw InvalidPermutation("cycles are not disjoint at value " + std::to_string(v));
                used[static_cast<std::size_t>(v - 1)] = true;
            }
            continue;
        }
        for (const Value v : cyc) {
            if (v < 1 || v > degree)
                throw InvalidPermutation("value " + std::to_string(v) + " out of range");
            if (used[static_cast<std::size_t>(v - 1)])
                throw InvalidPermutation("cycles are not disjoint at value " + std::to_string(v));
            used[static_cast<std::size_t>(v - 1)] = true;
        }
        for (std::size_t j = 0; j < cyc.size(); ++j) {
            const Value from = cyc[j];
            const Value to = cyc[(j + 1) % cyc.size()];
            p.images_[static_cast<std::size_t>(from - 1)] = static_cast<std::uint16_t>(to - 1);
        }
    }
    return p;
}

Permutation Permutation::parse(int degree, std::string_view text)
{
    std::vector<std::vector<Value>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip_ws();
    if (i == text.size())
        throw ParseError("empty permutation text", i);
    while (i < text.size()) {
        if (text[i] != '(')
            throw ParseError(std::string("expected '(' but found '") + text[i] + "'", i);
        ++i;
        std::vector<Value> cur;
        for (;;) {
            skip_ws();
            if (i == text.size())
                throw ParseError("unterminated cycle", i);
            if (text[i] == ')') {
                ++i;
                break;
            }
            if (text[i] == ',') {
                ++i;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
            const std::size_t start = i;
            long long v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                if (v > 1000000)
                    throw ParseError("value too large", start);
                ++i;
            }
            if (v < 1 || v > degree)
                throw ParseError("value " + std::to_string(v) + " outside {1.." + std::to_string(degree) + "}", start);
            cur.push_back(static_cast<Value>(v));
        }
        if (std::find_if(cur.begin(), cur.end(), [&](Value v) {
                return std::count(cur.begin(), cur.end(), v) > 1;
            }) != cur.end())
            throw ParseError("repeated value inside a cycle", i);
        cycles.push_back(std::move(cur));
        skip_ws();
    }
    try {
        return from_cycles(degree, cycles);
    } catch (const InvalidPermutation& e) {
        throw ParseError(e.what(), 0);
    }
}

Permutation Permutation::long_cycle(int degree, int first, int len)
{
    std::vector<Value> cyc(static_cast<std::size_t>(len));
    std::iota(cyc.begin(), cyc.end(), first);
    const std::vector<std::vector<Value>> cycles{cyc};
    return from_cycles(degree, cycles);
}

std::vector<Value> Permutation::images() const
{
    std::vector<Value> out(images_.size());
    for (std::size_t j = 0; j < images_.size(); ++j)
        out[j] = static_cast<Value>(images_[j]) + 1;
    return out;
}

bool Permutation::is_identity() const
{
    for (std::size_t j = 0; j < images_.size(); ++j)
        if (images_[j] != j)
            return false;
    return true;
}

bool Permutation::is_even() const { return parity(*this) == Parity::even; }

std::uint64_t Permutation::order() const { return CycleType::of(*this).order(); }

int Permutation::support_size() const
{
    int s = 0;
    for (std::size_t j = 0; j < images_.size(); ++j)
        s += images_[j] != j;
    return s;
}

Permutation Permutation::inverse() const
{
    std::vector<std::uint16_t> inv(images_.size());
    for (std::size_t j = 0; j < images_.size(); ++j)
        inv[images_[j]] = static_cast<std::uint16_t>(j);
    return from_raw(std::move(inv));
}

Permutation Permutation::power(long long k) const
{
    const auto ord = static_cast<long long>(order());
    k %= ord;
    if (k < 0)
        k += ord;
    // Walk each cycle once rather than multiplying k times.
    std::vector<std::uint16_t> out(images_.size());
    std::vector<bool> done(images_.size(), false);
    std::vector<std::uint16_t> cyc;
    for (std::size_t s = 0; s < images_.size(); ++s) {
        if (done[s])
            continue;
        cyc.clear();
        for (std::size_t x = s; !done[x]; x = images_[x]) {
            done[x] = true;
            cyc.push_back(static_cast<std::uint16_t>(x));
        }
        const std::size_t len = cyc.size();
        const std::size_t shift = static_cast<std::size_t>(k % static_cast<long long>(len));
        for (std::size_t j = 0; j < len; ++j)
            out[cyc[j]] = cyc[(j + shift) % len];
    }
    return from_raw(std::move(out));
}

std::string Permutation::to_string() const
{
    const CycleDecomposition d(*this);
    if (d.nc() == 0)
        return "()";
    std::ostringstream os;
    for (const auto& c : d.cycles()) {
        os << '(';
        for (std::size_t j = 0; j < c.length(); ++j) {
            if (j)
                os << ' ';
            os << c[j];
        }
        os << ')';
    }
    return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q)
{
    check_same_degree(p, q);
    const auto& a = p.raw();
    const auto& b = q.raw();
    std::vector<std::uint16_t> out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x)
        out[x] = b[a[x]];
    return Permutation::from_raw(std::move(out));
}

Permutation product(std::span<const Permutation> factors)
{
    if (factors.empty())
        throw PreconditionError("product of an empty sequence has no degree");
    Permutation acc = factors.front();
    for (std::size_t j = 1; j < factors.size(); ++j)
        acc = compose(acc, factors[j]);
    return acc;
}

Permutation commutator(const Permutation& a, const Permutation& b)
{
    check_same_degree(a, b);
    return a.inverse() * b.inverse() * a * b;
}

Permutation conjugate(const Permutation& a, const Permutation& b)
{
    check_same_degree(a, b);
    return b.inverse() * a * b;
}

Parity parity(const Permutation& p)
{
    const auto& img = p.raw();
    std::vector<bool> seen(img.size(), false);
    std::size_t transpositions = 0;
    for (std::size_t s = 0; s < img.size(); ++s) {
        if (seen[s])
            continue;
        std::size_t len = 0;
        for (std::size_t x = s; !seen[x]; x = img[x]) {
            seen[x] = true;
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

CycleType CycleType::of(const Permutation& p)
{
    CycleType t;
    t.degree = p.degree();
    const auto& img = p.raw();
    std::vector<bool> seen(img.size(), false);
    for (std::size_t s = 0; s < img.size(); ++s) {
        if (seen[s])
            continue;
        int len = 0;
        for (std::size_t x = s; !seen[x]; x = img[x]) {
            seen[x] = true;
            ++len;
        }
        if (len >= 2)
            t.lengths.push_back(len);
    }
    std::sort(t.lengths.begin(), t.lengths.end());
    return t;
}

int CycleType::support_size() const { return std::accumulate(lengths.begin(), lengths.end(), 0); }

std::uint64_t CycleType::order() const
{
    std::uint64_t ord = 1;
    for (int len : lengths)
        ord = std::lcm(ord, static_cast<std::uint64_t>(len));
    return ord;
}

bool CycleType::is_even() const
{
    int s = 0;
    for (int len : lengths)
        s += len - 1;
    return s % 2 == 0;
}

CycleDecomposition::CycleDecomposition(const Permutation& p) : degree_(p.degree())
{
    const int n = p.degree();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (Value s = 1; s <= n; ++s) {
        if (seen[static_cast<std::size_t>(s - 1)] || p(s) == s)
            continue;
        std::vector<Value> vals;
        for (Value x = s; !seen[static_cast<std::size_t>(x - 1)]; x = p(x)) {
            seen[static_cast<std::size_t>(x - 1)] = true;
            vals.push_back(x);
        }
        cycles_.emplace_back(std::move(vals));
    }
}

CycleDecomposition::CycleDecomposition(int degree, std::vector<Cycle> cycles)
    : degree_(degree), cycles_(std::move(cycles))
{
    check_degree(degree);
    std::vector<bool> used(static_cast<std::size_t>(degree), false);
    for (const auto& c : cycles_)
        for (Value v : c.values()) {
            if (v < 1 || v > degree)
                throw InvalidPermutation("value " + std::to_string(v) + " out of range");
            if (used[static_cast<std::size_t>(v - 1)])
                throw InvalidPermutation("overlapping cycles at value " + std::to_string(v));
            used[static_cast<std::size_t>(v - 1)] = true;
        }
    std::sort(cycles_.begin(), cycles_.end(), [](const Cycle& a, const Cycle& b) { return a[0] < b[0]; });
}

std::vector<Value> CycleDecomposition::support() const
{
    std::vector<Value> s;
    for (const auto& c : cycles_)
        s.insert(s.end(), c.values().begin(), c.values().end());
    std::sort(s.begin(), s.end());
    return s;
}

std::vector<Value> CycleDecomposition::complement() const
{
    std::vector<bool> in(static_cast<std::size_t>(degree_), false);
    for (const auto& c : cycles_)
        for (Value v : c.values())
            in[static_cast<std::size_t>(v - 1)] = true;
    std::vector<Value> out;
    for (Value v = 1; v <= degree_; ++v)
        if (!in[static_cast<std::size_t>(v - 1)])
            out.push_back(v);
    return out;
}

Permutation CycleDecomposition::recompose() const
{
    std::vector<std::vector<Value>> raw;
    raw.reserve(cycles_.size());
    for (const auto& c : cycles_)
        raw.push_back(c.values());
    return Permutation::from_cycles(degree_, raw);
}

CycleType CycleDecomposition::type() const
{
    CycleType t;
    t.degree = degree_;
    for (const auto& c : cycles_)
        t.lengths.push_back(static_cast<int>(c.length()));
    std::sort(t.lengths.begin(), t.lengths.end());
    return t;
}

}  // namespace ansig
