#include "ansig/signature.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ansig {

Signature Signature::canonical() const
{
    Signature s = *this;
    std::sort(s.periods.begin(), s.periods.end());
    return s;
}

Signature parse_signature(std::string_view text)
{
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    auto read_int = [&](const char* what) -> long long {
        skip_ws();
        if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError(std::string("expected ") + what, i);
        const std::size_t start = i;
        long long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > 1'000'000'000LL)
                throw ParseError(std::string(what) + " too large", start);
            ++i;
        }
        return v;
    };

    Signature s;
    s.h = static_cast<int>(read_int("quotient genus"));
    skip_ws();
    if (i == text.size() || text[i] != ';')
        throw ParseError("expected ';' after the quotient genus", i);
    ++i;
    skip_ws();
    if (i < text.size() && text[i] == '-') {
        ++i;
        skip_ws();
        if (i != text.size())
            throw ParseError("unexpected trailing input", i);
        return s;
    }
    for (;;) {
        skip_ws();
        const std::size_t start = i;
        const long long k = read_int("period");
        if (k < 2)
            throw ParseError("periods must be at least 2", start);
        s.periods.push_back(k);
        skip_ws();
        if (i == text.size())
            break;
        if (text[i] != ',')
            throw ParseError(std::string("expected ',' but found '") + text[i] + "'", i);
        ++i;
    }
    return s;
}

std::string render(const Signature& s)
{
    std::ostringstream os;
    os << s.h << ';';
    if (s.periods.empty())
        os << '-';
    for (std::size_t j = 0; j < s.periods.size(); ++j)
        os << (j ? "," : "") << s.periods[j];
    return os.str();
}

std::string pretty(const Signature& s)
{
    std::ostringstream os;
    os << '[' << s.h << "; ";
    if (s.periods.empty())
        os << '-';
    for (std::size_t j = 0; j < s.periods.size(); ++j)
        os << (j ? ", " : "") << s.periods[j];
    os << ']';
    return os.str();
}

namespace {

void collect_orders(int remaining, int max_part, int even_parts, long long lcm, std::set<long long>& out)
{
    if (even_parts % 2 == 0 && lcm > 1)
        out.insert(lcm);
    for (int part = std::min(max_part, remaining); part >= 2; --part)
        collect_orders(remaining - part, part, even_parts + (part % 2 == 0), std::lcm(lcm, static_cast<long long>(part)), out);
}

}  // namespace

const OrderSet& order_set(int n)
{
    static std::mutex mu;
    static std::map<int, std::unique_ptr<OrderSet>> cache;
    if (n < 2)
        throw PreconditionError("order_set needs n >= 2");
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) {
        slot = std::make_unique<OrderSet>();
        slot->degree = n;
        collect_orders(n, n, 0, 1, slot->orders);
    }
    return *slot;
}

GenusResult rh_genus(int n, const Signature& s)
{
    if (n < 5)
        throw PreconditionError("rh_genus needs n >= 5");
    const BigRational g(alternating_order(n));
    BigRational sum = 0;
    for (long long k : s.periods)
        sum += BigRational(1) - BigRational(BigInt(1), BigInt(k));
    GenusResult res;
    res.sigma = BigRational(1) + g * BigRational(s.h - 1) + g / 2 * sum;
    res.integral = boost::multiprecision::denominator(res.sigma) == 1;
    return res;
}

Potential is_potential(int n, const Signature& s)
{
    if (n < 5)
        throw PreconditionError("is_potential needs n >= 5");
    const OrderSet& os = order_set(n);
    for (long long k : s.periods)
        if (!os.contains(k))
            return {false, std::to_string(k) + " is not the order of an element of A_" + std::to_string(n)};
    const GenusResult g = rh_genus(n, s);
    if (!g.integral)
        return {false, "genus " + g.sigma.str() + " is not an integer"};
    if (g.sigma < 2)
        return {false, "genus " + g.sigma.str() + " is below 2"};
    return {true, "periods lie in the order set and the genus is an integer >= 2"};
}

std::string to_string(Method m)
{
    switch (m) {
    case Method::small_primes:
        return "small-primes";
    case Method::multi_period:
        return "multi-period";
    case Method::one_period_odd:
        return "one-period-odd";
    case Method::one_period_even:
        return "one-period-even";
    case Method::amplified_same_period:
        return "amplified-same-period";
    case Method::mixed_period:
        return "mixed-period";
    case Method::genus_h:
        return "genus-h";
    case Method::oracle:
        return "oracle";
    }
    return "oracle";
}

std::optional<Method> parse_method(std::string_view s)
{
    for (Method m : {Method::small_primes, Method::multi_period, Method::one_period_odd, Method::one_period_even,
                     Method::amplified_same_period, Method::mixed_period, Method::genus_h, Method::oracle})
        if (to_string(m) == s)
            return m;
    return std::nullopt;
}

}  // namespace ansig
