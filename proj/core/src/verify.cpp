#include <stdexcept>

#include "ansig/signature.hpp"

namespace ansig {

std::vector<Permutation> GeneratingVector::entries() const
{
    std::vector<Permutation> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        out.push_back(a[i]);
        out.push_back(b[i]);
    }
    out.insert(out.end(), c.begin(), c.end());
    return out;
}

Permutation GeneratingVector::relation_product() const
{
    Permutation acc = Permutation::identity(degree);
    for (std::size_t i = 0; i < a.size(); ++i)
        acc = acc * commutator(a[i], b[i]);
    for (const auto& x : c)
        acc = acc * x;
    return acc;
}

VerificationReport verify_vector(int n, const Signature& s, const GeneratingVector& v)
{
    VerificationReport rep;

    rep.shape_ok = v.degree == n && static_cast<int>(v.a.size()) == s.h && static_cast<int>(v.b.size()) == s.h &&
                   v.c.size() == s.periods.size();
    const auto all = v.entries();
    for (const auto& x : all)
        if (x.degree() != n)
            rep.shape_ok = false;
    if (!rep.shape_ok) {
        rep.diagnostics.push_back("vector shape does not match degree " + std::to_string(n) + " and signature " +
                                  render(s));
        return rep;
    }

    rep.orders_match = true;
    for (std::size_t j = 0; j < v.c.size(); ++j)
        if (static_cast<long long>(v.c[j].order()) != s.periods[j]) {
            rep.orders_match = false;
            rep.diagnostics.push_back("c" + std::to_string(j + 1) + " has order " + std::to_string(v.c[j].order()) +
                                      ", expected " + std::to_string(s.periods[j]));
        }

    rep.product_is_identity = v.relation_product().is_identity();
    if (!rep.product_is_identity)
        rep.diagnostics.push_back("product of commutators and c's is " + v.relation_product().to_string());

    bool in_group = true;
    for (std::size_t j = 0; j < all.size(); ++j)
        if (!all[j].is_even()) {
            in_group = false;
            rep.diagnostics.push_back("entry " + std::to_string(j + 1) + " is an odd permutation");
        }
    if (in_group && !all.empty()) {
        const CertifiedAnswer ans = is_full_alternating(GeneratorSet(all));
        rep.generates = ans.is_alternating;
        rep.route = ans.route;
        if (!rep.generates)
            rep.diagnostics.push_back("entries generate a group of order " + ans.order->str() + ", not n!/2");
    } else if (all.empty()) {
        rep.diagnostics.push_back("empty vector generates the trivial group");
    }

    const GenusResult g = rh_genus(n, s);
    rep.sigma = g.sigma;
    rep.sigma_ok = g.integral && g.sigma >= 2;
    if (!rep.sigma_ok)
        rep.diagnostics.push_back("genus " + g.sigma.str() + " is not an integer >= 2");
    return rep;
}

Certificate make_certificate(int n, const Signature& s, GeneratingVector v, Method m, std::optional<std::uint64_t> seed)
{
    Certificate cert;
    cert.degree = n;
    cert.signature = s;
    cert.report = verify_vector(n, s, v);
    if (!cert.report.all_pass()) {
        std::string why;
        for (const auto& d : cert.report.diagnostics)
            why += "; " + d;
        throw std::logic_error("refusing to emit a failing certificate for " + pretty(s) + why);
    }
    cert.sigma = cert.report.sigma;
    cert.vector = std::move(v);
    cert.method = m;
    cert.seed = seed;
    return cert;
}

}  // namespace ansig
