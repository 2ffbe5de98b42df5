#include "ansig/serialize.hpp"

#include <json.hpp>

namespace ansig {

namespace {

using Json = nlohmann::ordered_json;

Json signature_json(const Signature& s)
{
    Json j;
    j["h"] = s.h;
    j["periods"] = s.periods;
    return j;
}

Json cycles_json(const std::vector<Permutation>& xs)
{
    Json arr = Json::array();
    for (const auto& x : xs)
        arr.push_back(x.to_string());
    return arr;
}

Json certificate_json(const Certificate& cert)
{
    Json j;
    j["degree"] = cert.degree;
    j["signature"] = signature_json(cert.signature);
    j["sigma"] = cert.sigma.str();
    j["method"] = to_string(cert.method);
    j["vector"] = {{"a", cycles_json(cert.vector.a)}, {"b", cycles_json(cert.vector.b)}, {"c", cycles_json(cert.vector.c)}};
    j["report"] = {{"orders_match", cert.report.orders_match},
                   {"product_is_identity", cert.report.product_is_identity},
                   {"generates", cert.report.generates},
                   {"route", to_string(cert.report.route)}};
    j["seed"] = cert.seed ? Json(*cert.seed) : Json(nullptr);
    return j;
}

Json proof_json(const NonexistenceProof& p, bool include_timing)
{
    Json j;
    j["degree"] = p.degree;
    j["signature"] = signature_json(p.signature);
    j["space_size"] = p.space_size.str();
    j["reductions"] = p.reductions;
    j["hits"] = p.hits;
    if (include_timing)
        j["elapsed_ms"] = p.elapsed_ms;
    j["seed"] = p.seed ? Json(*p.seed) : Json(nullptr);
    return j;
}

template <class T>
T field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field '") + key + "'", 0);
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ParseError(std::string("field '") + key + "' has the wrong type", 0);
    }
}

std::vector<Permutation> parse_cycles(int n, const Json& vec, const char* key)
{
    std::vector<Permutation> out;
    for (const auto& s : field<std::vector<std::string>>(vec, key)) {
        try {
            out.push_back(Permutation::parse(n, s));
        } catch (const Error& e) {
            throw ParseError(std::string("vector.") + key + ": " + e.what(), 0);
        }
    }
    return out;
}

}  // namespace

std::string to_json(const Certificate& cert) { return certificate_json(cert).dump(2) + "\n"; }

std::string to_json(const NonexistenceProof& proof, bool include_timing)
{
    return proof_json(proof, include_timing).dump(2) + "\n";
}

std::string to_json(int n, const Signature& s, const ClassifyResult& res, bool include_timing)
{
    Json j;
    j["degree"] = n;
    j["signature"] = signature_json(s);
    j["outcome"] = to_string(res.outcome);
    j["reason"] = res.reason;
    j["certificate"] = res.certificate ? certificate_json(*res.certificate) : Json(nullptr);
    j["proof"] = res.proof ? proof_json(*res.proof, include_timing) : Json(nullptr);
    return j.dump(2) + "\n";
}

CertificateFile parse_certificate(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
    // Classify results wrap the certificate; accept those too.
    if (j.is_object() && j.contains("outcome") && j.contains("certificate")) {
        if (j.at("certificate").is_null())
            throw ParseError("result has no certificate (outcome " + j.at("outcome").dump() + ")", 0);
        j = Json(j.at("certificate"));
    }
    CertificateFile f;
    f.degree = field<int>(j, "degree");
    if (f.degree < 1 || f.degree > 4096)
        throw ParseError("degree out of range", 0);
    const Json sig = field<Json>(j, "signature");
    f.signature.h = field<int>(sig, "h");
    f.signature.periods = field<std::vector<long long>>(sig, "periods");
    if (j.contains("method")) {
        const auto name = field<std::string>(j, "method");
        f.method = parse_method(name);
        if (!f.method)
            throw ParseError("unknown method '" + name + "'", 0);
    }
    if (j.contains("seed") && !j.at("seed").is_null())
        f.seed = field<std::uint64_t>(j, "seed");
    if (j.contains("sigma"))
        f.sigma = field<std::string>(j, "sigma");
    const Json vec = field<Json>(j, "vector");
    f.vector.degree = f.degree;
    f.vector.a = parse_cycles(f.degree, vec, "a");
    f.vector.b = parse_cycles(f.degree, vec, "b");
    f.vector.c = parse_cycles(f.degree, vec, "c");
    return f;
}

}  // namespace ansig
