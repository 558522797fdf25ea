#include "spider/constructions.hpp"

#include <mutex>
#include <numeric>

#include "builders.hpp"
#include "spider/certificate_io.hpp"
#include "spider/verifier.hpp"

namespace spider {

extern const char* const kAppendixJson;

namespace {

Signature lengths(const EdgeLabeling& f)
{
    Signature s;
    for (const auto& l : f)
        s.push_back(static_cast<int>(l.size()));
    return s;
}

LabelingCertificate finish(EdgeLabeling f, const std::string& id, Params p, int count)
{
    Signature sig = lengths(f);
    return make_certificate(sig, std::move(f), id, std::move(p), count);
}

template <class Build>
LabelingCertificate three_leg(const std::string& id, Build build)
{
    Params p;
    EdgeLabeling f = build(p);
    return finish(std::move(f), id, std::move(p), 4);
}

}  // namespace

LabelingCertificate make_certificate(const Signature& sig, EdgeLabeling labeling, const std::string& theorem_id,
                                     Params params, int claimed_count)
{
    LabelingCertificate cert{sig, std::move(labeling), theorem_id, std::move(params), claimed_count, std::nullopt};
    VerificationReport rep = verify_certificate(cert);
    if (!rep.ok())
        throw ConstructionError(theorem_id + " produced an invalid labeling for Sp(" + format_signature(sig) +
                                "): " + rep.violation->message);
    return cert;
}

LabelingCertificate construct_leg1(const Signature& sig)
{
    validate_signature(sig);
    Params p;
    auto f = raw::leg1(sig, p);
    return finish(std::move(f), "leg1", std::move(p), static_cast<int>(sig.size()) + 1);
}

LabelingCertificate construct_all_even(const Signature& sig, std::optional<int> k, int bump)
{
    validate_signature(sig);
    int d = static_cast<int>(sig.size());
    if (bump != 0 && bump != 1)
        throw DomainError("bump must be 0 or 1");
    Signature y = sig;
    y.back() -= bump;
    for (int v : y)
        if (v < 2 || v % 2)
            throw DomainError("all_even needs even legs of length at least 2");
    long lhs = 0;
    for (int i = 1; i <= d - 1; ++i)
        lhs += static_cast<long>(d - i) * y[i - 1];
    auto holds = [&](int kk) {
        long rhs = 0;
        for (int i = kk + 1; i <= d; ++i)
            rhs += y[i - 1];
        return lhs == rhs;
    };
    int lo = bump ? 1 : 0;
    std::optional<int> found;
    if (k) {
        if (*k < lo || *k > d - 1 || !holds(*k))
            throw DomainError("leg condition fails for the requested k");
        found = k;
    } else {
        for (int kk = lo; kk <= d - 1 && !found; ++kk)
            if (holds(kk))
                found = kk;
        if (!found)
            throw DomainError("no k satisfies the leg condition");
    }
    Params p{{"k", *found}, {"bump", bump}};
    auto f = raw::fundamental(sig, size_of(sig));
    return make_certificate(sig, std::move(f), "all_even", std::move(p), d + 1);
}

LabelingCertificate construct_2el(int m, int k)
{
    return three_leg("2el", [&](Params& p) { return raw::two_el(m, k, p); });
}

LabelingCertificate construct_eol(int n, int m, int l)
{
    return three_leg("eol", [&](Params& p) { return raw::eol(n, m, l, p); });
}

LabelingCertificate construct_oel(int n, int m, int l)
{
    return three_leg("oel", [&](Params& p) { return raw::oel(n, m, l, p); });
}

LabelingCertificate construct_eolsmall(int n, int m, int l)
{
    return three_leg("eolsmall", [&](Params& p) { return raw::eolsmall(n, m, l, p); });
}

LabelingCertificate construct_mixed_parity(int a, int b, int c)
{
    return three_leg("mixed_parity", [&](Params& p) { return raw::mixed(a, b, c, p); });
}

LabelingCertificate construct_three_even(int n, int m, int h)
{
    return three_leg("three_even", [&](Params& p) { return raw::three_even(n, m, h, p); });
}

LabelingCertificate construct_odd_3k(int n, int m, int k)
{
    return three_leg("odd_3k", [&](Params& p) { return raw::odd_3k(n, m, k, p); });
}

LabelingCertificate construct_odd_nm1(int n, int m)
{
    return three_leg("odd_nm1", [&](Params& p) { return raw::odd_nm1(n, m, p); });
}

LabelingCertificate construct_equal_odd(int n, int m)
{
    return three_leg("equal_odd", [&](Params& p) { return raw::equal_odd(n, m, p); });
}

LabelingCertificate construct_odd_shifted(int n, int m)
{
    return three_leg("odd_shifted", [&](Params& p) { return raw::odd_shifted(n, m, p); });
}

LabelingCertificate construct_consecutive_odd(int m)
{
    return three_leg("consecutive_odd", [&](Params& p) { return raw::consecutive_odd(m, p); });
}

LabelingCertificate construct_odd_m11(int m)
{
    return three_leg("odd_m11", [&](Params& p) { return raw::odd_m11(m, p); });
}

LabelingCertificate construct_leg3(int h, int m)
{
    return three_leg("leg3", [&](Params& p) { return raw::leg3(h, m, p); });
}

LabelingCertificate construct_leg5(int m, int h)
{
    return three_leg("leg5", [&](Params& p) { return raw::leg5(m, h, p); });
}

LabelingCertificate construct_leg7(int m, int h)
{
    return three_leg("leg7", [&](Params& p) { return raw::leg7(m, h, p); });
}

LabelingCertificate construct_9_11(int m)
{
    return three_leg("9_11", [&](Params& p) { return raw::nine_eleven(m, p); });
}

LabelingCertificate construct_13(int m, int n)
{
    return three_leg("13", [&](Params& p) { return raw::thirteen(m, n, p); });
}

const std::vector<LabelingCertificate>& appendix_store()
{
    static std::vector<LabelingCertificate> store;
    static std::once_flag once;
    std::call_once(once, [] {
        for (const auto& doc : nlohmann::json::parse(kAppendixJson)) {
            LabelingCertificate cert = certificate_from_json(doc);
            VerificationReport rep = verify_certificate(cert);
            if (!rep.ok())
                throw ConstructionError("stored labeling for Sp(" + format_signature(cert.signature) +
                                        ") fails verification: " + rep.violation->message);
            store.push_back(std::move(cert));
        }
    });
    return store;
}

LabelingCertificate appendix_labeling(int n, int m)
{
    for (const auto& cert : appendix_store())
        if (cert.params.at("n") == n && cert.params.at("m") == m)
            return cert;
    throw DomainError("no stored labeling for (n,m) = (" + std::to_string(n) + "," + std::to_string(m) + ")");
}

}  // namespace spider
