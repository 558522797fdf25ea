#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

#include "spider/constructions.hpp"

namespace spider {

namespace {

using Attempt = std::function<LabelingCertificate()>;

// Certificate over the input leg order; perm[i] = input index of construction leg i.
LabelingCertificate relabel(const Signature& input, const LabelingCertificate& c, const std::vector<int>& perm)
{
    EdgeLabeling f(input.size());
    Params p = c.params;
    for (size_t i = 0; i < perm.size(); ++i) {
        f[perm[i]] = c.labeling[i];
        p["perm_" + std::to_string(i + 1)] = perm[i] + 1;
    }
    LabelingCertificate out = make_certificate(input, std::move(f), c.theorem_id, std::move(p), c.claimed_color_count);
    out.claimed_colors = c.claimed_colors;
    return out;
}

// Match construction legs to input indices by length, in order.
std::vector<int> match_legs(const Signature& input, const Signature& built)
{
    std::vector<int> perm;
    std::vector<bool> used(input.size(), false);
    for (int len : built) {
        for (size_t j = 0; j < input.size(); ++j) {
            if (!used[j] && input[j] == len) {
                used[j] = true;
                perm.push_back(static_cast<int>(j));
                break;
            }
        }
    }
    return perm;
}

bool try_attempt(const std::string& name, const Attempt& a, const Signature& input,
                 std::optional<LabelingCertificate>& out, std::vector<std::string>& misses)
{
    try {
        LabelingCertificate c = a();
        Signature built;
        for (const auto& l : c.labeling)
            built.push_back(static_cast<int>(l.size()));
        std::vector<int> perm = match_legs(input, built);
        if (perm.size() != input.size()) {
            misses.push_back(name + ": leg lengths do not match");
            return false;
        }
        out = relabel(input, c, perm);
        return true;
    } catch (const DomainError& ex) {
        misses.push_back(name + ": " + ex.what());
    } catch (const ConstructionError& ex) {
        misses.push_back(name + ": " + ex.what());
    }
    return false;
}

std::optional<LabelingCertificate> from_appendix(const Signature& sig)
{
    int n = 0, m = 0;
    for (int y : sig) {
        if (y == 2)
            ++n;
        else if (y == 3)
            ++m;
        else
            return std::nullopt;
    }
    for (const auto& c : appendix_store())
        if (c.params.at("n") == n && c.params.at("m") == m) {
            Signature built;
            for (const auto& l : c.labeling)
                built.push_back(static_cast<int>(l.size()));
            return relabel(sig, c, match_legs(sig, built));
        }
    return std::nullopt;
}

std::optional<LabelingCertificate> from_all_even(const Signature& sig, std::vector<std::string>& misses)
{
    int d = static_cast<int>(sig.size());
    int odd = 0;
    for (int y : sig)
        odd += y % 2;
    if (odd > 1)
        return std::nullopt;
    for (int y : sig)
        if (y < 2)
            return std::nullopt;
    long budget = 400000;
    for (int last = 0; last < d; ++last) {
        if (odd == 1 && sig[last] % 2 == 0)
            continue;
        if (last > 0 && std::find(sig.begin(), sig.begin() + last, sig[last]) != sig.begin() + last)
            continue;
        std::vector<int> rest;
        for (int i = 0; i < d; ++i)
            if (i != last)
                rest.push_back(i);
        std::sort(rest.begin(), rest.end(), [&](int a, int b) { return sig[a] < sig[b] || (sig[a] == sig[b] && a < b); });
        // enumerate distinct length orders of the first d-1 legs
        std::vector<int> lens;
        for (int i : rest)
            lens.push_back(sig[i]);
        do {
            if (--budget < 0) {
                misses.push_back("all_even: ordering budget exhausted");
                return std::nullopt;
            }
            Signature order = lens;
            order.push_back(sig[last]);
            long lhs = 0, total = 0;
            for (int i = 1; i <= d - 1; ++i)
                lhs += static_cast<long>(d - i) * order[i - 1];
            int bump = odd;
            Signature y = order;
            y.back() -= bump;
            total = std::accumulate(y.begin(), y.end(), 0L);
            long suffix = total;
            bool hit = false;
            for (int k = 0; k <= d - 1 && !hit; ++k) {
                if (k > 0)
                    suffix -= y[k - 1];
                if (k >= (bump ? 1 : 0) && lhs == suffix)
                    hit = true;
            }
            if (!hit)
                continue;
            std::optional<LabelingCertificate> out;
            if (try_attempt("all_even", [&] { return construct_all_even(order, std::nullopt, bump); }, sig, out, misses))
                return out;
        } while (std::next_permutation(lens.begin(), lens.end()));
    }
    misses.push_back("all_even: no leg order satisfies the leg condition");
    return std::nullopt;
}

struct OddRule {
    const char* name;
    std::function<std::optional<Attempt>(int, int, int)> match;  // legs (a, b, c) in this order
};

std::vector<OddRule> odd_rules()
{
    auto half = [](int v) { return (v - 1) / 2; };
    return {
        {"odd_3k",
         [=](int a, int b, int c) -> std::optional<Attempt> {
             int n = half(a), m = half(b), r = c - n - m - 1;
             if (n < 1 || m < 1 || r < 3 || r % 3)
                 return std::nullopt;
             int k = r / 3;
             if ((n + m + k) % 2 || 3 * k > n + m)
                 return std::nullopt;
             return Attempt([=] { return construct_odd_3k(n, m, k); });
         }},
        {"odd_nm1",
         [=](int a, int b, int c) -> std::optional<Attempt> {
             int n = half(a), m = half(b);
             if (c != n + m + 1 || n < 1 || m < 2 || (n + m) % 2 || n + m < 4)
                 return std::nullopt;
             return Attempt([=] { return construct_odd_nm1(n, m); });
         }},
        {"equal_odd",
         [=](int a, int b, int c) -> std::optional<Attempt> {
             if (b != c || b < 3)
                 return std::nullopt;
             return Attempt([=] { return construct_equal_odd(half(a), half(b)); });
         }},
        {"odd_shifted",
         [=](int a, int b, int c) -> std::optional<Attempt> {
             int n = half(a), m = half(b);
             if (m <= n || c != 4 * (m - n) - 1)
                 return std::nullopt;
             return Attempt([=] { return construct_odd_shifted(n, m); });
         }},
        {"consecutive_odd",
         [=](int a, int b, int c) -> std::optional<Attempt> {
             int m = half(a);
             if (m < 4 || b != 2 * m + 3 || c != 4 * m - 3)
                 return std::nullopt;
             return Attempt([=] { return construct_consecutive_odd(m); });
         }},
        {"odd_m11",
         [=](int a, int b, int c) -> std::optional<Attempt> {
             int m = half(a);
             if (m < 2 || b != 2 * m + 11 || c != 4 * m + 5)
                 return std::nullopt;
             return Attempt([=] { return construct_odd_m11(m); });
         }},
        {"leg3",
         [=](int a, int b, int c) -> std::optional<Attempt> {
             if (a != 3 || c < b)
                 return std::nullopt;
             int m = half(b), h = (c - b) / 2;
             return Attempt([=] { return construct_leg3(h, m); });
         }},
        {"leg5",
         [=](int a, int b, int c) -> std::optional<Attempt> {
             if (a != 5 || half(c) < 3)
                 return std::nullopt;
             return Attempt([=] { return construct_leg5(half(b), half(c)); });
         }},
        {"leg7",
         [=](int a, int b, int c) -> std::optional<Attempt> {
             if (a != 7)
                 return std::nullopt;
             return Attempt([=] { return construct_leg7(half(b), half(c)); });
         }},
        {"9_11",
         [=](int a, int b, int c) -> std::optional<Attempt> {
             if (a != 9 || b != 11 || half(c) < 2)
                 return std::nullopt;
             return Attempt([=] { return construct_9_11(half(c)); });
         }},
        {"13",
         [=](int a, int b, int c) -> std::optional<Attempt> {
             if (a != 13 || half(b) < 2 || half(c) < 2)
                 return std::nullopt;
             return Attempt([=] { return construct_13(half(b), half(c)); });
         }},
    };
}

std::optional<LabelingCertificate> from_three_legs(const Signature& sig, std::vector<std::string>& misses)
{
    std::array<int, 3> idx{0, 1, 2};
    int odd = sig[0] % 2 + sig[1] % 2 + sig[2] % 2;
    std::optional<LabelingCertificate> out;
    if (odd == 0) {
        Signature s = canonical_signature(sig);
        if (try_attempt("three_even", [&] { return construct_three_even(s[0] / 2, s[1] / 2, s[2] / 2); }, sig, out,
                        misses))
            return out;
        return std::nullopt;
    }
    if (odd == 3) {
        for (const OddRule& rule : odd_rules()) {
            std::sort(idx.begin(), idx.end());
            do {
                auto a = rule.match(sig[idx[0]], sig[idx[1]], sig[idx[2]]);
                if (a && try_attempt(rule.name, *a, sig, out, misses))
                    return out;
            } while (std::next_permutation(idx.begin(), idx.end()));
        }
        misses.push_back("all-odd three-leg families: no shape matched");
        return std::nullopt;
    }
    std::sort(idx.begin(), idx.end());
    do {
        int a = sig[idx[0]], b = sig[idx[1]], c = sig[idx[2]];
        if (a % 2 == 0 && b % 2 == 1 && b >= 3)
            if (try_attempt("mixed_parity", [&] { return construct_mixed_parity(a, b, c); }, sig, out, misses))
                return out;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return std::nullopt;
}

}  // namespace

DispatchResult dispatch(const Signature& sig)
{
    validate_signature(sig);
    DispatchResult res;
    if (auto c = from_appendix(sig)) {
        res.certificate = c;
        return res;
    }
    bool unit = std::count(sig.begin(), sig.end(), 1) > 0;
    if (unit && sig.size() >= 3) {
        std::optional<LabelingCertificate> out;
        if (try_attempt("leg1", [&] { return construct_leg1(sig); }, sig, out, res.near_misses)) {
            res.certificate = out;
            return res;
        }
    }
    if (!unit) {
        if (auto c = from_all_even(sig, res.near_misses)) {
            res.certificate = c;
            return res;
        }
        if (sig.size() == 3)
            if (auto c = from_three_legs(sig, res.near_misses)) {
                res.certificate = c;
                return res;
            }
    }
    if (res.near_misses.empty())
        res.near_misses.push_back("no construction covers this signature shape");
    return res;
}

}  // namespace spider
