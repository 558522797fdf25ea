#include "spider/sweep.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "spider/certificate_io.hpp"
#include "spider/constructions.hpp"
#include "spider/verifier.hpp"

namespace spider {

Grid parse_grid(const std::string& text)
{
    Grid g;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("grid item '" + item + "' is not name=lo..hi");
        std::string name = item.substr(0, eq), range = item.substr(eq + 1);
        try {
            size_t used = 0;
            auto dots = range.find("..");
            int lo = std::stoi(range.substr(0, dots), &used);
            if (used != (dots == std::string::npos ? range.size() : dots))
                throw std::invalid_argument(range);
            int hi = lo;
            if (dots != std::string::npos) {
                std::string rest = range.substr(dots + 2);
                hi = std::stoi(rest, &used);
                if (used != rest.size())
                    throw std::invalid_argument(range);
            }
            if (hi < lo)
                throw std::invalid_argument(range);
            g[name] = {lo, hi};
        } catch (const std::logic_error&) {
            throw std::invalid_argument("grid range '" + range + "' for " + name + " is not lo..hi");
        }
    }
    if (g.empty())
        throw std::invalid_argument("empty grid");
    return g;
}

namespace {

using Values = std::map<std::string, int>;
using Maker = std::function<std::optional<LabelingCertificate>(const Values&)>;

struct Entry {
    SweepConstructor info;
    Maker make;
};

const std::vector<Entry>& registry()
{
    static const std::vector<Entry> r = [] {
        std::vector<Entry> e;
        auto add = [&](std::string name, std::vector<std::string> params, Maker m) {
            e.push_back({{std::move(name), std::move(params)}, std::move(m)});
        };
        add("leg1", {"a", "b", "t"}, [](const Values& v) {
            Signature s{v.at("a"), v.at("b")};
            s.insert(s.end(), v.at("t"), 1);
            return construct_leg1(s);
        });
        add("all_even", {"a", "b", "c", "k", "bump"}, [](const Values& v) -> std::optional<LabelingCertificate> {
            Signature y{2 * v.at("a"), 2 * v.at("b"), 2 * v.at("c")};
            int k = v.at("k");
            if (k < 0 || k > 3)
                throw DomainError("k must lie in [0,3] for four legs");
            long lhs = 3L * y[0] + 2L * y[1] + y[2], tail = 0;
            for (int i = k + 1; i <= 3; ++i)
                tail += y[i - 1];
            long last = lhs - tail;
            if (last < 2)
                throw DomainError("forced last leg is too short");
            y.push_back(static_cast<int>(last) + v.at("bump"));
            return construct_all_even(y, k, v.at("bump"));
        });
        add("2el", {"m", "k"}, [](const Values& v) { return construct_2el(v.at("m"), v.at("k")); });
        add("eol", {"n", "m", "l"}, [](const Values& v) { return construct_eol(v.at("n"), v.at("m"), v.at("l")); });
        add("oel", {"n", "m", "l"}, [](const Values& v) { return construct_oel(v.at("n"), v.at("m"), v.at("l")); });
        add("eolsmall", {"n", "m", "l"},
            [](const Values& v) { return construct_eolsmall(v.at("n"), v.at("m"), v.at("l")); });
        add("mixed_parity", {"a", "b", "c"},
            [](const Values& v) { return construct_mixed_parity(v.at("a"), v.at("b"), v.at("c")); });
        add("three_even", {"n", "m", "h"},
            [](const Values& v) { return construct_three_even(v.at("n"), v.at("m"), v.at("h")); });
        add("odd_3k", {"n", "m", "k"}, [](const Values& v) { return construct_odd_3k(v.at("n"), v.at("m"), v.at("k")); });
        add("odd_nm1", {"n", "m"}, [](const Values& v) { return construct_odd_nm1(v.at("n"), v.at("m")); });
        add("equal_odd", {"n", "m"}, [](const Values& v) { return construct_equal_odd(v.at("n"), v.at("m")); });
        add("odd_shifted", {"n", "m"}, [](const Values& v) { return construct_odd_shifted(v.at("n"), v.at("m")); });
        add("consecutive_odd", {"m"}, [](const Values& v) { return construct_consecutive_odd(v.at("m")); });
        add("odd_m11", {"m"}, [](const Values& v) { return construct_odd_m11(v.at("m")); });
        add("leg3", {"h", "m"}, [](const Values& v) { return construct_leg3(v.at("h"), v.at("m")); });
        add("leg5", {"m", "h"}, [](const Values& v) { return construct_leg5(v.at("m"), v.at("h")); });
        add("leg7", {"m", "h"}, [](const Values& v) { return construct_leg7(v.at("m"), v.at("h")); });
        add("9_11", {"m"}, [](const Values& v) { return construct_9_11(v.at("m")); });
        add("13", {"m", "n"}, [](const Values& v) { return construct_13(v.at("m"), v.at("n")); });
        add("dispatch", {"a", "b", "c"}, [](const Values& v) {
            return dispatch(Signature{v.at("a"), v.at("b"), v.at("c")}).certificate;
        });
        return e;
    }();
    return r;
}

// Empty string when the certificate passes every check.
std::string check(const LabelingCertificate& c)
{
    VerificationReport rep = verify_certificate(c);
    if (!rep.ok())
        return rep.violation->message;
    if (rep.color_count != c.claimed_color_count)
        return "color count differs from the claim";
    nlohmann::json doc = certificate_to_json(c);
    LabelingCertificate back = certificate_from_json(nlohmann::json::parse(doc.dump()));
    if (back.signature != c.signature || back.labeling != c.labeling || back.theorem_id != c.theorem_id ||
        back.params != c.params || back.claimed_color_count != c.claimed_color_count ||
        back.claimed_colors != c.claimed_colors)
        return "JSON round trip changed the certificate";
    if (!embedded_verification_matches(doc))
        return "embedded verification differs from recomputation";
    return {};
}

}  // namespace

const std::vector<SweepConstructor>& sweep_constructors()
{
    static const std::vector<SweepConstructor> names = [] {
        std::vector<SweepConstructor> out;
        for (const Entry& e : registry())
            out.push_back(e.info);
        return out;
    }();
    return names;
}

SweepReport run_sweep(const std::string& constructor, const Grid& grid, int max_q)
{
    const Entry* entry = nullptr;
    for (const Entry& e : registry())
        if (e.info.name == constructor)
            entry = &e;
    if (!entry)
        throw std::invalid_argument("unknown constructor '" + constructor + "'");
    for (const auto& p : entry->info.params)
        if (!grid.count(p))
            throw std::invalid_argument("grid lacks parameter '" + p + "' of " + constructor);
    for (const auto& [name, range] : grid) {
        (void)range;
        if (std::find(entry->info.params.begin(), entry->info.params.end(), name) == entry->info.params.end())
            throw std::invalid_argument(constructor + " has no parameter '" + name + "'");
    }

    SweepReport rep;
    rep.constructor = constructor;
    const auto& names = entry->info.params;
    Values v;
    for (const auto& p : names)
        v[p] = grid.at(p).first;
    for (;;) {
        std::optional<LabelingCertificate> cert;
        try {
            cert = entry->make(v);
        } catch (const DomainError&) {
        } catch (const ConstructionError& ex) {
            rep.failures = 1;
            rep.first_failure = ex.what();
            return rep;
        }
        if (!cert || size_of(cert->signature) > max_q) {
            ++rep.out_of_domain;
        } else {
            ++rep.instances;
            std::string why = check(*cert);
            if (!why.empty()) {
                rep.failures = 1;
                rep.first_failure = constructor + " Sp(" + format_signature(cert->signature) + "): " + why;
                return rep;
            }
        }
        size_t i = 0;
        for (; i < names.size(); ++i) {
            if (++v[names[i]] <= grid.at(names[i]).second)
                break;
            v[names[i]] = grid.at(names[i]).first;
        }
        if (i == names.size())
            break;
    }
    return rep;
}

}  // namespace spider
