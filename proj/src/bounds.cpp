#include "spider/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "spider/constructions.hpp"

namespace spider {

int pendant_lower_bound(const SpiderGraph& g)
{
    return g.pendant_count() + 1;
}

bool maxdeg_forces_plus2(const SpiderGraph& g)
{
    std::vector<int> deg = g.degrees();
    int top = *std::max_element(deg.begin(), deg.end());
    if (std::count(deg.begin(), deg.end(), top) != 1)
        return false;
    int hub = static_cast<int>(std::find(deg.begin(), deg.end(), top) - deg.begin());
    int second = 0;
    for (size_t v = 0; v < deg.size(); ++v)
        if (static_cast<int>(v) != hub)
            second = std::max(second, deg[v]);
    for (const Edge& e : g.edges()) {
        int other = e.tail == hub ? e.head : e.head == hub ? e.tail : -1;
        if (other >= 0 && deg[other] == 1)
            return false;
    }
    if (g.pendant_count() < 1 || second >= top)
        return false;
    long lhs = static_cast<long>(top) * (top + 1);
    long rhs = static_cast<long>(second) * (2L * g.q - second + 1);
    return lhs > rhs;
}

bool legnum_forces_plus2(const Signature& sig)
{
    validate_signature(sig);
    for (int y : sig)
        if (y < 2)
            throw std::invalid_argument("leg count criterion needs every leg of length at least 2");
    long d = static_cast<long>(sig.size());
    return d * (d + 1) > 2L * (2L * size_of(sig) - 1);
}

const PairSet& set_A()
{
    static const PairSet a = [] {
        PairSet s;
        auto add = [&](int n, int lo, int hi) {
            for (int m = lo; m <= hi; ++m)
                s.insert({n, m});
        };
        add(0, 3, 10);
        add(1, 2, 9);
        add(2, 1, 8);
        add(3, 1, 6);
        add(4, 1, 5);
        add(5, 1, 3);
        add(6, 1, 1);
        return s;
    }();
    return a;
}

const PairSet& set_B()
{
    static const PairSet b = [] {
        PairSet s;
        auto add = [&](int n, int lo, int hi) {
            for (int m = lo; m <= hi; ++m)
                s.insert({n, m});
        };
        add(0, 3, 9);
        add(1, 2, 7);
        add(2, 1, 6);
        add(3, 1, 4);
        add(4, 1, 3);
        add(5, 1, 2);
        add(6, 1, 1);
        return s;
    }();
    return b;
}

const PairSet& conjecture_exceptions()
{
    static const PairSet e = [] {
        PairSet s{{4, 0}, {5, 0}, {6, 0}};
        for (const auto& p : set_A())
            if (!set_B().count(p))
                s.insert(p);
        return s;
    }();
    return e;
}

int sp23_classify(int n, int m)
{
    if (n < 0 || m < 0 || n + m < 3)
        throw std::invalid_argument("classification needs n, m >= 0 and n + m >= 3");
    int d = n + m;
    if (m == 0)
        return d == 3 ? d + 1 : d + 2;
    return set_B().count({n, m}) ? d + 1 : d + 2;
}

IntInterval cond1_interval(int n, int m)
{
    int s = n + m;
    return {s * (s + 1) / 2 - (2 * n + 3 * m), 2 * n + 3 * m - 1};
}

ChiLaBounds bounds(const Signature& sig)
{
    validate_signature(sig);
    int d = static_cast<int>(sig.size());
    if (d < 3)
        throw std::invalid_argument("bounds need at least 3 legs");
    SpiderGraph g = build_spider(sig);
    ChiLaBounds b;
    b.lower = pendant_lower_bound(g);
    b.upper = d + 2;
    b.provenance.push_back({"pendant_bound", "lower " + std::to_string(b.lower)});
    b.provenance.push_back({"spider_two_sided", "upper " + std::to_string(d + 2)});

    auto settle = [&](int v, const std::string& rule) {
        if (v < b.lower || v > b.upper)
            throw std::logic_error("rule " + rule + " contradicts the bounds already derived for Sp(" +
                                   format_signature(sig) + ")");
        b.lower = b.upper = v;
        b.exact = v;
    };

    if (maxdeg_forces_plus2(g)) {
        b.provenance.push_back({"max_degree", "lower " + std::to_string(d + 2)});
        settle(d + 2, "max_degree");
    }
    bool long_legs = std::all_of(sig.begin(), sig.end(), [](int y) { return y >= 2; });
    if (long_legs && legnum_forces_plus2(sig)) {
        b.provenance.push_back({"leg_count", "exact " + std::to_string(d + 2)});
        settle(d + 2, "leg_count");
    }
    bool only23 = std::all_of(sig.begin(), sig.end(), [](int y) { return y == 2 || y == 3; });
    if (only23) {
        int n = static_cast<int>(std::count(sig.begin(), sig.end(), 2));
        int v = sp23_classify(n, d - n);
        b.provenance.push_back({"legs_2_3_classification", "exact " + std::to_string(v)});
        settle(v, "legs_2_3_classification");
    }
    if (!b.exact || *b.exact == d + 1) {
        DispatchResult r = dispatch(sig);
        if (r.certificate && r.certificate->claimed_color_count == d + 1) {
            b.provenance.push_back({"construction:" + r.certificate->theorem_id, "upper " + std::to_string(d + 1)});
            settle(d + 1, "construction:" + r.certificate->theorem_id);
        }
    }
    return b;
}

}  // namespace spider
