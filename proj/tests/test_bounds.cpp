#include <doctest.h>

#include <stdexcept>

#include "spider/bounds.hpp"

using namespace spider;

TEST_CASE("pendant bound")
{
    CHECK(pendant_lower_bound(build_spider({2, 2, 3})) == 4);
    CHECK(pendant_lower_bound(build_spider({1, 1, 1, 1, 1})) == 6);
    CHECK(pendant_lower_bound(build_spider({2, 2, 2, 2})) == 5);
}

TEST_CASE("max degree criterion")
{
    CHECK(maxdeg_forces_plus2(build_spider({2, 2, 2, 2, 2, 2, 2})));
    CHECK_FALSE(maxdeg_forces_plus2(build_spider({2, 2, 3})));
    CHECK_FALSE(maxdeg_forces_plus2(build_spider({1, 2, 2, 2, 2, 2, 2, 2})));
    CHECK_FALSE(maxdeg_forces_plus2(build_spider({1, 1, 1})));
}

TEST_CASE("leg count criterion")
{
    CHECK(legnum_forces_plus2({2, 2, 2, 2, 2, 2, 2}));
    CHECK_FALSE(legnum_forces_plus2({2, 2, 3}));
    CHECK_FALSE(legnum_forces_plus2(Signature(10, 3)));
    CHECK_THROWS_AS(legnum_forces_plus2({1, 2, 2}), std::invalid_argument);
}

TEST_CASE("legs of length 2 and 3")
{
    CHECK(sp23_classify(0, 10) == 12);
    CHECK(sp23_classify(1, 8) == 11);
    CHECK(sp23_classify(3, 3) == 7);
    CHECK(sp23_classify(3, 0) == 4);
    CHECK(sp23_classify(4, 0) == 6);
    CHECK(sp23_classify(0, 11) == 13);
    CHECK_THROWS_AS(sp23_classify(1, 1), std::invalid_argument);
}

TEST_CASE("sets A and B against the size inequality")
{
    PairSet recomputed;
    for (int n = 0; n <= 6; ++n)
        for (int m = 1; m <= 10; ++m)
            if (n + m >= 3 && (n + m) * (n + m + 1) <= 2 * (4 * n + 6 * m - 1))
                recomputed.insert({n, m});
    CHECK(recomputed == set_A());
    for (const auto& p : set_B())
        CHECK(set_A().count(p));
    PairSet diff;
    for (const auto& p : set_A())
        if (!set_B().count(p))
            diff.insert(p);
    CHECK(diff == PairSet{{0, 10}, {1, 8}, {1, 9}, {2, 7}, {2, 8}, {3, 5}, {3, 6}, {4, 4}, {4, 5}, {5, 3}});
    CHECK(conjecture_exceptions().size() == 13);
}

TEST_CASE("classification agrees with the leg count criterion")
{
    for (int n = 0; n <= 12; ++n)
        for (int m = 1; m <= 14; ++m) {
            if (n + m < 3)
                continue;
            Signature s(n, 2);
            s.insert(s.end(), m, 3);
            bool forced = legnum_forces_plus2(s);
            CHECK(forced == !set_A().count({n, m}));
            if (forced)
                CHECK(sp23_classify(n, m) == n + m + 2);
        }
}

TEST_CASE("feasibility interval")
{
    auto i = cond1_interval(0, 10);
    CHECK(i.lo == 25);
    CHECK(i.hi == 29);
    i = cond1_interval(1, 8);
    CHECK(i.lo == 19);
    CHECK(i.hi == 25);
    i = cond1_interval(2, 8);
    CHECK(i.lo == 27);
    CHECK(i.hi == 27);
    for (const auto& [n, m] : set_A())
        CHECK_FALSE(cond1_interval(n, m).empty());
}

TEST_CASE("combined bounds")
{
    ChiLaBounds a = bounds({2, 2, 3});
    CHECK(a.lower == 4);
    CHECK(a.exact == 4);

    ChiLaBounds b = bounds({2, 2, 2, 2, 2});
    CHECK(b.exact == 7);

    ChiLaBounds c = bounds({2, 3, 3, 3});
    CHECK(c.lower == 5);
    CHECK(c.exact == 5);
    bool upper_rule = false, stored = false;
    for (const auto& p : c.provenance) {
        upper_rule = upper_rule || p.contribution == "upper 6";
        stored = stored || p.rule == "construction:appendix";
    }
    CHECK(upper_rule);
    CHECK(stored);

    CHECK(bounds({2, 2, 2, 2, 2, 2, 2}).exact == 9);
    CHECK_FALSE(bounds({9, 15, 19}).exact.has_value());
    CHECK_THROWS_AS(bounds({2, 3}), std::invalid_argument);
}

TEST_CASE("bounds invariants over small signatures")
{
    for (int a = 2; a <= 7; ++a)
        for (int b = a; b <= 7; ++b)
            for (int c = b; c <= 7; ++c)
                for (int e : {0, 2, 3, 5}) {
                    Signature s{a, b, c};
                    if (e)
                        s.push_back(e);
                    int d = static_cast<int>(s.size());
                    ChiLaBounds r = bounds(s);
                    CHECK(r.lower <= r.upper);
                    CHECK((r.lower == d + 1 || r.lower == d + 2));
                    if (r.exact) {
                        CHECK(r.lower == *r.exact);
                        CHECK(r.upper == *r.exact);
                    } else {
                        CHECK(r.upper == d + 2);
                    }
                }
}
