#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "spider/sequences.hpp"

using namespace spider;

namespace {

bool is_range(std::vector<int> v, int lo)
{
    std::sort(v.begin(), v.end());
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != lo + static_cast<int>(i))
            return false;
    return true;
}

bool is_rotation(const std::vector<int>& a, const std::vector<int>& b)
{
    if (a.size() != b.size())
        return false;
    std::vector<int> twice = b;
    twice.insert(twice.end(), b.begin(), b.end());
    return std::search(twice.begin(), twice.end(), a.begin(), a.end()) != twice.end();
}

// Path colors for labels on x_1 .. x_{n+1}.
std::vector<int> path_colors(const std::vector<int>& f)
{
    std::vector<int> c(f.size() + 1, 0);
    for (size_t i = 0; i < f.size(); ++i) {
        c[i] += f[i];
        c[i + 1] += f[i];
    }
    return c;
}

}  // namespace

TEST_CASE("valid gap sets")
{
    CHECK(valid_gaps(2) == std::set<int>{1});
    CHECK(valid_gaps(4) == std::set<int>{1, 2, 3});
    CHECK(valid_gaps(7) == std::set<int>{1, 3, 5, 6});
    CHECK(valid_gaps(8) == std::set<int>{1, 2, 4, 6, 7});
    CHECK_THROWS_AS(valid_gaps(1), std::invalid_argument);
}

TEST_CASE("small circular permutations")
{
    CHECK(base_cycle(4) == std::vector<int>{2, 4, 1, 3});
    CircularPermutation two = circular_permutation(2, 1);
    CHECK(two.terms == std::vector<int>{1, 2});
    CircularPermutation five = circular_permutation(5, 3);
    CHECK(is_range(five.terms, 1));
    CHECK(std::abs(five.terms.back() - five.terms.front()) == 3);
    CHECK_THROWS_AS(circular_permutation(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(circular_permutation(7, 2), std::invalid_argument);
}

TEST_CASE("offset sequences")
{
    CHECK(offset_sequence(2, 1, 5).terms == std::vector<int>{6, 7});
    CircularPermutation s = offset_sequence(4, 3, 10);
    CHECK(is_range(s.terms, 11));
    CHECK(std::abs(s.terms.back() - s.terms.front()) == 3);
    for (size_t i = 0; i + 1 < s.terms.size(); ++i) {
        int sum = s.terms[i] + s.terms[i + 1];
        CHECK(sum >= 24);
        CHECK(sum <= 26);
    }
    CircularPermutation t = offset_sequence(7, 5, 3);
    CHECK(is_range(t.terms, 4));
    CHECK_THROWS_AS(offset_sequence(4, 3, 0), std::invalid_argument);
    std::vector<int> up = oriented_sequence(9, 5, 4, true), down = oriented_sequence(9, 5, 4, false);
    CHECK(up.back() > up.front());
    CHECK(down.back() < down.front());
}

TEST_CASE("circular permutation properties for N in [2,200]")
{
    for (int N = 2; N <= 200; ++N) {
        std::vector<int> base = base_cycle(N);
        REQUIRE(is_range(base, 1));
        std::set<int> gaps;
        for (int i = 0; i < N; ++i) {
            int x = base[i], y = base[(i + 1) % N];
            int sum = x + y;
            CHECK(sum >= N);
            CHECK(sum <= N + 2);
            gaps.insert(std::abs(x - y));
        }
        CHECK(gaps == valid_gaps(N));
        for (int r : valid_gaps(N)) {
            CircularPermutation c = circular_permutation(N, r);
            CHECK(c.r == r);
            CHECK(c.a == 0);
            CHECK(std::abs(c.terms.back() - c.terms.front()) == r);
            CHECK(is_rotation(c.terms, base));
            for (int a : {1, 5, 37}) {
                CircularPermutation o = offset_sequence(N, r, a);
                REQUIRE(is_range(o.terms, a + 1));
                CHECK(std::abs(o.terms.back() - o.terms.front()) == r);
                bool sums_ok = true;
                for (int i = 0; i + 1 < N; ++i) {
                    int s = o.terms[i] + o.terms[i + 1];
                    sums_ok = sums_ok && s >= 2 * a + N && s <= 2 * a + N + 2;
                }
                CHECK(sums_ok);
                std::vector<int> back = o.terms;
                for (int& x : back)
                    x -= a;
                CHECK(is_rotation(back, base));
            }
        }
    }
}

TEST_CASE("path labeling examples")
{
    PathFourLabeling p = label_path_4a(2, 3);
    CHECK(p.labels == std::vector<int>{3, 4});
    CHECK(p.endpoint_colors == std::pair<int, int>{3, 4});
    CHECK(p.interior_colors == std::set<int>{7});

    PathFourLabeling five = label_path_4a(5, 2);
    CHECK(is_range(five.labels, 2));
    CHECK(five.endpoint_colors == std::pair<int, int>{5, 6});
    auto c = path_colors(five.labels);
    CHECK(c[1] == 8);
    CHECK(c[4] == 8);

    PathFourLabeling three = label_path_4a(3, 4);
    CHECK(is_range(three.labels, 4));
    CHECK(three.endpoint_colors == std::pair<int, int>{5, 6});
    CHECK(path_colors(three.labels)[2] == 10);

    CHECK_THROWS_AS(label_path_4a(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(label_path_4a(1, 4), std::invalid_argument);
}

TEST_CASE("path labeling contract for n in [2,200], a in [2,50]")
{
    for (int n = 2; n <= 200; ++n)
        for (int a = 2; a <= 50; ++a) {
            PathFourLabeling p = label_path_4a(n, a);
            REQUIRE(p.labels.size() == static_cast<size_t>(n));
            CHECK(is_range(p.labels, a));
            auto c = path_colors(p.labels);
            CHECK(c.front() == a + n - 2);
            CHECK(c.back() == a + n - 1);
            CHECK(p.endpoint_colors == std::pair<int, int>{a + n - 2, a + n - 1});
            std::set<int> inner(c.begin() + 1, c.end() - 1);
            CHECK(inner == p.interior_colors);
            for (int x : inner) {
                CHECK(x >= 2 * a + n - 3);
                CHECK(x <= 2 * a + n - 1);
            }
            bool adjacent_ok = true;
            for (size_t i = 0; i + 1 < c.size(); ++i)
                adjacent_ok = adjacent_ok && c[i] != c[i + 1];
            CHECK(adjacent_ok);
            CHECK(c[n - 1] == 2 * a + n - 1);
            if (n != 3)
                CHECK(c[1] == 2 * a + n - 1);
        }
}

TEST_CASE("exhaustive path search: at n = 3 no labeling puts 2a+n-1 on x_2")
{
    // every ordering of [a, a+n-1] meeting the endpoint and interior contract
    for (int n = 2; n <= 7; ++n)
        for (int a = 2; a <= 6; ++a) {
            std::vector<int> f(n);
            std::iota(f.begin(), f.end(), a);
            int meets = 0, meets_second = 0;
            do {
                auto c = path_colors(f);
                if (c.front() != a + n - 2 || c.back() != a + n - 1)
                    continue;
                bool ok = true;
                for (int i = 1; i < n; ++i)
                    ok = ok && c[i] >= 2 * a + n - 3 && c[i] <= 2 * a + n - 1;
                for (int i = 0; i < n; ++i)
                    ok = ok && c[i] != c[i + 1];
                if (!ok)
                    continue;
                ++meets;
                if (c[1] == 2 * a + n - 1 && c[n - 1] == 2 * a + n - 1)
                    ++meets_second;
            } while (std::next_permutation(f.begin(), f.end()));
            CHECK(meets > 0);
            if (n == 3)
                CHECK(meets_second == 0);
            else
                CHECK(meets_second > 0);
        }
}
