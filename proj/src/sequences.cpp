#include "spider/sequences.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace spider {

std::set<int> valid_gaps(int N)
{
    if (N < 2)
        throw std::invalid_argument("N must be at least 2");
    if (N == 2)
        return {1};
    std::set<int> out{N - 1};
    if (N % 2 == 0) {
        out.insert(1);
        for (int g = 2; g <= N - 2; g += 2)
            out.insert(g);
    } else {
        for (int g = 1; g <= N - 2; g += 2)
            out.insert(g);
    }
    return out;
}

std::vector<int> base_cycle(int N)
{
    if (N < 2)
        throw std::invalid_argument("N must be at least 2");
    if (N == 2)
        return {1, 2};
    int k = N / 4;
    std::vector<int> a;
    auto run = [&](int len, auto odd, auto even) {
        for (int i = 1; i <= len; ++i)
            a.push_back(i % 2 ? odd(i) : even(i));
    };
    switch (N % 4) {
    case 0:
        run(2 * k, [&](int i) { return 2 * k - i + 1; }, [&](int i) { return 2 * k + i; });
        run(2 * k, [&](int i) { return i; }, [&](int i) { return 4 * k - i + 1; });
        break;
    case 1:
        run(2 * k, [&](int i) { return 2 * k + 1 + i; }, [&](int i) { return 2 * k + 1 - i; });
        run(2 * k + 1, [&](int i) { return 4 * k + 2 - i; }, [&](int i) { return i; });
        break;
    case 2:
        run(2 * k + 1, [&](int i) { return 2 * k + 2 - i; }, [&](int i) { return 2 * k + 1 + i; });
        run(2 * k + 1, [&](int i) { return 4 * k + 3 - i; }, [&](int i) { return i; });
        break;
    default:
        run(2 * k + 1, [&](int i) { return 2 * k + 2 - i; }, [&](int i) { return 2 * k + 2 + i; });
        run(2 * k + 2, [&](int i) { return 4 * k + 4 - i; }, [&](int i) { return i; });
        break;
    }
    return a;
}

CircularPermutation circular_permutation(int N, int r)
{
    auto gaps = valid_gaps(N);
    if (!gaps.count(r))
        throw std::invalid_argument("gap " + std::to_string(r) + " not available for N = " + std::to_string(N));
    auto a = base_cycle(N);
    // the closing gap needs no rotation
    if (std::abs(a.back() - a.front()) == r)
        return {a, 0, r};
    for (int j = 0; j < N; ++j) {
        if (std::abs(a[j] - a[(j + 1) % N]) == r) {
            std::rotate(a.begin(), a.begin() + (j + 1) % N, a.end());
            return {a, 0, r};
        }
    }
    throw std::logic_error("base cycle lacks gap " + std::to_string(r));
}

CircularPermutation offset_sequence(int N, int r, int a)
{
    if (a < 1)
        throw std::invalid_argument("offset must be at least 1");
    auto c = circular_permutation(N, r);
    for (int& t : c.terms)
        t += a;
    c.a = a;
    return c;
}

std::vector<int> oriented_sequence(int N, int r, int a, bool increasing)
{
    auto s = offset_sequence(N, r, a).terms;
    if ((s.back() > s.front()) != increasing)
        std::reverse(s.begin(), s.end());
    return s;
}

PathFourLabeling label_path_4a(int n, int a)
{
    if (n < 2)
        throw std::invalid_argument("path needs at least 2 edges");
    if (a < 2)
        throw std::invalid_argument("offset must be at least 2");
    PathFourLabeling p;
    p.a = a;
    int k = n / 4;
    for (int i = 1; i <= n; ++i) {
        int v;
        if (n % 2 == 0) {
            int h = n / 2;
            v = i % 2 ? a + 2 * h - i - 1 : a + i - 1;
        } else if (n % 4 == 1) {
            if (i % 2)
                v = i <= 2 * k - 1 ? a + 4 * k - i : i == 2 * k + 1 ? a + 2 * k : a + i - 1;
            else
                v = i <= 2 * k ? a + i - 1 : a + 4 * k - i;
        } else {
            if (i % 2)
                v = i <= 2 * k + 1 ? a + 4 * k + 2 - i : a + i - 1;
            else
                v = i <= 2 * k ? a + i - 1 : a + 4 * k + 2 - i;
        }
        p.labels.push_back(v);
    }
    p.endpoint_colors = {p.labels.front(), p.labels.back()};
    for (int i = 1; i < n; ++i)
        p.interior_colors.insert(p.labels[i - 1] + p.labels[i]);
    return p;
}

}  // namespace spider
