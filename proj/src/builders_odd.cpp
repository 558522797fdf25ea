#include <algorithm>
#include <string>

#include "builders.hpp"
#include "spider/constructions.hpp"

namespace spider::raw {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw DomainError(what);
}

// Labels i = from..to, choosing by parity of i.
template <class Odd, class Even>
void run(Leg& out, int from, int to, Odd odd, Even even)
{
    for (int i = from; i <= to; ++i)
        out.push_back(i % 2 ? odd(i) : even(i));
}

}  // namespace

EdgeLabeling odd_3k(int n, int m, int k, Params& p)
{
    require(n >= 1 && m >= 1 && k >= 1, "odd_3k needs n, m, k >= 1");
    require((n + m + k) % 2 == 0, "odd_3k needs n+m+k even");
    require(3 * k <= n + m, "odd_3k needs 3k <= n+m");
    p["n"] = n;
    p["m"] = m;
    p["k"] = k;
    if (std::min(n, m) == 1) {
        // Sp(3, 2s+1, 2s+2h+1) with the other leg pair; the leg-3 labeling covers it.
        int s = std::max(n, m);
        int c = n + m + 3 * k + 1;
        Params inner;
        EdgeLabeling L;
        int three = 0, other = 0, longer = 0;
        if (c >= 2 * s + 1) {
            L = leg3((c - 2 * s - 1) / 2, s, inner);
            three = 0, other = 1, longer = 2;
        } else {
            int t = (c - 1) / 2;
            L = leg3(s - t, t, inner);
            three = 0, other = 2, longer = 1;
        }
        p["via_leg3"] = 1;
        for (const auto& [key, v] : inner)
            p["leg3." + key] = v;
        // leg order of the theorem: (2n+1, 2m+1, n+m+3k+1)
        const Leg& short3 = L[three];
        const Leg& big = L[other];
        const Leg& third = L[longer];
        if (n == 1)
            return {short3, big, third};
        return {big, short3, third};
    }
    if (m <= k) {
        Params inner;
        auto L = odd_3k(m, n, k, inner);
        p["swapped"] = 1;
        return {L[1], L[0], L[2]};
    }
    int q = 3 * n + 3 * m + 3 * k + 3;
    Leg X{q, n + m + k, 2 * n + 2 * m + 2 * k + 1};
    run(X, 4, 2 * n + 1, [&](int i) { return n + m + k - (i - 3) / 2; },
        [&](int i) { return 2 * n + 2 * m + 2 * k + i / 2; });
    Leg Y;
    run(Y, 1, 2 * k + 1, [&](int i) { return q - 1 - i; }, [&](int i) { return i; });
    run(Y, 2 * k + 2, 2 * m + 1, [&](int i) { return 3 * n + 3 * m + k - (i - 2 * k - 3) / 2; },
        [&](int i) { return 2 * k + 1 + (i - 2 * k - 2) / 2; });
    Leg Z{q - 1};
    run(Z, 2, 2 * k + 1, [&](int i) { return q - i; }, [&](int i) { return i - 1; });
    run(Z, 2 * k + 2, n + m + 3 - k, [&](int i) { return 2 * n + 2 * m + 2 * k + 3 - i; },
        [&](int i) { return n + m + k + i - 1; });
    run(Z, 1, 4 * k - 2, [&](int j) { return 2 * n + 2 * m + 1 + (j + 1) / 2; },
        [&](int j) { return n + m + 3 * k - j / 2; });
    return {X, Y, Z};
}

EdgeLabeling odd_nm1(int n, int m, Params& p)
{
    require(n >= 1 && m >= 2, "odd_nm1 needs n >= 1, m >= 2");
    require((n + m) % 2 == 0 && n + m >= 4, "odd_nm1 needs n+m even and at least 4");
    p["n"] = n;
    p["m"] = m;
    int q = 3 * n + 3 * m + 3;
    Leg X{q - 1};
    run(X, 2, 2 * n + 1, [&](int i) { return q - (i + 3) / 2; }, [&](int i) { return i / 2; });
    Leg Y{q, n + m, 2 * n + 2 * m + 1};
    run(Y, 4, 2 * m + 1, [&](int i) { return n + m - (i - 3) / 2; }, [&](int i) { return 2 * n + 2 * m + i / 2; });
    Leg Z{q - 2};
    run(Z, 2, n + m + 1, [&](int i) { return 2 * n + 2 * m + 2 - i; }, [&](int i) { return n + m + i; });
    return {X, Y, Z};
}

EdgeLabeling equal_odd(int n, int m, Params& p)
{
    require(n >= 0 && m >= 1, "equal_odd needs n >= 0, m >= 1");
    p["n"] = n;
    p["m"] = m;
    int q = 2 * n + 4 * m + 3;
    Leg X, Y, Z{q};
    run(X, 1, 2 * n + 1, [&](int i) { return q - (i + 1) / 2; }, [&](int i) { return i / 2; });
    run(Y, 1, 2 * m + 1, [&](int i) { return n + (i + 1) / 2; }, [&](int i) { return q - n - 1 - i / 2; });
    run(Z, 2, 2 * m + 1, [&](int i) { return n + m + (i + 1) / 2; }, [&](int i) { return q - n - m - 1 - i / 2; });
    return {X, Y, Z};
}

EdgeLabeling odd_shifted(int n, int m, Params& p)
{
    require(n >= 0 && m > n, "odd_shifted needs m > n >= 0");
    p["n"] = n;
    p["m"] = m;
    Params inner;
    int base_n = m - n - 1;
    auto L = equal_odd(base_n, m, inner);
    p["base_n"] = base_n;
    const Leg& Y = L[1];
    int cut = static_cast<int>(Y.size()) - (2 * base_n + 2);
    Leg V = cat(L[0], Leg(Y.begin() + cut, Y.end()));
    Leg W(Y.begin(), Y.begin() + cut);
    return {W, L[2], V};
}

EdgeLabeling consecutive_odd(int m, Params& p)
{
    require(m >= 4, "consecutive_odd needs m >= 4");
    p["m"] = m;
    int q = 8 * m + 1;
    Leg x{q}, y, z;
    run(x, 2, 2 * m + 1, [&](int i) { return 2 * m + (i + 1) / 2; }, [&](int i) { return 6 * m - i / 2; });
    run(y, 1, 2 * m - 1, [&](int i) { return 8 * m - (i - 1) / 2; }, [&](int i) { return i / 2; });
    y = cat(y, {7 * m - 1, m + 1, 7 * m, m});
    run(z, 1, 2 * m - 4, [&](int i) { return 6 * m + (i + 1) / 2; }, [&](int i) { return 2 * m - i / 2; });
    run(z, 2 * m - 3, 4 * m - 7, [&](int i) { return 5 * m - 1 - (i - (2 * m - 3)) / 2; },
        [&](int i) { return 3 * m + 2 + (i - (2 * m - 2)) / 2; });
    z = cat(z, {4 * m, 2 * m + 1, 6 * m, 2 * m});
    return {x, y, z};
}

EdgeLabeling odd_m11(int m, Params& p)
{
    require(m >= 2, "odd_m11 needs m >= 2");
    p["m"] = m;
    // found by search; same color set as the closed form below
    if (m == 2)
        return {{32, 1, 31, 2, 30},
                {25, 8, 24, 9, 16, 17, 15, 18, 14, 11, 21, 12, 20, 13, 19},
                {33, 23, 10, 22, 3, 29, 4, 28, 5, 27, 6, 26, 7}};
    if (m == 3)
        return {{40, 1, 39, 2, 38, 3, 37},
                {41, 29, 12, 28, 13, 27, 4, 36, 5, 35, 6, 34, 7, 33, 8, 32, 9},
                {31, 10, 30, 11, 20, 21, 19, 22, 18, 23, 17, 14, 26, 15, 25, 16, 24}};
    int q = 8 * m + 17;
    Leg x{6 * m + 13, 2 * m + 4, 6 * m + 12, 2 * m + 5}, y, z{q};
    run(x, 5, 2 * m + 1, [&](int i) { return 4 * m + 8 - (i - 5) / 2; }, [&](int i) { return 4 * m + 9 + (i - 6) / 2; });
    run(y, 1, 2 * m - 1, [&](int i) { return q - 1 - (i - 1) / 2; }, [&](int i) { return i / 2; });
    run(y, 2 * m, 2 * m + 11, [&](int i) { return m + 5 - (i - 2 * m - 1) / 2; },
        [&](int i) { return 7 * m + 11 + (i - 2 * m) / 2; });
    run(z, 2, 2 * m + 10, [&](int i) { return 2 * m + 6 + (i - 3) / 2; }, [&](int i) { return 6 * m + 12 - i / 2; });
    run(z, 2 * m + 11, 4 * m + 5, [&](int i) { return m + 6 + (i - 2 * m - 11) / 2; },
        [&](int i) { return 7 * m + 10 - (i - 2 * m - 12) / 2; });
    return {x, y, z};
}

EdgeLabeling leg3(int h, int m, Params& p)
{
    require(h >= 0 && m >= 1, "leg3 needs h >= 0, m >= 1");
    p["h"] = h;
    p["m"] = m;
    if (h == 0) {
        Leg x, y{4 * m + 5};
        run(x, 1, 2 * m + 1, [&](int i) { return 4 * m + 3 - i; }, [&](int i) { return i; });
        run(y, 2, 2 * m + 1, [&](int i) { return i; }, [&](int i) { return 4 * m + 3 - i; });
        return {{4 * m + 4, 1, 4 * m + 3}, x, y};
    }
    if (h == 1) {
        Leg x{4 * m + 7, 4 * m + 6, 1}, y;
        run(x, 4, 2 * m + 3, [&](int i) { return 2 * m + 1 + i; }, [&](int i) { return 2 * m + 5 - i; });
        run(y, 1, 2 * m + 1, [&](int i) { return 4 * m + 6 - i; }, [&](int i) { return i; });
        return {{2 * m + 2, 2 * m + 3, 2 * m + 4}, y, x};
    }
    int k = h / 2;
    bool even = h % 2 == 0;
    int q = even ? 4 * m + 4 * k + 5 : 4 * m + 4 * k + 7;
    p["k"] = k;
    Leg X, Y, Q, R;
    run(X, 1, 2 * m, [&](int i) { return q - i; }, [&](int i) { return i - 1; });
    X.push_back(q - 2 * m - 1);
    run(Y, 1, 2 * m, [&](int i) { return q - 1 - i; }, [&](int i) { return i; });
    Y.push_back(q - 2 * m - 2);
    run(Q, 1, even ? 2 * k : 2 * k + 2, [&](int i) { return 2 * m + (i + 1) / 2; },
        [&](int i) { return q - 2 * m - 2 - i / 2; });
    if (even) {
        run(R, 1, 2 * k, [&](int i) { return 2 * m + k + 1 + (i + 1) / 2; },
            [&](int i) { return 2 * m + 3 * k + 2 - i / 2; });
        return {{q, 2 * m + 3 * k + 2, 2 * m + k + 1}, X, cat(cat(Y, Q), R)};
    }
    run(R, 1, 2 * k, [&](int i) { return 2 * m + k + 2 + (i + 1) / 2; },
        [&](int i) { return 2 * m + 3 * k + 3 - i / 2; });
    return {{q, 2 * m + 3 * k + 3, 2 * m + k + 2}, Y, cat(cat(X, Q), R)};
}

EdgeLabeling leg5(int m, int h, Params& p)
{
    require(m >= 1 && h >= 3, "leg5 needs m >= 1, h >= 3");
    p["m"] = m;
    p["h"] = h;
    int q = 2 * m + 2 * h + 7;
    Leg x{q - 1, 1, q - 2, (q + 1) / 2, (q - 1) / 2}, y{q}, z;
    run(y, 2, 2 * m + 1, [&](int j) { return (q + 1) / 2 + (j - 1) / 2; }, [&](int j) { return (q - 1) / 2 - j / 2; });
    run(z, 1, 2 * h + 1, [&](int k) { return (k + 3) / 2; }, [&](int k) { return q - 2 - k / 2; });
    return {x, y, z};
}

EdgeLabeling leg7(int m, int h, Params& p)
{
    require(m >= 1 && h >= 1, "leg7 needs m, h >= 1");
    p["m"] = m;
    p["h"] = h;
    int q = 2 * m + 2 * h + 9;
    Leg x{q - 2, 2, q - 4, q - 1, 1, 3, q - 3}, y, z{q};
    run(y, 1, 2 * m + 1, [&](int j) { return j + 3; }, [&](int j) { return q - 4 - j; });
    run(z, 2, 2 * h + 1, [&](int k) { return k + 2; }, [&](int k) { return q - 3 - k; });
    return {x, y, z};
}

EdgeLabeling nine_eleven(int m, Params& p)
{
    require(m >= 2, "9_11 needs m >= 2");
    p["m"] = m;
    Leg x{2 * m + 21, 2 * m + 14, 6, 2 * m + 15, 5, m + 9, m + 12, m + 8, m + 13};
    Leg y{2 * m + 20, 1, 2 * m + 19, 2, 2 * m + 18, 2 * m + 17, 3, m + 11, m + 10, 4, 2 * m + 16};
    Leg z{m + 14, m + 7};
    run(z, 3, 2 * m + 1, [&](int i) { return 7 + (i - 3) / 2; }, [&](int i) { return 2 * m + 13 - (i - 4) / 2; });
    return {x, y, z};
}

EdgeLabeling thirteen(int m, int n, Params& p)
{
    require(m >= 2 && n >= 2, "13 needs m, n >= 2");
    p["m"] = m;
    p["n"] = n;
    int q = 2 * m + 2 * n + 15;
    Leg x{q - 2, 2, q - 4, 4, 3, q - 3, q - 5, 5, q - 7, q - 1, 1, 6, q - 6}, y{q}, z;
    run(y, 2, 2 * m + 1, [&](int i) { return i + 5; }, [&](int i) { return q - 6 - i; });
    run(z, 1, 2 * n + 1, [&](int i) { return i + 6; }, [&](int i) { return q - 7 - i; });
    return {x, y, z};
}

}  // namespace spider::raw
