#include <algorithm>
#include <set>
#include <string>

#include "builders.hpp"
#include "spider/constructions.hpp"
#include "spider/sequences.hpp"

namespace spider::raw {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw DomainError(what);
}

void merge(Params& p, const std::string& prefix, const Params& inner)
{
    p["via_" + prefix] = 1;
    for (const auto& [k, v] : inner)
        p[prefix + "." + k] = v;
}

// X and Y blocks of the even/odd three-leg constructions.
void xy_pair(int n, int q, bool tail, Leg& X, Leg& Y)
{
    X.clear();
    Y.clear();
    for (int i = 1; i <= 2 * n; ++i) {
        X.push_back(i % 2 ? q - i : i - 1);
        Y.push_back(i % 2 ? q - i - 1 : i);
    }
    if (tail) {
        X.push_back(q - 2 * n - 1);
        Y.push_back(q - 2 * n - 2);
    }
}

// Walk over positions 0..2m using steps p -> p-1 and p -> p-4 first, then the rest ascending.
std::vector<int> ladder(int m, bool start_top)
{
    int top = 2 * m;
    std::vector<int> out;
    std::set<int> used;
    for (int p = start_top ? top : top - 2; p >= 0; p -= 4) {
        out.push_back(p);
        used.insert(p);
        if (p - 1 >= 0) {
            out.push_back(p - 1);
            used.insert(p - 1);
        }
    }
    for (int p = 0; p <= top; ++p)
        if (!used.count(p))
            out.push_back(p);
    return out;
}

}  // namespace

EdgeLabeling fundamental(const Signature& lens, int total)
{
    EdgeLabeling out;
    int j = 1;
    for (int len : lens) {
        Leg leg;
        for (int t = 0; t < len; ++t, ++j)
            leg.push_back(j % 2 == 0 ? j / 2 : total - (j - 1) / 2);
        out.push_back(leg);
    }
    return out;
}

EdgeLabeling leg1(const Signature& sig, Params& p)
{
    require(sig.size() >= 3, "needs at least 3 legs");
    Signature longs;
    int t = 0;
    for (int y : sig) {
        if (y >= 2)
            longs.push_back(y);
        else
            ++t;
    }
    require(t >= 1, "needs a leg of length 1");
    int q = size_of(sig);
    p["t"] = t;
    p["r"] = static_cast<int>(longs.size());
    EdgeLabeling f = fundamental(longs, q - t);
    EdgeLabeling out;
    int li = 0, next = q - t + 1;
    for (int y : sig)
        out.push_back(y >= 2 ? f[li++] : Leg{next++});
    return out;
}

EdgeLabeling two_el(int m, int k, Params& p)
{
    require(m >= 0 && k >= 2, "2el needs m >= 0, k >= 2");
    int q = 6 + 4 * m + k;
    p["m"] = m;
    p["k"] = k;
    p["a"] = 4 + 2 * m;
    Leg v, w;
    for (int i = 1; i <= 2 * m; ++i) {
        v.push_back(i % 2 ? q - 2 - i : 2 + i);
        w.push_back(i % 2 ? q - 3 - i : 3 + i);
    }
    Leg tail = label_path_4a(k, 4 + 2 * m).labels;
    return {{q, 1}, cat({q - 1, 2}, v), cat(cat({q - 2, 3}, w), tail)};
}

EdgeLabeling eol(int n, int m, int l, Params& p)
{
    require(n >= 1 && m >= 0 && l >= m + 2, "eol needs n >= 1, m >= 0, l >= m+2");
    p["n"] = n;
    p["m"] = m;
    p["l"] = l;
    int q = 4 * n + 2 * m + l + 1;
    if (l == m + 2 && m == 0) {
        if (n == 1)
            return {{7, 2}, {5, 4, 1}, {6, 3}};
        // Sp(2n, 2n+1, 2) is Sp(2, 2+2(n-1)+1, 2n)
        Params inner;
        auto L = eol(1, n - 1, 2 * n, inner);
        merge(p, "eol", inner);
        return {L[2], L[1], L[0]};
    }
    Leg X, Y;
    xy_pair(n, q, false, X, Y);
    if (m == 1 && l == 3) {
        p["case"] = 4;
        return {X, cat(Y, {q - 2 * n - 2, 2 * n + 2, 2 * n + 3}), {q, 2 * n + 1, q - 2 * n - 1}};
    }
    Leg Q;
    for (int i = 1; i <= 2 * m + 1; ++i)
        Q.push_back(i % 2 ? q - 2 * n - (i + 1) / 2 : 2 * n + i / 2);
    int a = 2 * n + m, N = l - 1, r;
    Leg first, second;
    if (l == m + 2) {
        std::swap(Q[2 * m - 2], Q[2 * m]);
        r = m;
        first = Y;
        second = cat(X, Q);
        p["case"] = 4;
    } else if (l == m + 3 || (l - m) % 2 == 0) {
        r = m + 1;
        first = Y;
        second = cat(X, Q);
        p["case"] = l == m + 3 ? 3 : 1;
    } else {
        r = m + 2;
        first = X;
        second = cat(Y, Q);
        p["case"] = 2;
    }
    p["a"] = a;
    p["N"] = N;
    p["r"] = r;
    Leg Z = cat({q}, oriented_sequence(N, r, a, true));
    p["x"] = Z[1];
    p["y"] = Z.back();
    return {first, second, Z};
}

EdgeLabeling oel(int n, int m, int l, Params& p)
{
    require(n >= 1 && m >= 0 && l >= 2, "oel needs n >= 1, m >= 0, l >= 2");
    p["n"] = n;
    p["m"] = m;
    p["l"] = l;
    if (m == 0) {
        Params inner;
        auto L = eol(n, 0, l, inner);
        merge(p, "eol", inner);
        return {L[1], L[0], L[2]};
    }
    if (l == 2) {
        Params inner;
        auto L = eol(1, n - 1, 2 * n + 2 * m, inner);
        merge(p, "eol", inner);
        return {L[1], L[2], L[0]};
    }
    Leg X, Y;
    if (l >= m) {
        int q = 4 * n + 2 * m + l + 1;
        xy_pair(n, q, true, X, Y);
        Leg Q;
        for (int i = 1; i <= 2 * m - 1; ++i)
            Q.push_back(i % 2 ? 2 * n + (i + 1) / 2 : q - 2 * n - 2 - i / 2);
        int a = 2 * n + m, N = l - 1, r;
        bool inc = false;
        Leg first, second;
        if (m == 1) {
            first = Y, second = cat(X, Q), r = 1, inc = true;
        } else if (m == 2) {
            first = X, second = cat(Y, Q), r = 1;
        } else if (l == m) {
            first = Y, second = cat(X, Q), r = m - 2;
        } else if ((l - m) % 2 == 0) {
            first = X, second = cat(Y, Q), r = m - 1;
        } else {
            first = Y, second = cat(X, Q), r = m - 2;
        }
        p["a"] = a;
        p["N"] = N;
        p["r"] = r;
        return {first, second, cat({q}, oriented_sequence(N, r, a, inc))};
    }
    if (l % 2 == 0) {
        Params inner;
        if (l <= 2 * n) {
            int h = l / 2;
            auto L = eol(h, n - h, 2 * n + 2 * m, inner);
            merge(p, "eol", inner);
            return {L[1], L[2], L[0]};
        }
        auto L = oel(n, (l - 2 * n) / 2, 2 * n + 2 * m, inner);
        merge(p, "oel", inner);
        return {L[0], L[2], L[1]};
    }
    int h = (l - 1) / 2, k = m - 2 * h;
    require(k >= 2, "oel odd short leg needs m - (l-1) >= 2");
    p["h"] = h;
    p["k"] = k;
    int q = 4 * n + 6 * h + 2 * k + 2;
    xy_pair(n, q, true, X, Y);
    Leg Q, S;
    for (int i = 1; i <= 4 * h; ++i)
        Q.push_back(i % 2 ? 2 * n + (i + 1) / 2 : q - 2 * n - 2 - i / 2);
    for (int i = 1; i <= 2 * k - 1; ++i) {
        if (i % 2)
            S.push_back(i < k ? 2 * n + 2 * h + i + 1 : 2 * n + 2 * h + 2 * k - i);
        else
            S.push_back(i < k ? 2 * n + 4 * h + 2 * k - i : 2 * n + 4 * h + i + 1);
    }
    Leg R = cat({q}, oriented_sequence(2 * h, 2 * h - 1, 2 * n + 2 * h + k, false));
    return {Y, cat(cat(X, Q), S), R};
}

EdgeLabeling eolsmall(int n, int m, int l, Params& p)
{
    require(n >= 1 && l >= 2 && l <= m + 1, "eolsmall needs n >= 1, 2 <= l <= m+1");
    p["n"] = n;
    p["m"] = m;
    p["l"] = l;
    Params inner;
    if (l % 2) {
        int h = (l - 1) / 2;
        if (h < n) {
            auto L = oel(h, n - h, 2 * n + 2 * m + 1, inner);
            merge(p, "oel", inner);
            return {L[1], L[2], L[0]};
        }
        auto L = eol(n, h - n, 2 * n + 2 * m + 1, inner);
        merge(p, "eol", inner);
        return {L[0], L[2], L[1]};
    }
    int h = l / 2;
    p["h"] = h;
    if (h == 1) {
        auto L = two_el(n - 1, 2 * m + 1, inner);
        merge(p, "2el", inner);
        return {L[1], L[2], L[0]};
    }
    if (n == 1) {
        auto L = two_el(h - 1, 2 * m + 3 - 2 * h, inner);
        merge(p, "2el", inner);
        return {L[0], L[2], L[1]};
    }
    if (n == 2 && h == 2 && m % 2 == 1) {
        int k = (m - 3) / 2;
        p["k"] = k;
        Leg X{4 * k + 18, 1, 4 * k + 16, 3};
        Leg Y{4 * k + 17, 2, 4 * k + 15, 4};
        Leg Z{4 * k + 19, 2 * k + 8, 2 * k + 9, 2 * k + 10};
        Leg Q;
        for (int i = 1; i <= 4 * k + 7; ++i) {
            if (i <= 2 * k + 4) {
                Q.push_back(i % 2 ? 4 * k + 15 - i : i + 3);
            } else {
                int j = i - 2 * k - 4;
                Q.push_back(j % 2 ? 2 * k + 10 + j : 2 * k + 8 - j);
            }
        }
        return {Y, cat(X, Q), Z};
    }
    int q = 4 * n + 2 * m + l + 1;
    Leg X, Y;
    xy_pair(n, q, false, X, Y);
    int r = h >= 3 ? 3 : 2;
    p["r"] = r;
    p["a"] = 2 * n + m;
    Leg Q;
    for (int pos : ladder(m, r == 3))
        Q.push_back(pos % 2 == 0 ? 2 * n + m + l + pos / 2 : 2 * n + m - (pos - 1) / 2);
    Leg Z = cat({q}, oriented_sequence(l - 1, r, 2 * n + m, true));
    return {X, cat(Y, Q), Z};
}

EdgeLabeling mixed(int a, int b, int c, Params& p)
{
    require(a >= 2 && a % 2 == 0 && b >= 3 && b % 2 == 1 && c >= 2, "mixed parity needs a even >= 2, b odd >= 3, c >= 2");
    Params inner;
    if (b > a) {
        int n = a / 2, m = (b - a - 1) / 2;
        if (c >= m + 2) {
            auto L = eol(n, m, c, inner);
            merge(p, "eol", inner);
            return L;
        }
        auto L = eolsmall(n, m, c, inner);
        merge(p, "eolsmall", inner);
        return L;
    }
    int n = (b - 1) / 2, m = (a - b + 1) / 2;
    auto L = oel(n, m, c, inner);
    merge(p, "oel", inner);
    return {L[1], L[0], L[2]};
}

namespace {

std::vector<int> y_positions(int m, int ey)
{
    int R = 2 * m, P = 2 * ey - 2;
    std::vector<int> out;
    for (int p = 2; p <= P; ++p)
        out.push_back(p);
    for (int p = P + 1; p <= R; ++p)
        if ((p - P) % 4 == 0 || (p - P) % 4 == 1)
            out.push_back(p);
    for (int p = R; p >= P + 2; --p)
        if ((p - P) % 4 == 2 || (p - P) % 4 == 3)
            out.push_back(p);
    return out;
}

std::vector<int> z_positions(int m, int M, int ez)
{
    int A = 2 * m + 1, E = 2 * ez;
    std::vector<int> out{2 * M};
    for (int o = 2 * M - 3; o > E; o -= 2) {
        out.push_back(o);
        out.push_back(o + 1);
    }
    for (int p = E - 1; p >= A; --p)
        if ((E - p) % 4 == 1 || (E - p) % 4 == 2)
            out.push_back(p);
    for (int p = A; p <= E; ++p)
        if ((E - p) % 4 == 0 || (E - p) % 4 == 3)
            out.push_back(p);
    return out;
}

EdgeLabeling three_even_general(int n, int m, int h, Params& p)
{
    int q = 2 * (n + m + h), r = q / 2, M = r - 2 * n;
    Leg X{q - 1}, Z{q};
    for (int i = 2; i <= 2 * n; ++i)
        X.push_back(i % 2 == 0 ? r + i - 2 : r - i + 1);
    for (int k = 2; k <= 2 * n + 1; ++k)
        Z.push_back(k % 2 == 0 ? r - k + 1 : r + k - 2);
    int ez = std::max(m + 2, M + 2 - m), ey = M + 1 - ez;
    auto lab = [&](int pos) { return pos % 2 == 0 ? pos / 2 : q - 2 - (pos - 1) / 2; };
    Leg Y{q - 2};
    for (int pos : y_positions(m, ey))
        Y.push_back(lab(pos));
    for (int pos : z_positions(m, M, ez))
        Z.push_back(lab(pos));
    p["r"] = r;
    return {X, Y, Z};
}

EdgeLabeling three_even_special(int n)
{
    Leg X{6 * n + 5}, Z{6 * n + 6}, Y{6 * n + 4};
    for (int i = 2; i <= 2 * n; ++i)
        X.push_back(i % 2 == 0 ? 3 * n + 1 + i : 3 * n + 4 - i);
    for (int k = 2; k <= 2 * n + 1; ++k)
        Z.push_back(k % 2 == 0 ? 3 * n + 4 - k : 3 * n + 1 + k);
    Z = cat(Z, {n + 2, 5 * n + 3, n + 3});
    for (int j = 2; j <= n + 1; ++j)
        Y.push_back(j % 2 == 0 ? j : 6 * n + 5 - j);
    for (int j = 2; j <= n + 2; ++j) {
        bool low = (j % 2 == 0) == (n % 2 == 0);
        Y.push_back(low ? n + 3 - j : 5 * n + 2 + j);
    }
    return {X, Y, Z};
}

}  // namespace

EdgeLabeling three_even(int n, int m, int h, Params& p)
{
    require(h >= m && m >= n && n >= 1, "three_even needs h >= m >= n >= 1");
    p["n"] = n;
    p["m"] = m;
    p["h"] = h;
    if (n == m) {
        auto L = fundamental({2 * n, 2 * h, 2 * n}, 2 * (n + m + h));
        p["via_fundamental"] = 1;
        return {L[0], L[2], L[1]};
    }
    if (m == h) {
        auto L = fundamental({2 * m, 2 * n, 2 * m}, 2 * (n + m + h));
        p["via_fundamental"] = 1;
        return {L[1], L[0], L[2]};
    }
    if (n == 1) {
        Params inner;
        auto L = two_el(m - 1, 2 * h - 2 * m, inner);
        merge(p, "2el", inner);
        return L;
    }
    if (m == n + 1 && h == n + 2) {
        p["special"] = 1;
        return three_even_special(n);
    }
    return three_even_general(n, m, h, p);
}

}  // namespace spider::raw
