#pragma once

#include <vector>

#include "spider/certificate.hpp"

// Raw labelings in each construction's own leg order. No verification here.
namespace spider::raw {

using Leg = std::vector<int>;

inline Leg cat(Leg a, const Leg& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Alternating high/low labels numbered left to right across the legs, top label `total`.
EdgeLabeling fundamental(const Signature& lens, int total);

EdgeLabeling leg1(const Signature& sig, Params& p);
EdgeLabeling two_el(int m, int k, Params& p);
EdgeLabeling eol(int n, int m, int l, Params& p);
EdgeLabeling oel(int n, int m, int l, Params& p);
EdgeLabeling eolsmall(int n, int m, int l, Params& p);
EdgeLabeling mixed(int a, int b, int c, Params& p);
EdgeLabeling three_even(int n, int m, int h, Params& p);

EdgeLabeling odd_3k(int n, int m, int k, Params& p);
EdgeLabeling odd_nm1(int n, int m, Params& p);
EdgeLabeling equal_odd(int n, int m, Params& p);
EdgeLabeling odd_shifted(int n, int m, Params& p);
EdgeLabeling consecutive_odd(int m, Params& p);
EdgeLabeling odd_m11(int m, Params& p);
EdgeLabeling leg3(int h, int m, Params& p);
EdgeLabeling leg5(int m, int h, Params& p);
EdgeLabeling leg7(int m, int h, Params& p);
EdgeLabeling nine_eleven(int m, Params& p);
EdgeLabeling thirteen(int m, int n, Params& p);

}  // namespace spider::raw
