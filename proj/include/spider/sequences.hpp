#pragma once

#include <set>
#include <utility>
#include <vector>

namespace spider {

struct CircularPermutation {
    std::vector<int> terms;
    int a = 0;
    int r = 0;
};

struct PathFourLabeling {
    std::vector<int> labels;  // edge i of x_1 .. x_{n+1}
    int a = 0;
    std::pair<int, int> endpoint_colors;
    std::set<int> interior_colors;
};

// Allowed |a_N - a_1| gaps for a circular arrangement of [1, N] with sums in {N, N+1, N+2}.
std::set<int> valid_gaps(int N);

// Un-rotated arrangement of [1, N] whose cyclic neighbour sums lie in {N, N+1, N+2}.
std::vector<int> base_cycle(int N);

// base_cycle rotated so that |last - first| = r. Throws std::invalid_argument on bad r.
CircularPermutation circular_permutation(int N, int r);

// circular_permutation shifted by a: a permutation of [a+1, a+N], linear sums in {2a+N, .., 2a+N+2}.
CircularPermutation offset_sequence(int N, int r, int a);

// offset_sequence, reversed when needed so that last > first (increasing) or last < first.
std::vector<int> oriented_sequence(int N, int r, int a, bool increasing);

// Labels of P_{n+1} from [a, a+n-1] with end colors a+n-2, a+n-1 and interior colors
// in {2a+n-3, 2a+n-2, 2a+n-1}; x_2 and x_n get 2a+n-1 whenever n != 3.
PathFourLabeling label_path_4a(int n, int a);

}  // namespace spider
