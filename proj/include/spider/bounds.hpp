#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "spider/spider_core.hpp"

namespace spider {

struct ProvenanceEntry {
    std::string rule;
    std::string contribution;
};

struct ChiLaBounds {
    int lower = 0;
    int upper = 0;
    std::optional<int> exact;
    std::vector<ProvenanceEntry> provenance;
};

struct IntInterval {
    int lo = 0;
    int hi = -1;

    bool empty() const { return lo > hi; }
};

using PairSet = std::set<std::pair<int, int>>;

// Number of pendant vertices plus one.
int pendant_lower_bound(const SpiderGraph& g);

// Unique max-degree vertex, not adjacent to a pendant, every other degree m < max degree:
// true iff D(D+1) > m(2q - m + 1). Returns false when the structure does not apply.
bool maxdeg_forces_plus2(const SpiderGraph& g);

// d(d+1) > 2(2q - 1). Throws std::invalid_argument on a leg of length 1.
bool legnum_forces_plus2(const Signature& sig);

// Pairs (n, m) with m >= 1 and n + m >= 3 for which the size inequality leaves d+1 open.
const PairSet& set_A();
// Pairs (n, m) with m >= 1 for which Sp(2^n, 3^m) has a (n+m+1)-labeling.
const PairSet& set_B();
// Listed exceptions to the d+1 conjecture, all of shape Sp(2^n, 3^m).
const PairSet& conjecture_exceptions();

// Exact chi_la of Sp(2^n, 3^m). Throws std::invalid_argument when n + m < 3.
int sp23_classify(int n, int m);

// Feasible range of the label on the second edge of a 3-leg in a (n+m+1)-labeling.
IntInterval cond1_interval(int n, int m);

// Combines the rules above with dispatch. Throws std::invalid_argument when d < 3.
ChiLaBounds bounds(const Signature& sig);

}  // namespace spider
