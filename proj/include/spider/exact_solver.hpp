#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spider/spider_core.hpp"

namespace spider {

struct SolveBudget {
    std::int64_t max_nodes = -1;  // negative: unlimited
    int jobs = 1;
};

enum class Decision { yes, no, unknown };
enum class SolveStatus { exact, unknown };

std::string to_string(Decision d);
std::string to_string(SolveStatus s);

struct DecisionResult {
    Decision decision = Decision::unknown;
    std::optional<EdgeLabeling> witness;  // present iff yes
    std::int64_t nodes_explored = 0;
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::unknown;
    std::optional<int> chi_la;
    std::optional<EdgeLabeling> witness;
    std::int64_t nodes_explored = 0;
    // smallest color count not yet ruled out when the search stopped
    int lower_bound = 0;
};

// Complete search for a local antimagic labeling with at most c colors.
DecisionResult exists_labeling_with_at_most(const SpiderGraph& g, int c, const SolveBudget& budget = {});

// Runs the decision search from the pendant bound upward; the budget covers all rounds.
SolveOutcome chi_la_exact(const SpiderGraph& g, const SolveBudget& budget = {});

// Minimum color count over all q! bijections, without pruning. Returns nullopt if none is local antimagic.
std::optional<int> naive_chi_la(const SpiderGraph& g);

enum class ScanVerdict { confirmed, listed_exception, unexpected, unknown };
std::string to_string(ScanVerdict v);

struct ScanEntry {
    Signature signature;  // nondecreasing
    int q = 0;
    SolveOutcome outcome;
    ScanVerdict verdict = ScanVerdict::unknown;
};

struct ScanReport {
    int max_q = 0;
    std::vector<ScanEntry> entries;

    int count(ScanVerdict v) const;
};

// Signatures with d >= 3, legs >= 2, q <= max_q and d(d+1) <= 2(2q-1), in increasing (q, signature) order.
std::vector<Signature> conjecture_domain(int max_q);

// The budget applies per signature.
ScanReport conjecture_scan(int max_q, const SolveBudget& budget = {});

// Stable text rendering, one line per signature plus a summary line.
std::string format_scan(const ScanReport& r);

}  // namespace spider
