#pragma once

#include <optional>
#include <set>
#include <string>

#include "spider/certificate.hpp"
#include "spider/spider_core.hpp"

namespace spider {

enum class FailureKind { shape_mismatch, label_out_of_range, duplicate_label, adjacent_conflict, claim_mismatch };

std::string to_string(FailureKind k);

struct Violation {
    FailureKind kind;
    // adjacent_conflict: the two vertices; label failures: the offending edge
    int leg = -1;
    int pos = -1;
    std::string first;
    std::string second;
    int value = 0;
    std::string message;
};

struct VerificationReport {
    bool is_bijection = false;
    bool is_local_antimagic = false;
    int color_count = 0;
    std::set<int> colors;
    std::optional<Violation> violation;

    bool ok() const { return !violation.has_value(); }
};

// Never throws; every failure is reported through violation.
VerificationReport verify(const SpiderGraph& g, const EdgeLabeling& f);

// Also checks claimed_color_count and claimed_colors (when present).
VerificationReport verify_certificate(const LabelingCertificate& cert);

}  // namespace spider
