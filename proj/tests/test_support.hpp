#pragma once

#include <doctest.h>

#include <set>

#include "brute_oracle.hpp"
#include "spider/certificate.hpp"
#include "spider/verifier.hpp"

// Library verdict and reference verdict must agree; returns the color set.
inline std::set<int> checked_colors(const spider::LabelingCertificate& c)
{
    auto ref = oracle::color_set(c.signature, c.labeling);
    REQUIRE(ref.has_value());
    spider::VerificationReport rep = spider::verify_certificate(c);
    REQUIRE(rep.ok());
    CHECK(rep.colors == *ref);
    CHECK(static_cast<int>(ref->size()) == c.claimed_color_count);
    return *ref;
}
