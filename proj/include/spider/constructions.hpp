#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spider/certificate.hpp"

namespace spider {

// Raised when constructor parameters fall outside the construction's domain.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised if a constructor's own output fails verification (a bug, never expected).
struct ConstructionError : std::logic_error {
    using std::logic_error::logic_error;
};

// Every constructor returns a certificate that verify_certificate accepts.

LabelingCertificate construct_leg1(const Signature& sig);
// k = nullopt: search k in [0, d-1]; bump = 1 means the last leg is one longer.
LabelingCertificate construct_all_even(const Signature& sig, std::optional<int> k = std::nullopt, int bump = 0);

LabelingCertificate construct_2el(int m, int k);                 // Sp(2, 2+2m, 2+2m+k)
LabelingCertificate construct_eol(int n, int m, int l);          // Sp(2n, 2n+2m+1, l), l >= m+2
LabelingCertificate construct_oel(int n, int m, int l);          // Sp(2n+1, 2n+2m, l)
LabelingCertificate construct_eolsmall(int n, int m, int l);     // Sp(2n, 2n+2m+1, l), 2 <= l <= m+1
LabelingCertificate construct_mixed_parity(int a, int b, int c); // a even, b odd
LabelingCertificate construct_three_even(int n, int m, int h);   // Sp(2n, 2m, 2h), h >= m >= n

LabelingCertificate construct_odd_3k(int n, int m, int k);       // Sp(2n+1, 2m+1, n+m+3k+1)
LabelingCertificate construct_odd_nm1(int n, int m);             // Sp(2n+1, 2m+1, n+m+1)
LabelingCertificate construct_equal_odd(int n, int m);           // Sp(2n+1, 2m+1, 2m+1)
LabelingCertificate construct_odd_shifted(int n, int m);         // Sp(2n+1, 2m+1, 4(m-n)-1)
LabelingCertificate construct_consecutive_odd(int m);            // Sp(2m+1, 2m+3, 4m-3)
LabelingCertificate construct_odd_m11(int m);                    // Sp(2m+1, 2m+11, 4m+5)
LabelingCertificate construct_leg3(int h, int m);                // Sp(3, 2m+1, 2m+2h+1)
LabelingCertificate construct_leg5(int m, int h);                // Sp(5, 2m+1, 2h+1)
LabelingCertificate construct_leg7(int m, int h);                // Sp(7, 2m+1, 2h+1)
LabelingCertificate construct_9_11(int m);                       // Sp(9, 11, 2m+1)
LabelingCertificate construct_13(int m, int n);                  // Sp(13, 2m+1, 2n+1)

// Stored labelings of Sp(2^[n], 3^[m]) with n+m+1 colors.
const std::vector<LabelingCertificate>& appendix_store();
LabelingCertificate appendix_labeling(int n, int m);

struct DispatchResult {
    std::optional<LabelingCertificate> certificate;
    std::vector<std::string> near_misses;  // constructors whose shape matched but did not apply
};

// Tries constructors in priority order over all admissible leg orderings.
// The certificate keeps the input leg order; params "perm_i" = input index of construction leg i.
DispatchResult dispatch(const Signature& sig);

// Verifies and packages a labeling; throws ConstructionError on failure.
LabelingCertificate make_certificate(const Signature& sig, EdgeLabeling labeling, const std::string& theorem_id,
                                     Params params, int claimed_count);

}  // namespace spider
