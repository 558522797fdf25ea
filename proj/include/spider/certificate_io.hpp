#pragma once

#include <string>

#include <json.hpp>

#include "spider/certificate.hpp"
#include "spider/verifier.hpp"

namespace spider {

inline constexpr const char* kSchemaVersion = "1.0";

nlohmann::json report_to_json(const VerificationReport& rep);

// Document with the embedded verification of the certificate as it stands.
nlohmann::json certificate_to_json(const LabelingCertificate& cert);

// Throws std::invalid_argument on schema violations.
LabelingCertificate certificate_from_json(const nlohmann::json& doc);

// True when the document's embedded verification block equals a fresh recomputation.
bool embedded_verification_matches(const nlohmann::json& doc);

std::string export_dot(const LabelingCertificate& cert);

}  // namespace spider
