#include "spider/certificate_io.hpp"

#include <sstream>
#include <stdexcept>

namespace spider {

using nlohmann::json;

json report_to_json(const VerificationReport& rep)
{
    json j{{"is_bijection", rep.is_bijection},
           {"is_local_antimagic", rep.is_local_antimagic},
           {"color_count", rep.color_count},
           {"colors", std::vector<int>(rep.colors.begin(), rep.colors.end())},
           {"passed", rep.ok()}};
    if (rep.violation) {
        const Violation& v = *rep.violation;
        j["violation"] = {{"kind", to_string(v.kind)}, {"message", v.message}};
    }
    return j;
}

json certificate_to_json(const LabelingCertificate& cert)
{
    json lab = json::array();
    for (size_t i = 0; i < cert.labeling.size(); ++i)
        for (size_t j = 0; j < cert.labeling[i].size(); ++j)
            lab.push_back({static_cast<int>(i) + 1, static_cast<int>(j) + 1, cert.labeling[i][j]});
    json doc{{"schema_version", kSchemaVersion},
             {"signature", cert.signature},
             {"labeling", lab},
             {"theorem_id", cert.theorem_id},
             {"params", cert.params},
             {"claimed_color_count", cert.claimed_color_count},
             {"claimed_colors", nullptr},
             {"verification", report_to_json(verify_certificate(cert))}};
    if (cert.claimed_colors)
        doc["claimed_colors"] = std::vector<int>(cert.claimed_colors->begin(), cert.claimed_colors->end());
    return doc;
}

LabelingCertificate certificate_from_json(const json& doc)
{
    for (const char* key : {"schema_version", "signature", "labeling", "theorem_id", "params", "claimed_color_count"})
        if (!doc.contains(key))
            throw std::invalid_argument(std::string("certificate is missing field ") + key);
    LabelingCertificate cert;
    try {
        cert.signature = doc.at("signature").get<Signature>();
        validate_signature(cert.signature);
        cert.theorem_id = doc.at("theorem_id").get<std::string>();
        cert.params = doc.at("params").get<Params>();
        cert.claimed_color_count = doc.at("claimed_color_count").get<int>();
        if (doc.contains("claimed_colors") && !doc.at("claimed_colors").is_null()) {
            auto v = doc.at("claimed_colors").get<std::vector<int>>();
            cert.claimed_colors = std::set<int>(v.begin(), v.end());
        }
        cert.labeling.resize(cert.signature.size());
        for (size_t i = 0; i < cert.signature.size(); ++i)
            cert.labeling[i].assign(cert.signature[i], 0);
        for (const auto& e : doc.at("labeling")) {
            auto t = e.get<std::vector<int>>();
            if (t.size() != 3)
                throw std::invalid_argument("labeling entries are [leg, position, label]");
            int leg = t[0] - 1, pos = t[1] - 1;
            if (leg < 0 || leg >= static_cast<int>(cert.labeling.size()) || pos < 0 ||
                pos >= static_cast<int>(cert.labeling[leg].size()))
                throw std::invalid_argument("labeling entry outside the signature");
            if (cert.labeling[leg][pos] != 0)
                throw std::invalid_argument("edge labeled twice");
            cert.labeling[leg][pos] = t[2];
        }
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("malformed certificate: ") + ex.what());
    }
    return cert;
}

bool embedded_verification_matches(const json& doc)
{
    if (!doc.contains("verification"))
        return false;
    json fresh = report_to_json(verify_certificate(certificate_from_json(doc)));
    return fresh == doc.at("verification");
}

std::string export_dot(const LabelingCertificate& cert)
{
    SpiderGraph g = build_spider(cert.signature);
    InducedColoring c = induced_colors(g, cert.labeling);
    std::ostringstream out;
    out << "graph spider {\n";
    out << "  \"u\" [label=\"u:" << c.core << "\"];\n";
    for (int i = 0; i < g.leg_count(); ++i)
        for (int j = 1; j <= g.legs[i]; ++j) {
            std::string name = g.vertex_name(g.vertex(i, j));
            out << "  \"" << name << "\" [label=\"" << name << ":" << c.leg[i][j - 1] << "\"];\n";
        }
    for (const Edge& e : g.edges())
        out << "  \"" << g.vertex_name(e.tail) << "\" -- \"" << g.vertex_name(e.head) << "\" [label=\""
            << cert.labeling[e.leg][e.pos - 1] << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace spider
