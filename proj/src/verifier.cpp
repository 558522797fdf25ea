#include "spider/verifier.hpp"

#include <vector>

namespace spider {

std::string to_string(FailureKind k)
{
    switch (k) {
    case FailureKind::shape_mismatch: return "shape_mismatch";
    case FailureKind::label_out_of_range: return "label_out_of_range";
    case FailureKind::duplicate_label: return "duplicate_label";
    case FailureKind::adjacent_conflict: return "adjacent_conflict";
    case FailureKind::claim_mismatch: return "claim_mismatch";
    }
    return "unknown";
}

VerificationReport verify(const SpiderGraph& g, const EdgeLabeling& f)
{
    VerificationReport rep;
    bool shape_ok = static_cast<int>(f.size()) == g.leg_count();
    for (int i = 0; shape_ok && i < g.leg_count(); ++i)
        shape_ok = static_cast<int>(f[i].size()) == g.legs[i];
    if (!shape_ok) {
        rep.violation = Violation{FailureKind::shape_mismatch, -1, -1, "", "", 0, "labeling does not match the leg lengths"};
        return rep;
    }

    std::vector<int> seen(g.q + 1, 0);
    for (const Edge& e : g.edges()) {
        int x = f[e.leg][e.pos - 1];
        if (x < 1 || x > g.q) {
            rep.violation = Violation{FailureKind::label_out_of_range, e.leg, e.pos, "", "", x,
                                      "label " + std::to_string(x) + " outside [1," + std::to_string(g.q) + "]"};
            return rep;
        }
        if (seen[x]++) {
            rep.violation = Violation{FailureKind::duplicate_label, e.leg, e.pos, "", "", x,
                                      "label " + std::to_string(x) + " used twice"};
            return rep;
        }
    }
    rep.is_bijection = true;

    InducedColoring c = induced_colors(g, f);
    rep.colors = c.distinct;
    rep.color_count = c.count();
    for (const Edge& e : g.edges()) {
        int a = c.leg[e.leg][e.pos - 1];
        int b = e.head == 0 ? c.core : c.leg[e.leg][e.pos];
        if (a == b) {
            rep.violation = Violation{FailureKind::adjacent_conflict, e.leg, e.pos, g.vertex_name(e.tail),
                                      g.vertex_name(e.head), a,
                                      g.vertex_name(e.tail) + " and " + g.vertex_name(e.head) + " both have color " +
                                          std::to_string(a)};
            return rep;
        }
    }
    rep.is_local_antimagic = true;
    return rep;
}

VerificationReport verify_certificate(const LabelingCertificate& cert)
{
    VerificationReport rep;
    try {
        rep = verify(build_spider(cert.signature), cert.labeling);
    } catch (const std::exception& ex) {
        rep.violation = Violation{FailureKind::shape_mismatch, -1, -1, "", "", 0, ex.what()};
        return rep;
    }
    if (!rep.ok())
        return rep;
    if (rep.color_count != cert.claimed_color_count) {
        rep.violation = Violation{FailureKind::claim_mismatch, -1, -1, "", "", rep.color_count,
                                  "claimed " + std::to_string(cert.claimed_color_count) + " colors, achieved " +
                                      std::to_string(rep.color_count)};
    } else if (cert.claimed_colors && *cert.claimed_colors != rep.colors) {
        rep.violation = Violation{FailureKind::claim_mismatch, -1, -1, "", "", rep.color_count,
                                  "claimed color set differs from the induced one"};
    }
    return rep;
}

}  // namespace spider
