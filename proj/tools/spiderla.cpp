#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spider/bounds.hpp"
#include "spider/certificate_io.hpp"
#include "spider/constructions.hpp"
#include "spider/exact_solver.hpp"
#include "spider/sweep.hpp"
#include "spider/verifier.hpp"

using namespace spider;
using nlohmann::json;

namespace {

enum Exit { ok = 0, failed = 1, no_construction = 2, usage = 3, budget = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Signature read_signature(const std::string& text)
{
    try {
        return parse_signature(text);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
}

json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("not valid JSON: ") + ex.what());
    }
}

std::string colors_text(const std::set<int>& s)
{
    std::string out = "{";
    for (int c : s)
        out += (out.size() > 1 ? "," : "") + std::to_string(c);
    return out + "}";
}

int cmd_construct(const std::string& sig_text, const std::string& out_path)
{
    Signature sig = read_signature(sig_text);
    DispatchResult r = dispatch(sig);
    if (!r.certificate) {
        std::cerr << "no known construction for Sp(" << format_signature(sig) << ")\n";
        for (const auto& m : r.near_misses)
            std::cerr << "  tried " << m << "\n";
        return no_construction;
    }
    std::string text = certificate_to_json(*r.certificate).dump(1) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream(out_path) << text;
        std::cout << "wrote " << out_path << " (" << r.certificate->theorem_id << ", "
                  << r.certificate->claimed_color_count << " colors)\n";
    }
    return ok;
}

int verify_one(const json& doc)
{
    LabelingCertificate c = certificate_from_json(doc);
    VerificationReport rep = verify_certificate(c);
    std::cout << "Sp(" << format_signature(c.signature) << ") " << c.theorem_id << ": ";
    if (!rep.ok()) {
        std::cout << "FAIL " << to_string(rep.violation->kind) << ": " << rep.violation->message << "\n";
        return failed;
    }
    if (!embedded_verification_matches(doc)) {
        std::cout << "FAIL embedded verification block differs from recomputation\n";
        return failed;
    }
    std::cout << "PASS " << rep.color_count << " colors " << colors_text(rep.colors) << "\n";
    return ok;
}

int cmd_verify(const std::string& path)
{
    json doc = read_json(path);
    try {
        if (!doc.is_array())
            return verify_one(doc);
        int code = ok;
        for (const auto& d : doc)
            if (verify_one(d) != ok)
                code = failed;
        return code;
    } catch (const std::invalid_argument& ex) {
        std::cout << "FAIL invalid certificate: " << ex.what() << "\n";
        return failed;
    }
}

int cmd_bounds(const std::string& sig_text, bool as_json)
{
    Signature sig = read_signature(sig_text);
    ChiLaBounds b;
    try {
        b = bounds(sig);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
    if (as_json) {
        json j{{"signature", sig}, {"lower", b.lower}, {"upper", b.upper}, {"exact", nullptr}};
        if (b.exact)
            j["exact"] = *b.exact;
        j["provenance"] = json::array();
        for (const auto& p : b.provenance)
            j["provenance"].push_back({{"rule", p.rule}, {"contribution", p.contribution}});
        std::cout << j.dump(1) << "\n";
        return ok;
    }
    std::cout << "Sp(" << format_signature(sig) << "): lower " << b.lower << " upper " << b.upper;
    if (b.exact)
        std::cout << " exact " << *b.exact;
    std::cout << "\n";
    for (const auto& p : b.provenance)
        std::cout << "  " << p.rule << ": " << p.contribution << "\n";
    return ok;
}

int cmd_exact(const std::string& sig_text, long long nodes, int jobs, bool as_json)
{
    Signature sig = read_signature(sig_text);
    if (jobs < 1)
        throw UsageError("--jobs must be at least 1");
    SolveOutcome o = chi_la_exact(build_spider(sig), {nodes, jobs});
    if (as_json) {
        json j{{"signature", sig}, {"status", to_string(o.status)}, {"nodes_explored", o.nodes_explored},
               {"chi_la", nullptr}, {"witness", nullptr}};
        if (o.chi_la) {
            j["chi_la"] = *o.chi_la;
            j["witness"] = *o.witness;
        } else {
            j["lower_bound"] = o.lower_bound;
        }
        std::cout << j.dump(1) << "\n";
    } else if (o.chi_la) {
        std::cout << "Sp(" << format_signature(sig) << "): chi_la " << *o.chi_la << " (" << o.nodes_explored
                  << " nodes)\n";
        for (const auto& leg : *o.witness) {
            std::cout << " ";
            for (int l : leg)
                std::cout << " " << l;
            std::cout << "\n";
        }
    } else {
        std::cout << "Sp(" << format_signature(sig) << "): unknown, chi_la >= " << o.lower_bound
                  << " after " << o.nodes_explored << " nodes\n";
    }
    return o.status == SolveStatus::exact ? ok : budget;
}

int cmd_scan(int max_q, long long nodes)
{
    ScanReport r = conjecture_scan(max_q, {nodes, 1});
    std::cout << format_scan(r);
    if (r.count(ScanVerdict::unexpected) > 0)
        return failed;
    return r.count(ScanVerdict::unknown) > 0 ? budget : ok;
}

int cmd_sweep(const std::string& name, const std::string& grid_text, int max_q, bool list)
{
    if (list) {
        for (const auto& c : sweep_constructors()) {
            std::cout << c.name;
            for (const auto& p : c.params)
                std::cout << " " << p;
            std::cout << "\n";
        }
        return ok;
    }
    if (name.empty() || grid_text.empty())
        throw UsageError("sweep needs --constructor and --grid");
    SweepReport r;
    try {
        r = run_sweep(name, parse_grid(grid_text), max_q);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
    std::cout << name << ": " << r.instances << " verified, " << r.out_of_domain << " outside the domain, "
              << r.failures << " failed\n";
    if (r.first_failure) {
        std::cout << "first failure: " << *r.first_failure << "\n";
        return failed;
    }
    return ok;
}

int cmd_export_dot(const std::string& path)
{
    json doc = read_json(path);
    try {
        LabelingCertificate c = certificate_from_json(doc.is_array() ? doc.at(0) : doc);
        VerificationReport rep = verify(build_spider(c.signature), c.labeling);
        if (!rep.ok()) {
            std::cerr << "invalid labeling: " << rep.violation->message << "\n";
            return failed;
        }
        std::cout << export_dot(c);
        return ok;
    } catch (const std::exception& ex) {
        std::cerr << "invalid certificate: " << ex.what() << "\n";
        return failed;
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Local antimagic labelings of spider graphs"};
    app.require_subcommand(1);

    std::string sig_text, path, out_path, ctor, grid;
    long long nodes = -1;
    int jobs = 1, max_q = 11, sweep_max_q = 400;
    bool as_json = false, list = false;

    auto* construct = app.add_subcommand("construct", "Build a certificate for a signature such as 2^4,3^2");
    construct->add_option("signature", sig_text)->required();
    construct->add_option("-o,--out", out_path, "Write the certificate to this file");

    auto* verify_cmd = app.add_subcommand("verify", "Re-verify a certificate file");
    verify_cmd->add_option("certificate", path)->required();

    auto* bounds_cmd = app.add_subcommand("bounds", "Proved bounds on the local antimagic chromatic number");
    bounds_cmd->add_option("signature", sig_text)->required();
    bounds_cmd->add_flag("--json", as_json);

    auto* exact = app.add_subcommand("exact", "Exact value by exhaustive search");
    exact->add_option("signature", sig_text)->required();
    exact->add_option("--budget", nodes, "Node budget, negative for none")->capture_default_str();
    exact->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
    exact->add_flag("--json", as_json);

    auto* scan = app.add_subcommand("scan", "Exact values for every small spider in the conjecture's range");
    scan->add_option("--max-q", max_q)->capture_default_str()->check(CLI::Range(3, 20));
    scan->add_option("--budget", nodes, "Node budget per signature")->capture_default_str();

    auto* sweep = app.add_subcommand("sweep", "Build and check a constructor over a parameter grid");
    sweep->add_option("--constructor", ctor);
    sweep->add_option("--grid", grid, "For example n=1..5,m=0..4,l=2..12");
    sweep->add_option("--max-q", sweep_max_q)->capture_default_str();
    sweep->add_flag("--list", list, "List constructors and their parameters");

    auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of a certificate");
    dot->add_option("certificate", path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*construct)
            return cmd_construct(sig_text, out_path);
        if (*verify_cmd)
            return cmd_verify(path);
        if (*bounds_cmd)
            return cmd_bounds(sig_text, as_json);
        if (*exact)
            return cmd_exact(sig_text, nodes, jobs, as_json);
        if (*scan)
            return cmd_scan(max_q, nodes);
        if (*sweep)
            return cmd_sweep(ctor, grid, sweep_max_q, list);
        if (*dot)
            return cmd_export_dot(path);
    } catch (const UsageError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return usage;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return failed;
    }
    return usage;
}
