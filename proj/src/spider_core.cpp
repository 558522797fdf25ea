#include "spider/spider_core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace spider {

void validate_signature(const Signature& sig)
{
    if (sig.size() < 2)
        throw std::invalid_argument("a spider needs at least 2 legs");
    for (int y : sig)
        if (y < 1)
            throw std::invalid_argument("leg lengths must be positive");
}

int size_of(const Signature& sig)
{
    return std::accumulate(sig.begin(), sig.end(), 0);
}

static int parse_int(const std::string& s, size_t& i)
{
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        ++i;
    if (start == i || i - start > 6)
        throw std::invalid_argument("bad signature near position " + std::to_string(start));
    return std::stoi(s.substr(start, i - start));
}

Signature parse_signature(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    Signature out;
    size_t i = 0;
    while (true) {
        int len = parse_int(s, i);
        int reps = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            reps = parse_int(s, i);
        }
        out.insert(out.end(), reps, len);
        if (i == s.size())
            break;
        if (s[i] != ',')
            throw std::invalid_argument("bad signature near position " + std::to_string(i));
        ++i;
    }
    validate_signature(out);
    return out;
}

std::string format_signature(const Signature& sig)
{
    std::string out;
    for (size_t i = 0; i < sig.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(sig[i]);
    }
    return out;
}

Signature canonical_signature(Signature sig)
{
    std::sort(sig.begin(), sig.end());
    return sig;
}

int SpiderGraph::vertex(int leg, int pos) const
{
    if (leg < 0 || leg >= leg_count() || pos < 1 || pos > legs[leg] + 1)
        throw std::out_of_range("vertex out of range");
    if (pos == legs[leg] + 1)
        return 0;
    return first_vertex[leg] + pos - 1;
}

std::vector<Edge> SpiderGraph::edges() const
{
    std::vector<Edge> out;
    out.reserve(q);
    for (int i = 0; i < leg_count(); ++i)
        for (int j = 1; j <= legs[i]; ++j)
            out.push_back({i, j, vertex(i, j), vertex(i, j + 1)});
    return out;
}

std::vector<int> SpiderGraph::degrees() const
{
    std::vector<int> deg(vertex_count(), 0);
    for (const Edge& e : edges()) {
        ++deg[e.tail];
        ++deg[e.head];
    }
    return deg;
}

int SpiderGraph::pendant_count() const
{
    auto deg = degrees();
    return static_cast<int>(std::count(deg.begin(), deg.end(), 1));
}

std::string SpiderGraph::vertex_name(int v) const
{
    if (v == 0)
        return "u";
    for (int i = leg_count() - 1; i >= 0; --i)
        if (v >= first_vertex[i])
            return "L" + std::to_string(i + 1) + "V" + std::to_string(v - first_vertex[i] + 1);
    throw std::out_of_range("vertex out of range");
}

SpiderGraph build_spider(const Signature& sig)
{
    validate_signature(sig);
    SpiderGraph g;
    g.legs = sig;
    int next = 1;
    for (int y : sig) {
        g.first_vertex.push_back(next);
        next += y;
    }
    g.q = size_of(sig);
    return g;
}

InducedColoring induced_colors(const SpiderGraph& g, const EdgeLabeling& f)
{
    if (static_cast<int>(f.size()) != g.leg_count())
        throw std::invalid_argument("labeling has wrong number of legs");
    InducedColoring c;
    for (int i = 0; i < g.leg_count(); ++i) {
        if (static_cast<int>(f[i].size()) != g.legs[i])
            throw std::invalid_argument("labeling leg " + std::to_string(i + 1) + " has wrong length");
        c.core += f[i].back();
    }
    c.leg.resize(g.leg_count());
    for (int i = 0; i < g.leg_count(); ++i) {
        const auto& l = f[i];
        auto& col = c.leg[i];
        col.push_back(l[0]);
        for (size_t j = 1; j < l.size(); ++j)
            col.push_back(l[j - 1] + l[j]);
        c.distinct.insert(col.begin(), col.end());
    }
    c.distinct.insert(c.core);
    return c;
}

}  // namespace spider
