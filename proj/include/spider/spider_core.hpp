#pragma once

#include <set>
#include <string>
#include <vector>

namespace spider {

// Leg lengths y_1..y_d, in the order given.
using Signature = std::vector<int>;

// labels[i][j] is the label of edge j+1 of leg i; edge 1 is the pendant edge.
using EdgeLabeling = std::vector<std::vector<int>>;

void validate_signature(const Signature& sig);
int size_of(const Signature& sig);

// "2^4,3^2,5" -> (2,2,2,2,3,3,5). Throws std::invalid_argument.
Signature parse_signature(const std::string& text);
std::string format_signature(const Signature& sig);

Signature canonical_signature(Signature sig);

struct Edge {
    int leg;   // 0-based
    int pos;   // 1-based, 1 = pendant edge
    int tail;  // vertex index of v_{leg,pos}
    int head;  // vertex index of v_{leg,pos+1}, or 0 for the core
};

// Vertex 0 is the core u. Leg i owns vertices v_{i,1}..v_{i,y_i}, v_{i,1} pendant.
struct SpiderGraph {
    Signature legs;
    std::vector<int> first_vertex;
    int q = 0;

    int leg_count() const { return static_cast<int>(legs.size()); }
    int vertex_count() const { return q + 1; }
    // pos in [1, y_i + 1]; pos = y_i + 1 names the core.
    int vertex(int leg, int pos) const;
    std::vector<Edge> edges() const;
    std::vector<int> degrees() const;
    int pendant_count() const;
    std::string vertex_name(int v) const;
};

SpiderGraph build_spider(const Signature& sig);

struct InducedColoring {
    int core = 0;
    std::vector<std::vector<int>> leg;  // leg[i][j] = color of v_{i,j+1}
    std::set<int> distinct;

    int count() const { return static_cast<int>(distinct.size()); }
};

// Throws std::invalid_argument when the labeling does not match the graph shape.
InducedColoring induced_colors(const SpiderGraph& g, const EdgeLabeling& f);

}  // namespace spider
