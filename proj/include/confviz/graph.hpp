#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace confviz {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..order-1. Edges are stored once as
// (u, v) with u < v, sorted lexicographically; adjacency lists are sorted.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);
    Graph(int order, const std::vector<Edge>& edges, std::vector<std::string> labels = {});

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t size() const noexcept { return edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(Vertex u, Vertex v) const;

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    bool has_labels() const noexcept { return !labels_.empty(); }
    void set_labels(std::vector<std::string> labels);

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.order() == b.order() && a.edges_ == b.edges_ && a.labels_ == b.labels_;
    }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
};

// side[v] in {0, 1}.
struct Bipartition {
    std::vector<int> side;

    bool valid_for(const Graph& g) const;
    int count(int s) const;
};

// image[v] is the vertex that v is sent to.
struct VertexMap {
    std::vector<Vertex> image;

    bool is_bijection() const;
    bool is_isomorphism(const Graph& from, const Graph& to) const;
    VertexMap compose(const VertexMap& after) const;  // after ∘ this
    bool is_involution() const;
};

struct GraphWithParts {
    Graph graph;
    Bipartition parts;
};

Graph cartesian_product(const Graph& g, const Graph& h);
Graph line_graph(const Graph& g);
GraphWithParts kronecker_cover(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);

std::vector<std::vector<Vertex>> neighborhoods(const Graph& g);

struct AdmissibilityResult {
    bool admissible = true;
    std::optional<std::pair<Vertex, Vertex>> offending;  // smallest (u, v) with N(u) = N(v)
};

AdmissibilityResult is_admissible(const Graph& g);

// Girth is nullopt for forests.
struct StructureReport {
    std::optional<int> regular_degree;
    bool bipartite = false;
    std::optional<Bipartition> parts;
    bool connected = false;
    std::vector<std::vector<Vertex>> components;
    std::optional<int> girth;
    bool has_4_cycle = false;
};

StructureReport structure_report(const Graph& g);

std::vector<std::vector<Vertex>> connected_components(const Graph& g);
std::optional<int> girth(const Graph& g);
std::optional<Bipartition> two_coloring(const Graph& g);

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);

}  // namespace confviz
