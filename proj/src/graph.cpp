#include "confviz/graph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>

#include "confviz/error.hpp"

namespace confviz {

Graph::Graph(int order) {
    if (order < 0) {
        throw ParameterError("graph order must be non-negative");
    }
    adj_.resize(static_cast<std::size_t>(order));
}

Graph::Graph(int order, const std::vector<Edge>& edges, std::vector<std::string> labels) : Graph(order) {
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= order || v >= order) {
            throw ParameterError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") has an endpoint outside 0.." + std::to_string(order - 1));
        }
        if (u == v) {
            throw ParameterError("loop at vertex " + std::to_string(u));
        }
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw ParameterError("duplicate edge");
    }
    for (auto [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& a : adj_) {
        std::sort(a.begin(), a.end());
    }
    set_labels(std::move(labels));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& a = neighbors(u);
    return std::binary_search(a.begin(), a.end(), v);
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != adj_.size()) {
        throw ParameterError("label count " + std::to_string(labels.size()) + " does not match order " +
                             std::to_string(adj_.size()));
    }
    labels_ = std::move(labels);
}

bool Bipartition::valid_for(const Graph& g) const {
    if (side.size() != static_cast<std::size_t>(g.order())) {
        return false;
    }
    for (int s : side) {
        if (s != 0 && s != 1) {
            return false;
        }
    }
    return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
        return side[static_cast<std::size_t>(e.first)] != side[static_cast<std::size_t>(e.second)];
    });
}

int Bipartition::count(int s) const { return static_cast<int>(std::count(side.begin(), side.end(), s)); }

bool VertexMap::is_bijection() const {
    std::vector<char> hit(image.size(), 0);
    for (Vertex w : image) {
        if (w < 0 || static_cast<std::size_t>(w) >= image.size() || hit[static_cast<std::size_t>(w)]) {
            return false;
        }
        hit[static_cast<std::size_t>(w)] = 1;
    }
    return true;
}

bool VertexMap::is_isomorphism(const Graph& from, const Graph& to) const {
    if (from.order() != to.order() || from.size() != to.size() ||
        image.size() != static_cast<std::size_t>(from.order()) || !is_bijection()) {
        return false;
    }
    // Same edge count plus injectivity on edges means edges are preserved both ways.
    return std::all_of(from.edges().begin(), from.edges().end(), [&](const Edge& e) {
        return to.adjacent(image[static_cast<std::size_t>(e.first)], image[static_cast<std::size_t>(e.second)]);
    });
}

VertexMap VertexMap::compose(const VertexMap& after) const {
    VertexMap out;
    out.image.reserve(image.size());
    for (Vertex v : image) {
        out.image.push_back(after.image.at(static_cast<std::size_t>(v)));
    }
    return out;
}

bool VertexMap::is_involution() const {
    for (std::size_t v = 0; v < image.size(); ++v) {
        auto w = image[v];
        if (w < 0 || static_cast<std::size_t>(w) >= image.size() || image[static_cast<std::size_t>(w)] != static_cast<Vertex>(v)) {
            return false;
        }
    }
    return true;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    if (g.order() == 0 || h.order() == 0) {
        throw ParameterError("cartesian_product requires non-empty graphs");
    }
    const int m = h.order();
    auto id = [m](Vertex a, Vertex x) { return a * m + x; };
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.order()) * h.size() + static_cast<std::size_t>(m) * g.size());
    for (Vertex a = 0; a < g.order(); ++a) {
        for (auto [x, y] : h.edges()) {
            edges.emplace_back(id(a, x), id(a, y));
        }
    }
    for (auto [a, b] : g.edges()) {
        for (Vertex x = 0; x < m; ++x) {
            edges.emplace_back(id(a, x), id(b, x));
        }
    }
    std::vector<std::string> labels;
    if (g.has_labels() || h.has_labels()) {
        for (Vertex a = 0; a < g.order(); ++a) {
            for (Vertex x = 0; x < m; ++x) {
                auto la = g.has_labels() ? g.labels()[static_cast<std::size_t>(a)] : std::to_string(a);
                auto lx = h.has_labels() ? h.labels()[static_cast<std::size_t>(x)] : std::to_string(x);
                labels.push_back("(" + la + "," + lx + ")");
            }
        }
    }
    return Graph(g.order() * m, edges, std::move(labels));
}

Graph line_graph(const Graph& g) {
    if (g.size() == 0) {
        throw ParameterError("line_graph requires at least one edge");
    }
    const auto& es = g.edges();
    std::map<Edge, int> index;
    for (std::size_t i = 0; i < es.size(); ++i) {
        index.emplace(es[i], static_cast<int>(i));
    }
    std::vector<Edge> edges;
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int a = index.at({std::min(v, nb[i]), std::max(v, nb[i])});
                int b = index.at({std::min(v, nb[j]), std::max(v, nb[j])});
                edges.emplace_back(a, b);
            }
        }
    }
    std::vector<std::string> labels;
    labels.reserve(es.size());
    for (auto [u, v] : es) {
        labels.push_back("{" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    return Graph(static_cast<int>(es.size()), edges, std::move(labels));
}

GraphWithParts kronecker_cover(const Graph& g) {
    const int n = g.order();
    std::vector<Edge> edges;
    edges.reserve(2 * g.size());
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(u, v + n);
        edges.emplace_back(v, u + n);
    }
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(2 * n));
    for (int s = 0; s < 2; ++s) {
        for (Vertex v = 0; v < n; ++v) {
            labels.push_back("(" + std::to_string(v) + "," + std::to_string(s) + ")");
        }
    }
    Bipartition parts;
    parts.side.assign(static_cast<std::size_t>(2 * n), 0);
    std::fill(parts.side.begin() + n, parts.side.end(), 1);
    return {Graph(2 * n, edges, std::move(labels)), std::move(parts)};
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<Edge> edges = g.edges();
    for (auto [u, v] : h.edges()) {
        edges.emplace_back(u + g.order(), v + g.order());
    }
    return Graph(g.order() + h.order(), edges);
}

std::vector<std::vector<Vertex>> neighborhoods(const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    out.reserve(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
        out.push_back(g.neighbors(v));
    }
    return out;
}

AdmissibilityResult is_admissible(const Graph& g) {
    std::map<std::vector<Vertex>, Vertex> first;
    for (Vertex v = 0; v < g.order(); ++v) {
        auto [it, inserted] = first.emplace(g.neighbors(v), v);
        if (!inserted) {
            return {false, std::make_pair(it->second, v)};
        }
    }
    return {};
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) {
            continue;
        }
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<Vertex> q;
        q.push(s);
        comp[static_cast<std::size_t>(s)] = id;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            out.back().push_back(u);
            for (Vertex w : g.neighbors(u)) {
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = id;
                    q.push(w);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

std::optional<Bipartition> two_coloring(const Graph& g) {
    Bipartition parts;
    parts.side.assign(static_cast<std::size_t>(g.order()), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (parts.side[static_cast<std::size_t>(s)] >= 0) {
            continue;
        }
        parts.side[static_cast<std::size_t>(s)] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            const int su = parts.side[static_cast<std::size_t>(u)];
            for (Vertex w : g.neighbors(u)) {
                int& sw = parts.side[static_cast<std::size_t>(w)];
                if (sw < 0) {
                    sw = 1 - su;
                    q.push(w);
                } else if (sw == su) {
                    return std::nullopt;
                }
            }
        }
    }
    return parts;
}

std::optional<int> girth(const Graph& g) {
    int best = std::numeric_limits<int>::max();
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<int> dist(n);
    std::vector<Vertex> parent(n);
    for (Vertex root = 0; root < g.order(); ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<std::size_t>(root)] = 0;
        parent[static_cast<std::size_t>(root)] = -1;
        std::queue<Vertex> q;
        q.push(root);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            const int du = dist[static_cast<std::size_t>(u)];
            if (2 * du + 1 >= best) {
                break;
            }
            for (Vertex w : g.neighbors(u)) {
                const auto wi = static_cast<std::size_t>(w);
                if (dist[wi] < 0) {
                    dist[wi] = du + 1;
                    parent[wi] = u;
                    q.push(w);
                } else if (parent[static_cast<std::size_t>(u)] != w) {
                    best = std::min(best, du + dist[wi] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) {
        return std::nullopt;
    }
    return best;
}

namespace {

bool has_four_cycle(const Graph& g) {
    // A 4-cycle exists iff two distinct vertices share two common neighbours.
    std::vector<int> seen(static_cast<std::size_t>(g.order()), -1);
    for (Vertex u = 0; u < g.order(); ++u) {
        std::fill(seen.begin(), seen.end(), -1);
        for (Vertex m : g.neighbors(u)) {
            for (Vertex w : g.neighbors(m)) {
                if (w == u) {
                    continue;
                }
                auto& s = seen[static_cast<std::size_t>(w)];
                if (s >= 0 && s != m) {
                    return true;
                }
                s = m;
            }
        }
    }
    return false;
}

}  // namespace

StructureReport structure_report(const Graph& g) {
    StructureReport r;
    if (g.order() > 0) {
        const int d = g.degree(0);
        bool regular = true;
        for (Vertex v = 1; v < g.order(); ++v) {
            regular = regular && g.degree(v) == d;
        }
        if (regular) {
            r.regular_degree = d;
        }
    }
    r.parts = two_coloring(g);
    r.bipartite = r.parts.has_value();
    r.components = connected_components(g);
    r.connected = r.components.size() <= 1;
    r.girth = girth(g);
    r.has_4_cycle = has_four_cycle(g);
    return r;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        index.at(static_cast<std::size_t>(vertices[i])) = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        int a = index[static_cast<std::size_t>(u)];
        int b = index[static_cast<std::size_t>(v)];
        if (a >= 0 && b >= 0) {
            edges.emplace_back(a, b);
        }
    }
    std::vector<std::string> labels;
    if (g.has_labels()) {
        for (Vertex v : vertices) {
            labels.push_back(g.labels()[static_cast<std::size_t>(v)]);
        }
    }
    return Graph(static_cast<int>(vertices.size()), edges, std::move(labels));
}

}  // namespace confviz
