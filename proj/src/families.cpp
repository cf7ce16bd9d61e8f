#include "confviz/families.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "confviz/embedded_data.hpp"
#include "confviz/error.hpp"
#include "confviz/io.hpp"

namespace confviz {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw ParameterError(what);
    }
}

std::string subset_label(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += (i ? "," : "") + std::to_string(s[i]);
    }
    return out + "}";
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        cur[static_cast<std::size_t>(i)] = i;
    }
    if (k > n) {
        return out;
    }
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

std::vector<std::string> index_labels(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) {
        out.push_back(std::to_string(i));
    }
    return out;
}

int mod(int a, int n) { return ((a % n) + n) % n; }

std::string ring_label(int ring, int i) { return "(" + std::to_string(ring) + "," + std::to_string(i) + ")"; }

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
    FamilySpec spec;
    std::stringstream ss(text);
    std::string part;
    bool first = true;
    while (std::getline(ss, part, ':')) {
        if (first) {
            spec.name = part;
            first = false;
            continue;
        }
        try {
            std::size_t used = 0;
            spec.params.push_back(std::stoi(part, &used));
            require(used == part.size(), "bad family parameter '" + part + "'");
        } catch (const std::logic_error&) {
            throw ParameterError("bad family parameter '" + part + "'");
        }
    }
    require(!spec.name.empty(), "empty family name");
    return spec;
}

std::string FamilySpec::to_string() const {
    std::string out = name;
    for (int p : params) {
        out += ":" + std::to_string(p);
    }
    return out;
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle(n) requires n >= 3, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
    }
    return Graph(n, edges, index_labels(n));
}

Graph complete_graph(int n) {
    require(n >= 1, "complete(n) requires n >= 1, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges, index_labels(n));
}

Graph path_graph(int n) {
    require(n >= 1, "path(n) requires n >= 1 vertices, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return Graph(n, edges, index_labels(n));
}

Graph prism_graph(int n) {
    require(n >= 3, "prism(n) requires n >= 3, got " + std::to_string(n));
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (int ring = 0; ring < 2; ++ring) {
        for (int i = 0; i < n; ++i) {
            edges.emplace_back(ring * n + i, ring * n + (i + 1) % n);
            labels.push_back(ring_label(ring, i));
        }
    }
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, n + i);
    }
    return Graph(2 * n, edges, std::move(labels));
}

Graph hypercube_graph(int d) {
    require(d >= 1, "hypercube(d) requires d >= 1, got " + std::to_string(d));
    require(d <= 16, "hypercube(d) requires d <= 16, got " + std::to_string(d));
    const int n = 1 << d;
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (int v = 0; v < n; ++v) {
        std::vector<int> s;
        for (int i = 0; i < d; ++i) {
            if (v & (1 << i)) {
                s.push_back(i);
                continue;
            }
            edges.emplace_back(v, v | (1 << i));
        }
        labels.push_back(subset_label(s));
    }
    return Graph(n, edges, std::move(labels));
}

Graph kneser_graph(int n, int k) {
    require(k >= 1, "kneser(n,k) requires k >= 1, got " + std::to_string(k));
    require(n >= 2 * k, "kneser(n,k) requires n >= 2k, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    require(n <= 20, "kneser(n,k) requires n <= 20");
    auto subs = subsets(n, k);
    std::vector<unsigned> masks;
    std::vector<std::string> labels;
    for (const auto& s : subs) {
        unsigned m = 0;
        for (int x : s) {
            m |= 1u << x;
        }
        masks.push_back(m);
        labels.push_back(subset_label(s));
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < masks.size(); ++i) {
        for (std::size_t j = i + 1; j < masks.size(); ++j) {
            if ((masks[i] & masks[j]) == 0) {
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return Graph(static_cast<int>(subs.size()), edges, std::move(labels));
}

Graph bipartite_kneser_graph(int n, int k) {
    require(k >= 1, "bipartite_kneser(n,k) requires k >= 1, got " + std::to_string(k));
    require(n >= 2 * k,
            "bipartite_kneser(n,k) requires n >= 2k, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    require(n <= 20, "bipartite_kneser(n,k) requires n <= 20");
    auto small = subsets(n, k);
    auto large = subsets(n, n - k);
    auto mask = [](const std::vector<int>& s) {
        unsigned m = 0;
        for (int x : s) {
            m |= 1u << x;
        }
        return m;
    };
    std::vector<std::string> labels;
    for (const auto& s : small) {
        labels.push_back(subset_label(s));
    }
    for (const auto& s : large) {
        labels.push_back(subset_label(s));
    }
    const int offset = static_cast<int>(small.size());
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < small.size(); ++i) {
        const unsigned a = mask(small[i]);
        for (std::size_t j = 0; j < large.size(); ++j) {
            if ((a & ~mask(large[j])) == 0) {
                edges.emplace_back(static_cast<int>(i), offset + static_cast<int>(j));
            }
        }
    }
    return Graph(offset + static_cast<int>(large.size()), edges, std::move(labels));
}

Graph odd_graph(int n) {
    require(n >= 2, "odd(n) requires n >= 2, got " + std::to_string(n));
    return kneser_graph(2 * n - 1, n - 1);
}

Graph generalized_petersen_graph(int n, int r) {
    require(n >= 3, "gen_petersen(n,r) requires n >= 3, got " + std::to_string(n));
    require(r >= 1 && 2 * r < n,
            "gen_petersen(n,r) requires 1 <= r < n/2, got n=" + std::to_string(n) + " r=" + std::to_string(r));
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(i, n + i);
        edges.emplace_back(n + i, n + (i + r) % n);
        labels.push_back(ring_label(0, i));
    }
    for (int i = 0; i < n; ++i) {
        labels.push_back(ring_label(1, i));
    }
    return Graph(2 * n, edges, std::move(labels));
}

// Vertices are the edges of prism(n): outer-ring edge k joins outer vertices
// k and k+1, spoke k joins outer k to inner k, inner-ring edge k joins inner
// vertices k and k+1. Two prism edges are adjacent when they share a vertex.
Graph gen_cuboctahedron_graph(int n) {
    require(n >= 3, "gen_cuboctahedron(n) requires n >= 3, got " + std::to_string(n));
    auto outer = [n](int k) { return mod(k, n); };
    auto spoke = [n](int k) { return n + mod(k, n); };
    auto inner = [n](int k) { return 2 * n + mod(k, n); };
    std::vector<Edge> edges;
    for (int k = 0; k < n; ++k) {
        edges.emplace_back(outer(k), outer(k + 1));
        edges.emplace_back(inner(k), inner(k + 1));
        edges.emplace_back(outer(k), spoke(k));
        edges.emplace_back(outer(k), spoke(k + 1));
        edges.emplace_back(inner(k), spoke(k));
        edges.emplace_back(inner(k), spoke(k + 1));
    }
    std::vector<std::string> labels;
    for (const char* ring : {"o", "s", "i"}) {
        for (int k = 0; k < n; ++k) {
            labels.push_back(ring + std::to_string(k));
        }
    }
    return Graph(3 * n, edges, std::move(labels));
}

Graph pappus_graph() { return graph_from_json(nlohmann::json::parse(embedded::pappus_json())); }

namespace {

using Builder = std::function<Graph(const std::vector<int>&)>;

struct FamilyEntry {
    int arity;
    Builder build;
};

const std::map<std::string, FamilyEntry>& registry() {
    static const std::map<std::string, FamilyEntry> table = {
        {"cycle", {1, [](const auto& p) { return cycle_graph(p[0]); }}},
        {"complete", {1, [](const auto& p) { return complete_graph(p[0]); }}},
        {"path", {1, [](const auto& p) { return path_graph(p[0]); }}},
        {"prism", {1, [](const auto& p) { return prism_graph(p[0]); }}},
        {"hypercube", {1, [](const auto& p) { return hypercube_graph(p[0]); }}},
        {"kneser", {2, [](const auto& p) { return kneser_graph(p[0], p[1]); }}},
        {"bipartite_kneser", {2, [](const auto& p) { return bipartite_kneser_graph(p[0], p[1]); }}},
        {"odd", {1, [](const auto& p) { return odd_graph(p[0]); }}},
        {"petersen", {0, [](const auto&) { return kneser_graph(5, 2); }}},
        {"desargues", {0, [](const auto&) { return bipartite_kneser_graph(5, 2); }}},
        {"gen_petersen", {2, [](const auto& p) { return generalized_petersen_graph(p[0], p[1]); }}},
        {"gen_cuboctahedron", {1, [](const auto& p) { return gen_cuboctahedron_graph(p[0]); }}},
        {"dodecahedron", {0, [](const auto&) { return generalized_petersen_graph(10, 2); }}},
        {"pappus", {0, [](const auto&) { return pappus_graph(); }}},
    };
    return table;
}

}  // namespace

Graph build_family(const FamilySpec& spec) {
    const auto& table = registry();
    auto it = table.find(spec.name);
    if (it == table.end()) {
        throw ParameterError("unknown graph family '" + spec.name + "'");
    }
    if (static_cast<int>(spec.params.size()) != it->second.arity) {
        throw ParameterError(spec.name + " takes " + std::to_string(it->second.arity) + " parameter(s), got " +
                             std::to_string(spec.params.size()));
    }
    return it->second.build(spec.params);
}

std::vector<std::string> family_names() {
    std::vector<std::string> out;
    for (const auto& [name, entry] : registry()) {
        out.push_back(name);
    }
    return out;
}

std::optional<std::vector<int>> parse_subset_label(const std::string& label) {
    if (label.size() < 2 || label.front() != '{' || label.back() != '}') {
        return std::nullopt;
    }
    std::vector<int> out;
    std::stringstream ss(label.substr(1, label.size() - 2));
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            out.push_back(std::stoi(part));
        } catch (const std::logic_error&) {
            return std::nullopt;
        }
    }
    return out;
}

std::optional<VertexMap> subset_shift_automorphism(const Graph& g, int ground) {
    if (!g.has_labels() || ground < 1) {
        return std::nullopt;
    }
    std::map<std::vector<int>, Vertex> index;
    std::vector<std::vector<int>> sets;
    for (Vertex v = 0; v < g.order(); ++v) {
        auto s = parse_subset_label(g.labels()[static_cast<std::size_t>(v)]);
        if (!s) {
            return std::nullopt;
        }
        std::sort(s->begin(), s->end());
        index.emplace(*s, v);
        sets.push_back(*s);
    }
    if (index.size() != sets.size()) {
        return std::nullopt;
    }
    VertexMap shift;
    for (const auto& s : sets) {
        std::vector<int> t;
        for (int x : s) {
            t.push_back(mod(x + 1, ground));
        }
        std::sort(t.begin(), t.end());
        auto it = index.find(t);
        if (it == index.end()) {
            return std::nullopt;
        }
        shift.image.push_back(it->second);
    }
    if (!shift.is_isomorphism(g, g)) {
        return std::nullopt;
    }
    return shift;
}

}  // namespace confviz
