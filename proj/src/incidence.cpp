#include "confviz/incidence.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "confviz/error.hpp"
#include "confviz/isomorphism.hpp"

namespace confviz {

IncidenceStructure::IncidenceStructure(int points, std::vector<Block> blocks, std::string provenance)
    : points_(points), blocks_(std::move(blocks)), provenance_(std::move(provenance)) {
    if (points_ < 0) {
        throw ParameterError("point count must be non-negative");
    }
    std::set<Block> seen;
    for (auto& b : blocks_) {
        if (b.empty()) {
            throw ParameterError("empty block");
        }
        std::sort(b.begin(), b.end());
        if (std::adjacent_find(b.begin(), b.end()) != b.end()) {
            throw ParameterError("block lists a point twice");
        }
        if (b.front() < 0 || b.back() >= points_) {
            throw ParameterError("block references a point outside 0.." + std::to_string(points_ - 1));
        }
        if (!seen.insert(b).second) {
            throw ParameterError("duplicate block");
        }
    }
}

bool IncidenceStructure::incident(int point, int block) const {
    const auto& b = this->block(block);
    return std::binary_search(b.begin(), b.end(), point);
}

std::vector<int> IncidenceStructure::point_degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(points_), 0);
    for (const auto& b : blocks_) {
        for (int p : b) {
            ++deg[static_cast<std::size_t>(p)];
        }
    }
    return deg;
}

std::vector<Block> IncidenceStructure::sorted_blocks() const {
    auto out = blocks_;
    std::sort(out.begin(), out.end());
    return out;
}

std::string ConfigClass::type_string() const {
    if (balanced_k) {
        return "(" + std::to_string(point_count) + "_" + std::to_string(*balanced_k) + ")";
    }
    auto range = [](std::pair<int, int> r) {
        return r.first == r.second ? std::to_string(r.first)
                                   : std::to_string(r.first) + ".." + std::to_string(r.second);
    };
    return "(" + std::to_string(point_count) + "_" + range(point_degree_range) + ", " + std::to_string(block_count) +
           "_" + range(block_size_range) + ")";
}

std::string ConfigClass::summary() const {
    std::string out = type_string();
    out += lineal ? ", lineal" : ", non-lineal";
    out += connected ? ", connected" : ", disconnected";
    if (self_polar) {
        out += *self_polar ? ", self-polar" : ", not self-polar";
    }
    if (pointline_impossible) {
        out += ", no point-line realization";
    }
    return out;
}

IncidenceStructure v_construct(const Graph& g, bool collapse) {
    if (!collapse) {
        auto adm = is_admissible(g);
        if (!adm.admissible) {
            throw AdmissibilityError("graph is not admissible: vertices " + std::to_string(adm.offending->first) +
                                     " and " + std::to_string(adm.offending->second) +
                                     " have the same neighbourhood");
        }
    }
    std::vector<Block> blocks;
    std::set<Block> seen;
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto& nb = g.neighbors(v);
        if (nb.empty()) {
            throw ParameterError("vertex " + std::to_string(v) + " is isolated; its neighbourhood block would be empty");
        }
        if (seen.insert(nb).second) {
            blocks.push_back(nb);
        }
    }
    return IncidenceStructure(g.order(), std::move(blocks), collapse ? "v_construct(collapse)" : "v_construct");
}

LeviGraph levi_graph(const IncidenceStructure& c) {
    const int p = c.point_count();
    std::vector<Edge> edges;
    for (int b = 0; b < c.block_count(); ++b) {
        for (int x : c.block(b)) {
            edges.emplace_back(x, p + b);
        }
    }
    LeviGraph out{Graph(p + c.block_count(), edges), {}};
    out.parts.side.assign(static_cast<std::size_t>(p + c.block_count()), 0);
    std::fill(out.parts.side.begin() + p, out.parts.side.end(), 1);
    return out;
}

bool lineal_by_pair_count(const IncidenceStructure& c) {
    std::set<std::pair<int, int>> pairs;
    for (const auto& b : c.blocks()) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            for (std::size_t j = i + 1; j < b.size(); ++j) {
                if (!pairs.emplace(b[i], b[j]).second) {
                    return false;
                }
            }
        }
    }
    return true;
}

ConfigClass classify(const IncidenceStructure& c, bool check_self_polar) {
    ConfigClass cls;
    cls.point_count = c.point_count();
    cls.block_count = c.block_count();
    auto deg = c.point_degrees();
    if (!deg.empty()) {
        auto [lo, hi] = std::minmax_element(deg.begin(), deg.end());
        cls.point_degree_range = {*lo, *hi};
    }
    if (c.block_count() > 0) {
        int lo = static_cast<int>(c.block(0).size());
        int hi = lo;
        for (const auto& b : c.blocks()) {
            lo = std::min(lo, static_cast<int>(b.size()));
            hi = std::max(hi, static_cast<int>(b.size()));
        }
        cls.block_size_range = {lo, hi};
    }
    const auto [dlo, dhi] = cls.point_degree_range;
    const auto [slo, shi] = cls.block_size_range;
    if (cls.point_count > 0 && cls.point_count == cls.block_count && dlo == dhi && slo == shi && dlo == slo) {
        cls.balanced_k = dlo;
    }
    const auto levi = levi_graph(c);
    auto g = girth(levi.graph);
    cls.lineal = !g || *g >= 6;
    cls.connected = connected_components(levi.graph).size() <= 1;
    if (check_self_polar) {
        cls.self_polar = is_self_polar(c).has_value();
    }
    cls.pointline_impossible = cls.balanced_k == 4 && cls.point_count <= 17;
    return cls;
}

std::optional<VertexMap> is_self_polar(const IncidenceStructure& c) {
    const auto levi = levi_graph(c);
    if (c.point_count() != c.block_count()) {
        return std::nullopt;
    }
    // For v_construct output block i is N(i): point i <-> block i is the
    // fibre swap of the Kronecker cover.
    const int n = c.point_count();
    VertexMap diagonal;
    for (int v = 0; v < 2 * n; ++v) {
        diagonal.image.push_back(v < n ? v + n : v - n);
    }
    return bipartite_swap_involution(levi.graph, levi.parts, diagonal);
}

std::vector<IncidenceStructure> decompose(const IncidenceStructure& c) {
    const auto levi = levi_graph(c);
    const int p = c.point_count();
    std::vector<IncidenceStructure> out;
    for (const auto& comp : connected_components(levi.graph)) {
        std::vector<int> points;
        std::vector<int> blocks;
        for (Vertex v : comp) {
            (v < p ? points : blocks).push_back(v < p ? v : v - p);
        }
        std::map<int, int> local;
        for (std::size_t i = 0; i < points.size(); ++i) {
            local.emplace(points[i], static_cast<int>(i));
        }
        std::vector<Block> sub;
        for (int b : blocks) {
            Block nb;
            for (int x : c.block(b)) {
                nb.push_back(local.at(x));
            }
            sub.push_back(std::move(nb));
        }
        std::string prov = "component of " + (c.provenance().empty() ? std::string("structure") : c.provenance()) +
                           "; points=[";
        for (std::size_t i = 0; i < points.size(); ++i) {
            prov += (i ? "," : "") + std::to_string(points[i]);
        }
        prov += "]";
        out.emplace_back(static_cast<int>(points.size()), std::move(sub), std::move(prov));
    }
    // Components come out of connected_components ordered by smallest Levi
    // vertex, and points precede blocks there, so point-bearing components are
    // already ordered by smallest point index.
    return out;
}

KroneckerReport verify_kronecker_theorem(const Graph& g) {
    KroneckerReport r;
    auto adm = is_admissible(g);
    r.admissible = adm.admissible;
    r.offending = adm.offending;
    const auto cover = kronecker_cover(g);
    r.cover_components = static_cast<int>(connected_components(cover.graph).size());
    if (!adm.admissible) {
        r.collapsed_block_count = v_construct(g, true).block_count();
        return r;
    }
    const auto c = v_construct(g, false);
    r.collapsed_block_count = c.block_count();
    const auto levi = levi_graph(c);
    r.levi_components = static_cast<int>(connected_components(levi.graph).size());
    r.witness = isomorphic_colored(levi.graph, levi.parts.side, cover.graph, cover.parts.side);
    if (!r.witness) {
        // A side-reversing isomorphism is still an isomorphism of graphs.
        r.witness = isomorphic(levi.graph, cover.graph);
    }
    return r;
}

IncidenceStructure fano_plane() {
    std::vector<Block> blocks;
    for (int i = 0; i < 7; ++i) {
        blocks.push_back({i, (i + 1) % 7, (i + 3) % 7});
    }
    return IncidenceStructure(7, std::move(blocks), "fano");
}

}  // namespace confviz
