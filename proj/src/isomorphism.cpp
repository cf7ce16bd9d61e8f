#include "confviz/isomorphism.hpp"

#include <algorithm>
#include <string>

#include "confviz/error.hpp"

namespace confviz {

namespace {

// Searches for a colour-preserving bijection between the two halves of a
// joint graph (vertices [0, n) and [n, 2n)).
class PairSearch {
public:
    PairSearch(const Graph& g, const Graph& h, bool involution)
        : n_(g.order()), involution_(involution), adj_(static_cast<std::size_t>(2 * n_)) {
        for (Vertex v = 0; v < n_; ++v) {
            adj_[static_cast<std::size_t>(v)] = g.neighbors(v);
            for (Vertex w : h.neighbors(v)) {
                adj_[static_cast<std::size_t>(n_ + v)].push_back(n_ + w);
            }
        }
        g_ = &g;
        h_ = &h;
    }

    std::optional<VertexMap> run(std::vector<int> colors) {
        if (!refine(colors)) {
            return std::nullopt;
        }
        return search(colors);
    }

private:
    using Colors = std::vector<int>;

    // Equitable refinement over the joint graph. Returns false when the two
    // halves end up with different colour histograms.
    bool refine(Colors& colors) const {
        const auto total = static_cast<std::size_t>(2 * n_);
        int classes = count_classes(colors);
        std::vector<std::pair<std::vector<int>, std::size_t>> sig(total);
        while (true) {
            for (std::size_t v = 0; v < total; ++v) {
                auto& s = sig[v].first;
                s.clear();
                s.push_back(colors[v]);
                for (Vertex w : adj_[v]) {
                    s.push_back(colors[static_cast<std::size_t>(w)]);
                }
                std::sort(s.begin() + 1, s.end());
                sig[v].second = v;
            }
            auto order = sig;
            std::sort(order.begin(), order.end());
            Colors next(total);
            int id = -1;
            for (std::size_t i = 0; i < total; ++i) {
                if (i == 0 || order[i].first != order[i - 1].first) {
                    ++id;
                }
                next[order[i].second] = id;
            }
            const int next_classes = id + 1;
            colors = std::move(next);
            if (!balanced(colors, next_classes)) {
                return false;
            }
            if (next_classes == classes) {
                return true;
            }
            classes = next_classes;
        }
    }

    static int count_classes(const Colors& colors) {
        Colors c = colors;
        std::sort(c.begin(), c.end());
        return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
    }

    bool balanced(const Colors& colors, int classes) const {
        std::vector<int> diff(static_cast<std::size_t>(std::max(classes, 1) + 1), 0);
        int top = 0;
        for (int c : colors) {
            top = std::max(top, c);
        }
        diff.resize(static_cast<std::size_t>(top + 1), 0);
        for (Vertex v = 0; v < n_; ++v) {
            ++diff[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])];
            --diff[static_cast<std::size_t>(colors[static_cast<std::size_t>(n_ + v)])];
        }
        return std::all_of(diff.begin(), diff.end(), [](int d) { return d == 0; });
    }

    std::optional<VertexMap> search(const Colors& colors) {
        if (++nodes_ > kIsomorphismMaxNodes) {
            throw CapacityError("isomorphism search exceeded " + std::to_string(kIsomorphismMaxNodes) + " nodes");
        }
        // Smallest non-singleton cell of the first half; ties by colour id.
        int top = 0;
        for (int c : colors) {
            top = std::max(top, c);
        }
        std::vector<int> size(static_cast<std::size_t>(top + 1), 0);
        for (Vertex v = 0; v < n_; ++v) {
            ++size[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])];
        }
        int cell = -1;
        for (int c = 0; c <= top; ++c) {
            const int s = size[static_cast<std::size_t>(c)];
            if (s > 1 && (cell < 0 || s < size[static_cast<std::size_t>(cell)])) {
                cell = c;
            }
        }
        if (cell < 0) {
            return leaf(colors);
        }
        Vertex v = 0;
        while (colors[static_cast<std::size_t>(v)] != cell) {
            ++v;
        }
        for (Vertex w = 0; w < n_; ++w) {
            if (colors[static_cast<std::size_t>(n_ + w)] != cell) {
                continue;
            }
            Colors next = colors;
            int fresh = top + 1;
            next[static_cast<std::size_t>(v)] = fresh;
            next[static_cast<std::size_t>(n_ + w)] = fresh;
            if (involution_ && v != w) {
                // sigma(v) = w forces sigma(w) = v.
                if (colors[static_cast<std::size_t>(w)] != colors[static_cast<std::size_t>(n_ + v)]) {
                    continue;
                }
                next[static_cast<std::size_t>(w)] = fresh + 1;
                next[static_cast<std::size_t>(n_ + v)] = fresh + 1;
            }
            if (!refine(next)) {
                continue;
            }
            if (auto found = search(next)) {
                return found;
            }
        }
        return std::nullopt;
    }

    std::optional<VertexMap> leaf(const Colors& colors) const {
        int top = 0;
        for (int c : colors) {
            top = std::max(top, c);
        }
        std::vector<Vertex> by_color(static_cast<std::size_t>(top + 1), -1);
        for (Vertex w = 0; w < n_; ++w) {
            by_color[static_cast<std::size_t>(colors[static_cast<std::size_t>(n_ + w)])] = w;
        }
        VertexMap map;
        map.image.resize(static_cast<std::size_t>(n_));
        for (Vertex v = 0; v < n_; ++v) {
            map.image[static_cast<std::size_t>(v)] = by_color[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])];
        }
        if (!map.is_isomorphism(*g_, *h_)) {
            return std::nullopt;
        }
        if (involution_ && !map.is_involution()) {
            return std::nullopt;
        }
        return map;
    }

    int n_;
    bool involution_;
    std::vector<std::vector<Vertex>> adj_;
    const Graph* g_ = nullptr;
    const Graph* h_ = nullptr;
    std::size_t nodes_ = 0;
};

void check_scale(const Graph& g) {
    if (g.order() > kIsomorphismMaxOrder) {
        throw CapacityError("graph of order " + std::to_string(g.order()) + " exceeds the isomorphism limit of " +
                            std::to_string(kIsomorphismMaxOrder) + " vertices");
    }
}

bool same_invariants(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) {
        return false;
    }
    std::vector<int> dg, dh;
    for (Vertex v = 0; v < g.order(); ++v) {
        dg.push_back(g.degree(v));
        dh.push_back(h.degree(v));
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    return dg == dh;
}

}  // namespace

std::optional<VertexMap> isomorphic_colored(const Graph& g, const std::vector<int>& g_colors, const Graph& h,
                                            const std::vector<int>& h_colors) {
    check_scale(g);
    check_scale(h);
    if (g_colors.size() != static_cast<std::size_t>(g.order()) || h_colors.size() != static_cast<std::size_t>(h.order())) {
        throw ParameterError("colour vector size does not match graph order");
    }
    if (!same_invariants(g, h)) {
        return std::nullopt;
    }
    std::vector<int> colors = g_colors;
    colors.insert(colors.end(), h_colors.begin(), h_colors.end());
    return PairSearch(g, h, false).run(std::move(colors));
}

std::optional<VertexMap> isomorphic(const Graph& g, const Graph& h) {
    return isomorphic_colored(g, std::vector<int>(static_cast<std::size_t>(g.order()), 0), h,
                              std::vector<int>(static_cast<std::size_t>(h.order()), 0));
}

VertexMap fiber_swap(int base_order) {
    VertexMap m;
    for (Vertex v = 0; v < 2 * base_order; ++v) {
        m.image.push_back(v < base_order ? v + base_order : v - base_order);
    }
    return m;
}

std::optional<VertexMap> bipartite_swap_involution(const Graph& g, const Bipartition& parts,
                                                   const std::optional<VertexMap>& hint) {
    if (!parts.valid_for(g)) {
        throw ParameterError("bipartite_swap_involution: the supplied bipartition is not valid for this graph");
    }
    check_scale(g);
    if (parts.count(0) != parts.count(1)) {
        return std::nullopt;
    }
    auto swaps = [&](const VertexMap& m) {
        if (m.image.size() != parts.side.size() || !m.is_involution() || !m.is_isomorphism(g, g)) {
            return false;
        }
        for (std::size_t v = 0; v < m.image.size(); ++v) {
            if (parts.side[v] == parts.side[static_cast<std::size_t>(m.image[v])]) {
                return false;
            }
        }
        return true;
    };
    if (hint && swaps(*hint)) {
        return hint;
    }
    if (g.order() % 2 == 0) {
        auto fiber = fiber_swap(g.order() / 2);
        if (swaps(fiber)) {
            return fiber;
        }
    }
    std::vector<int> colors = parts.side;
    for (int s : parts.side) {
        colors.push_back(1 - s);
    }
    return PairSearch(g, g, true).run(std::move(colors));
}

}  // namespace confviz
