#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "confviz/graph.hpp"

namespace confviz {

// Documented scale of the search engine.
inline constexpr int kIsomorphismMaxOrder = 300;
inline constexpr std::size_t kIsomorphismMaxNodes = 2'000'000;

// Deterministic isomorphism search: colour refinement on the disjoint union
// of both graphs, then individualisation and backtracking. Candidates are
// tried in order of refined colour, then vertex index.
//
// Throws CapacityError if either graph exceeds kIsomorphismMaxOrder vertices
// or the search exceeds kIsomorphismMaxNodes nodes.
std::optional<VertexMap> isomorphic(const Graph& g, const Graph& h);

// Same, but only mappings that send colour c of g to colour c of h.
std::optional<VertexMap> isomorphic_colored(const Graph& g, const std::vector<int>& g_colors, const Graph& h,
                                            const std::vector<int>& h_colors);

// An automorphism of order two that exchanges the two sides of `parts`.
// Throws ParameterError if `parts` is not a valid bipartition of g.
// `hint` is checked first when supplied (e.g. the fibre swap of a Kronecker
// cover).
std::optional<VertexMap> bipartite_swap_involution(const Graph& g, const Bipartition& parts,
                                                   const std::optional<VertexMap>& hint = std::nullopt);

// (v,0) <-> (v,1) on a graph laid out as kronecker_cover() emits it.
VertexMap fiber_swap(int base_order);

}  // namespace confviz
