#pragma once

#include <optional>
#include <string>
#include <vector>

#include "confviz/graph.hpp"

namespace confviz {

// A named family member, e.g. {"kneser", {7, 3}}.
struct FamilySpec {
    std::string name;
    std::vector<int> params;

    // Parses "kneser:7:3" (or a bare name such as "petersen").
    static FamilySpec parse(const std::string& text);
    std::string to_string() const;
};

// Vertex labelling per family:
//   cycle, complete, path        decimal index
//   prism, gen_petersen          (ring,index), ring 0 outer
//   hypercube, kneser,
//   bipartite_kneser, odd,
//   petersen, desargues          sorted subset "{a,b,...}"
//   gen_cuboctahedron            o<k>, s<k>, i<k> for outer/spoke/inner prism edge k
//   dodecahedron                 as gen_petersen(10,2)
//   pappus                       p<i> / b<j> for points and lines of the Pappus configuration
Graph build_family(const FamilySpec& spec);

std::vector<std::string> family_names();

Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph prism_graph(int n);
Graph hypercube_graph(int d);
Graph kneser_graph(int n, int k);
Graph bipartite_kneser_graph(int n, int k);
Graph odd_graph(int n);
Graph generalized_petersen_graph(int n, int r);
Graph gen_cuboctahedron_graph(int n);
Graph pappus_graph();

// The cyclic shift i -> i+1 (mod ground) acting on subset labels "{a,b,...}".
// Returns nullopt if the labels are not subsets or the shift is not an
// automorphism.
std::optional<VertexMap> subset_shift_automorphism(const Graph& g, int ground);

// Parses a subset label "{0,2,5}".
std::optional<std::vector<int>> parse_subset_label(const std::string& label);

}  // namespace confviz
