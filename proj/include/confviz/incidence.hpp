#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "confviz/graph.hpp"

namespace confviz {

using Block = std::vector<int>;

// Points 0..points-1 and a list of blocks (sorted point sets). Blocks are
// non-empty and pairwise distinct. Equality ignores block order.
class IncidenceStructure {
public:
    IncidenceStructure() = default;
    IncidenceStructure(int points, std::vector<Block> blocks, std::string provenance = {});

    int point_count() const noexcept { return points_; }
    int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    const Block& block(int b) const { return blocks_.at(static_cast<std::size_t>(b)); }
    const std::string& provenance() const noexcept { return provenance_; }
    void set_provenance(std::string p) { provenance_ = std::move(p); }

    bool incident(int point, int block) const;
    std::vector<int> point_degrees() const;
    std::vector<Block> sorted_blocks() const;

    friend bool operator==(const IncidenceStructure& a, const IncidenceStructure& b) {
        return a.points_ == b.points_ && a.sorted_blocks() == b.sorted_blocks();
    }

private:
    int points_ = 0;
    std::vector<Block> blocks_;
    std::string provenance_;
};

struct ConfigClass {
    int point_count = 0;
    int block_count = 0;
    std::pair<int, int> point_degree_range{0, 0};
    std::pair<int, int> block_size_range{0, 0};
    std::optional<int> balanced_k;  // set iff every point degree and block size equals k and counts agree
    bool lineal = false;
    bool connected = false;
    std::optional<bool> self_polar;
    bool pointline_impossible = false;  // balanced (n_4) with n <= 17

    // "(10_3)" for balanced structures, "(8_3, 6_4)"-style otherwise.
    std::string type_string() const;
    // "(10_3), lineal, connected, self-polar"
    std::string summary() const;
};

struct LeviGraph {
    Graph graph;  // points first, then blocks
    Bipartition parts;
};

// Blocks are the vertex neighbourhoods, block i = N(i) when collapse=false.
// With collapse=true repeated neighbourhoods are merged into the first
// occurrence. Throws AdmissibilityError for a non-admissible graph when
// collapse=false, ParameterError for isolated vertices.
IncidenceStructure v_construct(const Graph& g, bool collapse = false);

LeviGraph levi_graph(const IncidenceStructure& c);

ConfigClass classify(const IncidenceStructure& c, bool check_self_polar = false);

// No two distinct blocks share two or more points; counted directly.
bool lineal_by_pair_count(const IncidenceStructure& c);

// Order-two automorphism of the Levi graph exchanging points and blocks.
std::optional<VertexMap> is_self_polar(const IncidenceStructure& c);

// Connected components of the Levi graph as densely re-indexed
// sub-structures, ordered by smallest original point index.
std::vector<IncidenceStructure> decompose(const IncidenceStructure& c);

struct KroneckerReport {
    bool admissible = false;
    std::optional<std::pair<Vertex, Vertex>> offending;
    std::optional<VertexMap> witness;  // Levi graph -> Kronecker cover
    int cover_components = 0;
    int levi_components = 0;
    int collapsed_block_count = 0;
    bool verified() const { return admissible && witness.has_value(); }
};

KroneckerReport verify_kronecker_theorem(const Graph& g);

// The (7_3) Fano plane, lines {i, i+1, i+3} mod 7.
IncidenceStructure fano_plane();

}  // namespace confviz
