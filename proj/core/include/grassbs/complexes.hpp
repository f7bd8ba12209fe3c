#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "grassbs/matrix.hpp"
#include "grassbs/partition.hpp"

namespace grassbs {

/// Finite labeled poset. The strict order is the transitive closure of the
/// supplied pairs; construction rejects cycles.
class Poset {
public:
    Poset() = default;
    Poset(std::vector<std::string> elements, const std::vector<std::pair<int, int>>& less_pairs);

    // Poset of the given partitions under strict diagram containment, with
    // elements named by their bracketed part lists.
    static Poset partition_containment(const std::vector<Partition>& partitions);

    int size() const { return static_cast<int>(elements_.size()); }
    const std::string& element(int index) const { return elements_[static_cast<std::size_t>(index)]; }
    int index_of(const std::string& name) const;  // throws if unknown
    bool less(int a, int b) const { return less_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }

    bool operator==(const Poset&) const = default;

private:
    std::vector<std::string> elements_;
    std::vector<std::vector<bool>> less_;
};

/// Exact sequence of based vector spaces V_0, ..., V_m with boundary maps
/// delta[j] : V_{j+1} -> V_j (homological index decreases under the
/// boundary).
struct ExactComplex {
    std::vector<int> dims;       // dims[j] = dim V_j
    std::vector<QMatrix> delta;  // delta[j] has shape dims[j] x dims[j+1]

    // Shape errors, nonzero composites, failed exactness ranks. Empty means
    // the complex is exact.
    std::vector<std::string> diagnostics() const;
};

// Perfect matching inside the nonzero pattern of a square invertible matrix,
// as (row, column) pairs. Exists because some determinant monomial is
// nonzero. Throws std::invalid_argument on a singular matrix.
std::vector<std::pair<int, int>> iso_matching(const QMatrix& t);

struct MatchedPair {
    int level_from = 0;  // index of the higher space V_{j+1}
    int index_from = 0;  // basis index within it
    int level_to = 0;    // V_j
    int index_to = 0;
    bool operator==(const MatchedPair&) const = default;
};

// Perfect matching on the coefficient graph of an exact sequence: pivot
// subsets F_j of each basis descend to bases of the boundary images, their
// complements G_j are matched against F_{j+1} through iso_matching on the
// induced square submatrix of delta. Deterministic (first-nonzero pivots).
// Throws std::invalid_argument, carrying the diagnostics, if the complex is
// not exact.
std::vector<MatchedPair> exact_sequence_matching(const ExactComplex& complex);

/// Double complex of based vector spaces with a poset-labeled basis in each
/// cell. The vertical differential d_v : E^{p,q} -> E^{p,q+1} preserves
/// labels, the horizontal d_h : E^{p,q} -> E^{p-1,q} strictly decreases them,
/// and squares anticommute. Matrices act on column coordinate vectors; a
/// missing matrix is the zero map.
class DoubleComplex {
public:
    struct Cell {
        std::vector<int> labels;  // poset index of each basis vector
    };

    Poset poset;
    std::map<std::pair<int, int>, Cell> cells;
    std::map<std::pair<int, int>, QMatrix> dv;
    std::map<std::pair<int, int>, QMatrix> dh;

    int cell_dim(int p, int q) const;
    const Cell* cell(int p, int q) const;
    QMatrix dv_matrix(int p, int q) const;  // zero-filled to the right shape when absent
    QMatrix dh_matrix(int p, int q) const;
};

// Checks shapes, d_v^2 = 0, d_h^2 = 0, anticommutation, label preservation /
// strict decrease, and exactness of the total complex. Empty means valid.
std::vector<std::string> validate_double_complex(const DoubleComplex& dc);

struct E1Vertex {
    int p = 0, q = 0;
    int label = 0;  // poset index
    int copy = 0;
    bool operator==(const E1Vertex&) const = default;
};

/// Vertices are the label-graded vertical homology dimensions; edges run
/// (p,q,label) -> (p-r, q-r+1, label') for every r > 0 and label' < label,
/// shaped like the higher differentials of the spectral sequence.
struct E1Graph {
    std::vector<E1Vertex> vertices;
    std::vector<std::pair<int, int>> edges;  // indices into vertices, (from, to)
};

E1Graph e1_graph(const DoubleComplex& dc);  // throws if the complex is invalid

// Perfect matching on the E1 graph of a valid double complex with exact
// total complex: split each column into B, H, B* with d_v : B* ~ B, replace
// each b by d_tot(b*), and match the quotient complex Tot(H) through
// exact_sequence_matching. Every matched edge is re-verified against the E1
// edge rule; a violation would falsify the construction and raises
// std::logic_error.
std::vector<std::pair<E1Vertex, E1Vertex>> e1_matching(const DoubleComplex& dc);

}  // namespace grassbs
