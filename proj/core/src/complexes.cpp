#include "grassbs/complexes.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "grassbs/matching.hpp"

namespace grassbs {

Poset::Poset(std::vector<std::string> elements, const std::vector<std::pair<int, int>>& less_pairs)
    : elements_(std::move(elements)) {
    std::size_t n = elements_.size();
    less_.assign(n, std::vector<bool>(n, false));
    for (const auto& [a, b] : less_pairs) {
        if (a < 0 || b < 0 || a >= static_cast<int>(n) || b >= static_cast<int>(n))
            throw std::invalid_argument("poset relation references an unknown element");
        less_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (less_[i][k] && less_[k][j]) less_[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
        if (less_[i][i]) throw std::invalid_argument("poset relations contain a cycle");
}

Poset Poset::partition_containment(const std::vector<Partition>& partitions) {
    std::vector<std::string> names;
    for (const Partition& p : partitions) {
        std::ostringstream os;
        os << "[";
        for (int i = 0; i < p.rows(); ++i) {
            if (i) os << ",";
            os << p.row(i);
        }
        os << "]";
        names.push_back(os.str());
    }
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t a = 0; a < partitions.size(); ++a)
        for (std::size_t b = 0; b < partitions.size(); ++b)
            if (strictly_contains(partitions[a], partitions[b]))
                pairs.push_back({static_cast<int>(a), static_cast<int>(b)});
    return Poset(std::move(names), pairs);
}

int Poset::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown poset element: " + name);
}

std::vector<std::string> ExactComplex::diagnostics() const {
    std::vector<std::string> out;
    std::size_t m = dims.size();
    if (delta.size() + 1 != m && !(m == 0 && delta.empty())) {
        out.push_back("expected one boundary map per consecutive pair of spaces");
        return out;
    }
    for (std::size_t j = 0; j + 1 < m; ++j)
        if (delta[j].rows() != dims[j] || delta[j].cols() != dims[j + 1]) {
            out.push_back("boundary map " + std::to_string(j) + " has the wrong shape");
            return out;
        }
    for (std::size_t j = 0; j + 2 < m; ++j)
        if (!(delta[j] * delta[j + 1]).is_zero())
            out.push_back("composite of boundary maps " + std::to_string(j) + " and " +
                          std::to_string(j + 1) + " is nonzero");
    for (std::size_t j = 0; j < m; ++j) {
        int rank_out = j > 0 ? delta[j - 1].rank() : 0;
        int rank_in = j + 1 < m ? delta[j].rank() : 0;
        if (rank_out + rank_in != dims[j])
            out.push_back("not exact at position " + std::to_string(j) + ": rank out " +
                          std::to_string(rank_out) + " + rank in " + std::to_string(rank_in) +
                          " != dim " + std::to_string(dims[j]));
    }
    return out;
}

std::vector<std::pair<int, int>> iso_matching(const QMatrix& t) {
    if (t.rows() != t.cols()) throw std::invalid_argument("iso_matching: matrix is not square");
    if (t.determinant() == 0) throw std::invalid_argument("iso_matching: matrix is singular");
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(t.rows()));
    for (int r = 0; r < t.rows(); ++r)
        for (int c = 0; c < t.cols(); ++c)
            if (t(r, c) != 0) adj[static_cast<std::size_t>(r)].push_back(c);
    BipartiteMatching m = max_bipartite_matching(t.rows(), t.cols(), adj);
    if (m.size != t.rows())
        throw std::logic_error("iso_matching: nonsingular matrix without a pattern matching");
    std::vector<std::pair<int, int>> out;
    for (int r = 0; r < t.rows(); ++r) out.push_back({r, m.left_match[static_cast<std::size_t>(r)]});
    return out;
}

std::vector<MatchedPair> exact_sequence_matching(const ExactComplex& complex) {
    std::vector<std::string> problems = complex.diagnostics();
    if (!problems.empty()) {
        std::string joined = "exact_sequence_matching: complex is not exact:";
        for (const std::string& p : problems) joined += "\n  " + p;
        throw std::invalid_argument(joined);
    }

    std::size_t m = complex.dims.size();
    // pivots[j]: basis subset of V_j descending to a basis of im(delta out of V_j).
    std::vector<std::vector<int>> pivots(m), free_subset(m);
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<int> pivot_cols;
        if (j > 0) pivot_cols = complex.delta[j - 1].rref().pivot_cols;
        std::vector<bool> is_pivot(static_cast<std::size_t>(complex.dims[j]), false);
        for (int c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
        for (int c = 0; c < complex.dims[j]; ++c)
            (is_pivot[static_cast<std::size_t>(c)] ? pivots[j] : free_subset[j]).push_back(c);
    }

    std::vector<MatchedPair> out;
    for (std::size_t j = 0; j + 1 < m; ++j) {
        const std::vector<int>& g = free_subset[j];
        const std::vector<int>& f = pivots[j + 1];
        if (g.empty() && f.empty()) continue;
        // The induced map F_{j+1} -> G_j reuses delta's coefficients.
        QMatrix t = complex.delta[j].submatrix(g, f);
        for (const auto& [r, c] : iso_matching(t))
            out.push_back({static_cast<int>(j) + 1, f[static_cast<std::size_t>(c)],
                           static_cast<int>(j), g[static_cast<std::size_t>(r)]});
    }
    std::sort(out.begin(), out.end(), [](const MatchedPair& a, const MatchedPair& b) {
        if (a.level_from != b.level_from) return a.level_from < b.level_from;
        return a.index_from < b.index_from;
    });
    return out;
}

int DoubleComplex::cell_dim(int p, int q) const {
    auto it = cells.find({p, q});
    return it == cells.end() ? 0 : static_cast<int>(it->second.labels.size());
}

const DoubleComplex::Cell* DoubleComplex::cell(int p, int q) const {
    auto it = cells.find({p, q});
    return it == cells.end() ? nullptr : &it->second;
}

QMatrix DoubleComplex::dv_matrix(int p, int q) const {
    auto it = dv.find({p, q});
    if (it != dv.end()) return it->second;
    return QMatrix(cell_dim(p, q + 1), cell_dim(p, q));
}

QMatrix DoubleComplex::dh_matrix(int p, int q) const {
    auto it = dh.find({p, q});
    if (it != dh.end()) return it->second;
    return QMatrix(cell_dim(p - 1, q), cell_dim(p, q));
}

namespace {

struct TotBasisVec {
    int p = 0, q = 0;
    int index = 0;  // within the cell
};

// Total complex: one level per diagonal p - q in a contiguous range (lowest
// first), with d_tot = d_h + d_v mapping level j+1 to level j.
struct TotStructure {
    int low_diagonal = 0;
    std::vector<std::vector<TotBasisVec>> basis;  // per level
    std::map<std::tuple<int, int, int>, std::pair<int, int>> position;  // (p,q,index) -> (level, offset)
    ExactComplex complex;
};

TotStructure total_complex(const DoubleComplex& dc) {
    TotStructure tot;
    if (dc.cells.empty()) return tot;
    int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
    for (const auto& [pq, cell] : dc.cells) {
        if (cell.labels.empty()) continue;
        int d = pq.first - pq.second;
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    if (lo > hi) return tot;
    tot.low_diagonal = lo;
    tot.basis.resize(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [pq, cell] : dc.cells) {
        int level = pq.first - pq.second - lo;
        for (int idx = 0; idx < static_cast<int>(cell.labels.size()); ++idx) {
            tot.position[{pq.first, pq.second, idx}] = {
                level, static_cast<int>(tot.basis[static_cast<std::size_t>(level)].size())};
            tot.basis[static_cast<std::size_t>(level)].push_back({pq.first, pq.second, idx});
        }
    }
    for (const auto& level_basis : tot.basis)
        tot.complex.dims.push_back(static_cast<int>(level_basis.size()));
    for (std::size_t j = 0; j + 1 < tot.basis.size(); ++j) {
        QMatrix d(tot.complex.dims[j], tot.complex.dims[j + 1]);
        for (int c = 0; c < tot.complex.dims[j + 1]; ++c) {
            const TotBasisVec& src = tot.basis[j + 1][static_cast<std::size_t>(c)];
            QMatrix mv = dc.dv_matrix(src.p, src.q);
            for (int r = 0; r < mv.rows(); ++r) {
                if (mv(r, src.index) == 0) continue;
                auto [lvl, off] = tot.position.at({src.p, src.q + 1, r});
                d(off, c) = mv(r, src.index);
            }
            QMatrix mh = dc.dh_matrix(src.p, src.q);
            for (int r = 0; r < mh.rows(); ++r) {
                if (mh(r, src.index) == 0) continue;
                auto [lvl, off] = tot.position.at({src.p - 1, src.q, r});
                d(off, c) = mh(r, src.index);
            }
        }
        tot.complex.delta.push_back(std::move(d));
    }
    return tot;
}

std::string pq_name(int p, int q) {
    return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

}  // namespace

std::vector<std::string> validate_double_complex(const DoubleComplex& dc) {
    std::vector<std::string> out;

    for (const auto& [pq, m] : dc.dv) {
        auto [p, q] = pq;
        if (m.cols() != dc.cell_dim(p, q) || m.rows() != dc.cell_dim(p, q + 1)) {
            out.push_back("vertical differential at " + pq_name(p, q) + " has the wrong shape");
            continue;
        }
        const auto* src = dc.cell(p, q);
        const auto* dst = dc.cell(p, q + 1);
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c)
                if (m(r, c) != 0 &&
                    dst->labels[static_cast<std::size_t>(r)] != src->labels[static_cast<std::size_t>(c)])
                    out.push_back("vertical differential at " + pq_name(p, q) +
                                  " does not preserve labels (entry " + std::to_string(r) + "," +
                                  std::to_string(c) + ")");
    }
    for (const auto& [pq, m] : dc.dh) {
        auto [p, q] = pq;
        if (m.cols() != dc.cell_dim(p, q) || m.rows() != dc.cell_dim(p - 1, q)) {
            out.push_back("horizontal differential at " + pq_name(p, q) + " has the wrong shape");
            continue;
        }
        const auto* src = dc.cell(p, q);
        const auto* dst = dc.cell(p - 1, q);
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c)
                if (m(r, c) != 0 &&
                    !dc.poset.less(dst->labels[static_cast<std::size_t>(r)],
                                   src->labels[static_cast<std::size_t>(c)]))
                    out.push_back("filtration violated: horizontal differential at " + pq_name(p, q) +
                                  " has a non-decreasing label (entry " + std::to_string(r) + "," +
                                  std::to_string(c) + ")");
    }
    if (!out.empty()) return out;  // composites below assume consistent shapes

    std::set<std::pair<int, int>> positions;
    for (const auto& [pq, cell] : dc.cells) positions.insert(pq);

    for (const auto& [p, q] : positions) {
        if (dc.cell_dim(p, q) == 0) continue;
        if (dc.cell_dim(p, q + 2) > 0 || dc.cell_dim(p, q + 1) > 0) {
            QMatrix vv = dc.dv_matrix(p, q + 1) * dc.dv_matrix(p, q);
            if (!vv.is_zero()) out.push_back("d_v composite at " + pq_name(p, q) + " is nonzero");
        }
        if (dc.cell_dim(p - 2, q) > 0 || dc.cell_dim(p - 1, q) > 0) {
            QMatrix hh = dc.dh_matrix(p - 1, q) * dc.dh_matrix(p, q);
            if (!hh.is_zero()) out.push_back("d_h composite at " + pq_name(p, q) + " is nonzero");
        }
        QMatrix anti = dc.dh_matrix(p, q + 1) * dc.dv_matrix(p, q) +
                       dc.dv_matrix(p - 1, q) * dc.dh_matrix(p, q);
        if (!anti.is_zero())
            out.push_back("square at " + pq_name(p, q) + " does not anticommute");
    }
    if (!out.empty()) return out;

    TotStructure tot = total_complex(dc);
    for (const std::string& msg : tot.complex.diagnostics())
        out.push_back("total complex: " + msg);
    return out;
}

namespace {

// Per-cell, per-label splitting E = B + H + B* with d_v(B*) = B in the next
// cell and H a complement of B inside ker(d_v). Vectors are stored in full
// cell coordinates; the label grading keeps blocks independent.
struct LabelSplit {
    std::vector<std::vector<Rat>> b, h, bstar;
};

// Deterministic greedy extension: keeps a Gaussian elimination state (first
// nonzero pivot per row) and accepts a candidate iff it increases the rank.
class SpanBuilder {
public:
    bool try_add(const std::vector<Rat>& v) {
        std::vector<Rat> r = v;
        for (const auto& [pivot, row] : rows_) {
            if (r[static_cast<std::size_t>(pivot)] == 0) continue;
            Rat factor = r[static_cast<std::size_t>(pivot)];
            for (std::size_t c = 0; c < r.size(); ++c) r[c] -= factor * row[c];
        }
        int pivot = -1;
        for (std::size_t c = 0; c < r.size(); ++c)
            if (r[c] != 0) {
                pivot = static_cast<int>(c);
                break;
            }
        if (pivot < 0) return false;
        Rat inv = Rat(1) / r[static_cast<std::size_t>(pivot)];
        for (Rat& x : r) x *= inv;
        rows_.push_back({pivot, std::move(r)});
        return true;
    }

private:
    std::vector<std::pair<int, std::vector<Rat>>> rows_;
};

struct DiagonalBasisVec {
    // A vector on one diagonal, stored per contributing cell.
    std::map<std::pair<int, int>, std::vector<Rat>> pieces;
    bool is_h = false;
    int p = 0, q = 0, label = 0, copy = 0;  // metadata for H vectors
};

std::vector<Rat> unit_vector(int dim, int index) {
    std::vector<Rat> v(static_cast<std::size_t>(dim), Rat(0));
    v[static_cast<std::size_t>(index)] = 1;
    return v;
}

}  // namespace

E1Graph e1_graph(const DoubleComplex& dc) {
    std::vector<std::string> problems = validate_double_complex(dc);
    if (!problems.empty()) {
        std::string joined = "e1_graph: invalid double complex:";
        for (const std::string& p : problems) joined += "\n  " + p;
        throw std::invalid_argument(joined);
    }

    E1Graph graph;
    for (const auto& [pq, cell] : dc.cells) {
        auto [p, q] = pq;
        int dim = static_cast<int>(cell.labels.size());
        QMatrix up = dc.dv_matrix(p, q);
        QMatrix down = dc.dv_matrix(p, q - 1);
        std::set<int> labels(cell.labels.begin(), cell.labels.end());
        for (int label : labels) {
            std::vector<int> block;
            for (int idx = 0; idx < dim; ++idx)
                if (cell.labels[static_cast<std::size_t>(idx)] == label) block.push_back(idx);
            std::vector<int> above_block, below_block;
            const auto* above = dc.cell(p, q + 1);
            if (above)
                for (int idx = 0; idx < static_cast<int>(above->labels.size()); ++idx)
                    if (above->labels[static_cast<std::size_t>(idx)] == label) above_block.push_back(idx);
            const auto* below = dc.cell(p, q - 1);
            if (below)
                for (int idx = 0; idx < static_cast<int>(below->labels.size()); ++idx)
                    if (below->labels[static_cast<std::size_t>(idx)] == label) below_block.push_back(idx);
            int kernel_dim = static_cast<int>(block.size()) - up.submatrix(above_block, block).rank();
            int image_dim = down.submatrix(block, below_block).rank();
            for (int c = 0; c < kernel_dim - image_dim; ++c)
                graph.vertices.push_back({p, q, label, c});
        }
    }
    std::sort(graph.vertices.begin(), graph.vertices.end(),
              [](const E1Vertex& a, const E1Vertex& b) {
                  return std::tie(a.p, a.q, a.label, a.copy) < std::tie(b.p, b.q, b.label, b.copy);
              });
    for (std::size_t from = 0; from < graph.vertices.size(); ++from)
        for (std::size_t to = 0; to < graph.vertices.size(); ++to) {
            const E1Vertex& a = graph.vertices[from];
            const E1Vertex& b = graph.vertices[to];
            int r = a.p - b.p;
            if (r > 0 && b.q == a.q - r + 1 && dc.poset.less(b.label, a.label))
                graph.edges.push_back({static_cast<int>(from), static_cast<int>(to)});
        }
    return graph;
}

std::vector<std::pair<E1Vertex, E1Vertex>> e1_matching(const DoubleComplex& dc) {
    std::vector<std::string> problems = validate_double_complex(dc);
    if (!problems.empty()) {
        std::string joined = "e1_matching: invalid double complex:";
        for (const std::string& p : problems) joined += "\n  " + p;
        throw std::invalid_argument(joined);
    }
    if (dc.cells.empty()) return {};

    // Column-by-column splitting, ascending q so B* twins propagate upward.
    std::map<std::pair<int, int>, std::map<int, LabelSplit>> splits;
    std::set<int> column_ps;
    for (const auto& [pq, cell] : dc.cells) column_ps.insert(pq.first);
    for (int p : column_ps) {
        std::vector<int> qs;
        for (const auto& [pq, cell] : dc.cells)
            if (pq.first == p) qs.push_back(pq.second);
        std::sort(qs.begin(), qs.end());
        for (int q : qs) {
            const auto* cell = dc.cell(p, q);
            int dim = static_cast<int>(cell->labels.size());
            if (dim == 0) continue;
            QMatrix up = dc.dv_matrix(p, q);
            std::set<int> labels(cell->labels.begin(), cell->labels.end());
            for (int label : labels) {
                LabelSplit& split = splits[{p, q}][label];

                // B: images of the twins chosen one cell below.
                auto below_it = splits.find({p, q - 1});
                if (below_it != splits.end()) {
                    auto label_it = below_it->second.find(label);
                    if (label_it != below_it->second.end()) {
                        QMatrix down = dc.dv_matrix(p, q - 1);
                        for (const auto& bstar : label_it->second.bstar)
                            split.b.push_back(down.apply(bstar));
                    }
                }

                SpanBuilder builder;
                for (const auto& b : split.b) builder.try_add(b);

                // H: extend B to a basis of ker(d_v) within the label block.
                std::vector<int> block;
                for (int idx = 0; idx < dim; ++idx)
                    if (cell->labels[static_cast<std::size_t>(idx)] == label) block.push_back(idx);
                std::vector<int> above_block;
                const auto* above = dc.cell(p, q + 1);
                if (above)
                    for (int idx = 0; idx < static_cast<int>(above->labels.size()); ++idx)
                        if (above->labels[static_cast<std::size_t>(idx)] == label)
                            above_block.push_back(idx);
                QMatrix up_block = up.submatrix(above_block, block);
                for (const auto& kv : up_block.nullspace_basis()) {
                    std::vector<Rat> full(static_cast<std::size_t>(dim), Rat(0));
                    for (std::size_t bi = 0; bi < block.size(); ++bi)
                        full[static_cast<std::size_t>(block[bi])] = kv[bi];
                    if (builder.try_add(full)) split.h.push_back(std::move(full));
                }

                // B*: extend ker(d_v) to the whole block with coordinate vectors.
                for (int idx : block) {
                    std::vector<Rat> e = unit_vector(dim, idx);
                    if (builder.try_add(e)) split.bstar.push_back(std::move(e));
                }
            }
        }
    }

    // Assemble the new basis of every diagonal: H and B* vectors in place,
    // plus b~ = d_tot(b*) replacing each b.
    int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
    for (const auto& [pq, cell] : dc.cells)
        if (!cell.labels.empty()) {
            lo = std::min(lo, pq.first - pq.second);
            hi = std::max(hi, pq.first - pq.second);
        }
    if (lo > hi) return {};
    int levels = hi - lo + 1;

    std::vector<std::vector<DiagonalBasisVec>> diagonal_basis(static_cast<std::size_t>(levels));
    for (const auto& [pq, label_splits] : splits) {
        auto [p, q] = pq;
        int level = p - q - lo;
        for (const auto& [label, split] : label_splits) {
            int copy = 0;
            for (const auto& h : split.h) {
                DiagonalBasisVec vec;
                vec.pieces[{p, q}] = h;
                vec.is_h = true;
                vec.p = p;
                vec.q = q;
                vec.label = label;
                vec.copy = copy++;
                diagonal_basis[static_cast<std::size_t>(level)].push_back(std::move(vec));
            }
            for (const auto& bstar : split.bstar) {
                DiagonalBasisVec vec;
                vec.pieces[{p, q}] = bstar;
                diagonal_basis[static_cast<std::size_t>(level)].push_back(std::move(vec));
                // Its b~ lives one diagonal down: d_tot(b*) = d_v(b*) + d_h(b*).
                // d_v(b*) is nonzero by construction, so the cell above exists
                // and level - 1 is in range.
                if (level == 0)
                    throw std::logic_error("e1_matching: B* vector on the lowest diagonal");
                DiagonalBasisVec tilde;
                std::vector<Rat> v_part = dc.dv_matrix(p, q).apply(bstar);
                std::vector<Rat> h_part = dc.dh_matrix(p, q).apply(bstar);
                if (!v_part.empty()) tilde.pieces[{p, q + 1}] = std::move(v_part);
                if (!h_part.empty()) tilde.pieces[{p - 1, q}] = std::move(h_part);
                diagonal_basis[static_cast<std::size_t>(level - 1)].push_back(std::move(tilde));
            }
        }
    }

    // Coordinates of each diagonal: concatenate its cells in map order.
    std::vector<std::map<std::pair<int, int>, int>> offsets(static_cast<std::size_t>(levels));
    std::vector<int> level_dim(static_cast<std::size_t>(levels), 0);
    for (const auto& [pq, cell] : dc.cells) {
        if (cell.labels.empty()) continue;
        int level = pq.first - pq.second - lo;
        offsets[static_cast<std::size_t>(level)][pq] = level_dim[static_cast<std::size_t>(level)];
        level_dim[static_cast<std::size_t>(level)] += static_cast<int>(cell.labels.size());
    }
    auto flatten = [&](int level, const DiagonalBasisVec& vec) {
        std::vector<Rat> out(static_cast<std::size_t>(level_dim[static_cast<std::size_t>(level)]),
                             Rat(0));
        for (const auto& [pq, piece] : vec.pieces) {
            auto off_it = offsets[static_cast<std::size_t>(level)].find(pq);
            if (off_it == offsets[static_cast<std::size_t>(level)].end()) continue;
            for (std::size_t c = 0; c < piece.size(); ++c)
                out[static_cast<std::size_t>(off_it->second) + c] = piece[c];
        }
        return out;
    };

    std::vector<QMatrix> basis_matrix(static_cast<std::size_t>(levels));
    std::vector<std::vector<int>> h_positions(static_cast<std::size_t>(levels));
    for (int level = 0; level < levels; ++level) {
        const auto& vecs = diagonal_basis[static_cast<std::size_t>(level)];
        QMatrix m(level_dim[static_cast<std::size_t>(level)], static_cast<int>(vecs.size()));
        for (std::size_t c = 0; c < vecs.size(); ++c) {
            std::vector<Rat> flat = flatten(level, vecs[c]);
            for (std::size_t r = 0; r < flat.size(); ++r)
                m(static_cast<int>(r), static_cast<int>(c)) = flat[r];
            if (vecs[c].is_h) h_positions[static_cast<std::size_t>(level)].push_back(static_cast<int>(c));
        }
        basis_matrix[static_cast<std::size_t>(level)] = std::move(m);
    }

    // Quotient complex Tot(H): express d_tot of each H vector in the new
    // basis of the diagonal below and keep the H coordinates.
    ExactComplex tot_h;
    for (int level = 0; level < levels; ++level)
        tot_h.dims.push_back(static_cast<int>(h_positions[static_cast<std::size_t>(level)].size()));
    std::vector<std::vector<const DiagonalBasisVec*>> h_vectors(static_cast<std::size_t>(levels));
    for (int level = 0; level < levels; ++level)
        for (int pos : h_positions[static_cast<std::size_t>(level)])
            h_vectors[static_cast<std::size_t>(level)].push_back(
                &diagonal_basis[static_cast<std::size_t>(level)][static_cast<std::size_t>(pos)]);

    for (int level = 0; level + 1 < levels; ++level) {
        QMatrix d(tot_h.dims[static_cast<std::size_t>(level)],
                  tot_h.dims[static_cast<std::size_t>(level + 1)]);
        for (int c = 0; c < d.cols(); ++c) {
            const DiagonalBasisVec& h = *h_vectors[static_cast<std::size_t>(level + 1)][static_cast<std::size_t>(c)];
            // d_tot(h) = d_h(h) since h lies in ker(d_v).
            DiagonalBasisVec image;
            const std::vector<Rat>& piece = h.pieces.at({h.p, h.q});
            image.pieces[{h.p - 1, h.q}] = dc.dh_matrix(h.p, h.q).apply(piece);
            std::vector<Rat> flat = flatten(level, image);
            auto coords = basis_matrix[static_cast<std::size_t>(level)].solve(flat);
            if (!coords)
                throw std::logic_error("e1_matching: diagonal basis change is not invertible");
            const auto& hp = h_positions[static_cast<std::size_t>(level)];
            for (std::size_t r = 0; r < hp.size(); ++r)
                d(static_cast<int>(r), c) = (*coords)[static_cast<std::size_t>(hp[r])];
        }
        tot_h.delta.push_back(std::move(d));
    }

    std::vector<MatchedPair> pairs = exact_sequence_matching(tot_h);

    std::vector<std::pair<E1Vertex, E1Vertex>> out;
    for (const MatchedPair& pair : pairs) {
        const DiagonalBasisVec& from =
            *h_vectors[static_cast<std::size_t>(pair.level_from)][static_cast<std::size_t>(pair.index_from)];
        const DiagonalBasisVec& to =
            *h_vectors[static_cast<std::size_t>(pair.level_to)][static_cast<std::size_t>(pair.index_to)];
        E1Vertex vf{from.p, from.q, from.label, from.copy};
        E1Vertex vt{to.p, to.q, to.label, to.copy};
        int r = vf.p - vt.p;
        if (!(r >= 1 && vt.q == vf.q - r + 1 && dc.poset.less(vt.label, vf.label)))
            throw std::logic_error(
                "e1_matching: matched edge violates the E1 edge rule; the construction is broken");
        out.push_back({vf, vt});
    }
    return out;
}

}  // namespace grassbs
