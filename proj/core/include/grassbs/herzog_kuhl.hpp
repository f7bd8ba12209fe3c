#pragma once

#include <mutex>
#include <utility>
#include <vector>

#include "grassbs/partition.hpp"
#include "grassbs/rational.hpp"
#include "grassbs/tables.hpp"

namespace grassbs {

// Change-of-basis coefficient b_{lambda,mu} for the substitution t -> 1-t in
// k variables, computed from the content-product form
//   (-1)^{|mu|} f^{lambda/mu} / |lambda/mu|! * prod_{(i,j) in lambda/mu} (k+j-i).
// Zero when mu is not contained in lambda.
Rat stanley_b(const Partition& lambda, const Partition& mu, int k);

// The equivalent tableau-counting form
//   (-1)^{|mu|} (f^{lambda/mu} f^mu / f^lambda) C(|lambda|,|mu|) d_lambda(k)/d_mu(k).
// Requires lambda to have at most k rows. Kept separate so both routes stay
// independently testable.
Rat stanley_b_tableau_form(const Partition& lambda, const Partition& mu, int k);

/// Cache of b_{lambda,mu}(k) coefficients, computed on demand. Safe for
/// concurrent use; results are identical regardless of thread interleaving.
class BasisChangeMatrix {
public:
    explicit BasisChangeMatrix(int k) : k_(k) {}
    int k() const { return k_; }
    Rat coefficient(const Partition& lambda, const Partition& mu) const;

private:
    struct PairLess {
        bool operator()(const std::pair<Partition, Partition>& a,
                        const std::pair<Partition, Partition>& b) const {
            if (a.first != b.first) return graded_lex_less(a.first, b.first);
            return graded_lex_less(a.second, b.second);
        }
    };
    int k_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<Partition, Partition>, Rat, PairLess> cache_;
};

// All partitions mu contained in lambda, graded-lex order.
std::vector<Partition> subpartitions(const Partition& lambda);

// Image of f under the linear map s_lambda(t) -> s_lambda(1-t), expanded in
// the Schur basis. An involution. Throws when some weight in the support has
// more than k parts.
SchurVector substitute_one_minus_t(const SchurVector& f, int k);

/// The equivariant Herzog-Kuhl linear system on (k, n): one equation per
/// partition mu inside the k x (n-k) rectangle. The coefficient of the table
/// entry (i, lambda) in row mu is
///   (-1)^i d_lambda(k) * f^{lambda/mu} f^mu / f^lambda * C(|lambda|,|mu|)
/// when mu is contained in lambda, and 0 otherwise.
class HKSystem {
public:
    HKSystem(int k, int n);

    int k() const { return k_; }
    int n() const { return n_; }
    const std::vector<Partition>& row_partitions() const { return rows_; }

    Rat coefficient(const Partition& mu, int i, const Partition& lambda) const;

    // One residual per row, in row order. The table version requires every
    // support weight to be a partition (det-twist first otherwise). The
    // SchurVector version evaluates rows against a K-class directly.
    std::vector<Rat> residuals(const BettiTable& beta) const;
    std::vector<Rat> residuals(const SchurVector& k_class) const;

private:
    int k_, n_;
    std::vector<Partition> rows_;
};

HKSystem hk_system(int k, int n);

// Residuals of the table against hk_system(table.k(), table.n()).
std::vector<Rat> hk_check(const BettiTable& beta);

// The ratio Prob(T splits along mu | T standard) / Prob(T splits along mu)
// over uniformly random fillings of lambda, computed by exhaustive
// enumeration of all |lambda|! fillings. Requires mu contained in lambda and
// |lambda| <= max_boxes.
Rat split_probability_oracle(const Partition& lambda, const Partition& mu, int max_boxes = 8);

// Tables supported on columns 0..n-k+1 with one entry per column plus at most
// one extra ("simple" and "pure" supports), all weights of size <= max_size,
// and strict containment between consecutive columns. A support is emitted
// when the Herzog-Kuhl system restricted to it has a one-dimensional solution
// space with a strictly positive generator; the table is that generator
// scaled to the primitive integer point.
std::vector<BettiTable> enumerate_pure_tables(int k, int n, int max_size);

struct BorderStripClassification {
    bool simple_hypothesis = false;
    bool bound_ok = false;
};

// For a chain lambda < mu < nu (strict containment): simple_hypothesis holds
// when mu/lambda and nu/mu are both border strips and nu/mu starts adjacent
// to and right of mu/lambda. Precisely: let the end of mu/lambda be its box
// of minimal row and, within that row, maximal column; let the start of nu/mu
// be its box of maximal row and, within that row, minimal column. The strips
// are adjacent-and-to-the-right when the start box sits in the same row as
// the end box and in the column immediately to its right. bound_ok holds when
// nu_2 <= lambda_1 + 1.
BorderStripClassification classify_border_strips(const Partition& lambda, const Partition& mu,
                                                 const Partition& nu);

}  // namespace grassbs
