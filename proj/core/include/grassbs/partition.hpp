#pragma once

#include <compare>
#include <vector>

#include "grassbs/rational.hpp"

namespace grassbs {

/// Weakly decreasing integer sequence of fixed length k (an element of the
/// extended Young's lattice for GL(k)). Entries may be negative. Immutable
/// after construction.
class IntSeq {
public:
    IntSeq() = default;
    explicit IntSeq(std::vector<int> parts);  // throws std::invalid_argument if not weakly decreasing
    IntSeq(std::initializer_list<int> parts);

    static IntSeq zero(int k);

    int length() const { return static_cast<int>(parts_.size()); }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& parts() const { return parts_; }
    long sum() const;
    bool nonnegative() const;

    bool operator==(const IntSeq&) const = default;

private:
    std::vector<int> parts_;
};

/// Partition: weakly decreasing, nonnegative, trailing zeros dropped.
/// Row/column indices in box-level queries are 0-based.
class Partition {
public:
    Partition() = default;  // empty partition
    explicit Partition(std::vector<int> parts);  // throws on negative or increasing parts
    Partition(std::initializer_list<int> parts);

    static Partition from_seq(const IntSeq& seq);  // requires seq nonnegative

    int rows() const { return static_cast<int>(parts_.size()); }
    int row(int i) const { return i < rows() ? parts_[static_cast<std::size_t>(i)] : 0; }
    int size() const;  // |lambda|, total box count
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    IntSeq to_seq(int k) const;  // pad with zeros to length k; throws if rows() > k
    Partition conjugate() const;
    bool has_box(int row, int col) const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Containment order. For IntSeq the lengths must agree (throws otherwise);
// partitions compare as Young diagrams of any lengths.
// contains(lambda, mu) is true iff lambda_i <= mu_i for all i, i.e. lambda
// fits inside mu.
bool contains(const IntSeq& lambda, const IntSeq& mu);
bool strictly_contains(const IntSeq& lambda, const IntSeq& mu);
bool contains(const Partition& lambda, const Partition& mu);
bool strictly_contains(const Partition& lambda, const Partition& mu);

// Adds a to every part; invertible.
IntSeq det_twist(const IntSeq& lambda, int a);

// Dimension of the irreducible GL(k) representation of highest weight lambda
// (Weyl dimension formula). Twist-invariant, so negative parts are fine.
// Requires lambda.length() == k.
Int dim_gl(const IntSeq& lambda, int k);
Int dim_gl(const Partition& lambda, int k);  // pads to length k

// Canonical order used everywhere an ordering is needed: by |lambda| first,
// then reverse-lexicographic, so e.g. (2,0) precedes (1,1). Sequences of
// different lengths order by length first.
bool graded_lex_less(const IntSeq& a, const IntSeq& b);
bool graded_lex_less(const Partition& a, const Partition& b);

struct GradedLex {
    bool operator()(const IntSeq& a, const IntSeq& b) const { return graded_lex_less(a, b); }
    bool operator()(const Partition& a, const Partition& b) const { return graded_lex_less(a, b); }
};

// Number of standard Young tableaux of shape lambda (hook length formula).
Int syt_count(const Partition& lambda);

// Number of standard Young tableaux of skew shape lambda/mu, by the Aitken
// determinant |lambda/mu|! * det(1/(lambda_i - mu_j - i + j)!) with 1/m! = 0
// for m < 0. Throws if mu is not contained in lambda.
Int skew_syt_count(const Partition& lambda, const Partition& mu);

// All partitions with at most k parts, each part <= w, in graded-lex order.
// Count is binomial(k + w, k).
std::vector<Partition> rectangle_partitions(int k, int w);

// All partitions of size <= max_size with at most max_rows rows, graded-lex.
std::vector<Partition> partitions_up_to_size(int max_size, int max_rows);

struct Box {
    int row = 0, col = 0;
    bool operator==(const Box&) const = default;
    auto operator<=>(const Box&) const = default;
};

// Boxes of lambda/mu in row-major order. Throws if mu not contained in lambda.
std::vector<Box> skew_boxes(const Partition& lambda, const Partition& mu);

// A border strip is a nonempty, edge-connected skew shape containing no 2x2
// square.
bool is_border_strip(const Partition& lambda, const Partition& mu);

}  // namespace grassbs
