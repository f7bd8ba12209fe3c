#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "grassbs/partition.hpp"
#include "grassbs/rational.hpp"

namespace grassbs {

struct TableKey {
    int i = 0;      // homological index (any integer)
    IntSeq lambda;  // length-k weight
    bool operator==(const TableKey&) const = default;
};

struct TableKeyLess {
    bool operator()(const TableKey& a, const TableKey& b) const {
        if (a.i != b.i) return a.i < b.i;
        return graded_lex_less(a.lambda, b.lambda);
    }
};

using EntryMap = std::map<TableKey, Rat, TableKeyLess>;

/// Finite-support map (i, lambda) -> rational over a fixed (k, n) context.
/// Entries with value zero are not stored. Immutable value semantics: copy
/// freely, share across threads.
class TableBase {
public:
    TableBase() = default;
    TableBase(int k, int n) : k_(k), n_(n) {}

    int k() const { return k_; }
    int n() const { return n_; }
    const EntryMap& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    Rat get(int i, const IntSeq& lambda) const;
    void set(int i, const IntSeq& lambda, Rat value);  // value 0 erases
    void add(int i, const IntSeq& lambda, const Rat& value);

    std::vector<IntSeq> lambda_support() const;  // distinct weights, graded-lex
    std::vector<int> homological_range() const;  // distinct i, ascending

    bool operator==(const TableBase&) const = default;

protected:
    void check_lambda(const IntSeq& lambda) const;

private:
    int k_ = 0, n_ = 0;
    EntryMap entries_;
};

/// Multiplicity Betti table: beta_{i,lambda} counts copies of the weight-
/// lambda irreducible among degree-i syzygies.
struct BettiTable : TableBase {
    using TableBase::TableBase;
};

/// Rank Betti table: each multiplicity rescaled by the GL(k) dimension.
struct RankBettiTable : TableBase {
    using TableBase::TableBase;
};

/// GL-cohomology table. The true table has infinitely many weight rows;
/// declared_support lists the weights for which this one is complete. A
/// weight absent from declared_support is unknown, a declared weight with no
/// stored entries is known zero.
class CohomologyTable : public TableBase {
public:
    CohomologyTable() = default;
    CohomologyTable(int k, int n) : TableBase(k, n) {}

    const std::set<IntSeq, GradedLex>& declared_support() const { return support_; }
    void declare(const IntSeq& lambda);
    bool declared(const IntSeq& lambda) const { return support_.count(lambda) > 0; }

    bool operator==(const CohomologyTable&) const = default;

private:
    std::set<IntSeq, GradedLex> support_;
};

/// Finite-support symmetric-function class in the Schur basis.
class SchurVector {
public:
    using Map = std::map<Partition, Rat, GradedLex>;

    const Map& coefficients() const { return coeffs_; }
    Rat get(const Partition& lambda) const;
    void set(const Partition& lambda, Rat value);
    void add(const Partition& lambda, const Rat& value);
    bool is_zero() const { return coeffs_.empty(); }

    SchurVector operator+(const SchurVector& rhs) const;
    SchurVector operator*(const Rat& scalar) const;
    bool operator==(const SchurVector&) const = default;

private:
    Map coeffs_;
};

// Rescales each entry by dim_gl(lambda, k). Linear and injective.
RankBettiTable to_rank(const BettiTable& beta);

// K-class of the table: a_lambda = sum_i (-1)^i beta_{i,lambda}. Requires
// every weight in the support to be a partition; throws with instructions to
// det-twist first otherwise.
SchurVector k_class(const BettiTable& beta);

// Semantic diagnostics: negative values, cohomology degree out of range,
// entries outside the declared support. Empty means clean.
std::vector<std::string> validate(const BettiTable& table);
std::vector<std::string> validate(const RankBettiTable& table);
std::vector<std::string> validate(const CohomologyTable& table);

}  // namespace grassbs
