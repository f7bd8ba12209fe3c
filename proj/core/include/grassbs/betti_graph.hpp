#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grassbs/partition.hpp"
#include "grassbs/rational.hpp"
#include "grassbs/tables.hpp"

namespace grassbs {

/// Graph model of a square-matrix rank Betti table: beta_{i,lambda} vertices
/// labeled (i, lambda), and an edge (i,lambda) <- (i+1,mu) whenever
/// lambda is strictly contained in mu. Bipartite by the parity of i.
struct BettiGraph {
    struct Vertex {
        int i = 0;
        IntSeq lambda;
        int copy = 0;
        bool operator==(const Vertex&) const = default;
    };
    int k = 0;
    std::vector<Vertex> vertices;            // canonical order: (i, graded-lex lambda, copy)
    std::vector<std::pair<int, int>> edges;  // (lower-index vertex, upper-index vertex)
};

// Requires a (k, k) context and nonnegative integer entries.
BettiGraph build_graph(const RankBettiTable& table);

struct GraphMatching {
    std::vector<std::pair<int, int>> pairs;  // (lower vertex, upper vertex), canonical order
    bool perfect = false;
};

// Maximum matching on the Betti graph; deterministic.
GraphMatching max_matching(const BettiGraph& graph);

/// One homologically-shifted pure table summand: unit entries at (i, lambda)
/// and (i+1, mu) with lambda strictly contained in mu, taken with a positive
/// integer coefficient.
struct PureTableSummand {
    int i = 0;
    IntSeq lambda;
    IntSeq mu;
    Int coefficient = 1;
    bool operator==(const PureTableSummand&) const = default;
};

/// A violated convexity inequality. Sources S_i live on positions of one
/// parity (odd_sources selects which; the two versions are interchangeable),
/// each S_i convex within the table's support. The neighbor sets Gamma_j are
/// induced: Gamma_j = {eta : mu < eta for some mu in S_{j-1}} union
/// {eta : eta < mu for some mu in S_{j+1}}, restricted to the support. The
/// inequality sum_Gamma beta >= sum_S beta fails: rhs > lhs.
struct ConvexityCertificate {
    bool odd_sources = true;
    std::map<int, std::vector<IntSeq>> sources;
    std::map<int, std::vector<IntSeq>> neighbors;
    Int lhs = 0, rhs = 0;
};

// Recomputes both sides of the certificate's inequality against a table,
// deriving the neighbor sets from the stored sources. Returns (lhs, rhs).
std::pair<Rat, Rat> evaluate_certificate(const ConvexityCertificate& certificate,
                                         const RankBettiTable& table);

struct MembershipResult {
    bool member = false;
    // Denominators of a rational input are cleared first; the decomposition
    // sums entrywise to scale * input. Membership itself is scale-invariant.
    Int scale = 1;
    std::vector<PureTableSummand> decomposition;
    std::optional<ConvexityCertificate> certificate;
};

// Decides membership in the derived cone for square matrices: a perfect
// matching on the Betti graph yields the pure-table decomposition; otherwise
// a Hall violator, convexified within the support, becomes the certificate.
// Throws on negative entries or a non-square context.
MembershipResult derived_cone_membership(const RankBettiTable& table);

// The alternating sum over all entries; zero is necessary for membership.
Rat rank_condition(const RankBettiTable& table);

struct InequalityValue {
    Rat lhs, rhs;
};

// Antichain inequality for a two-column table (support in columns 0 and 1):
// lhs = sum over Gamma = {lambda : lambda < mu for some mu in S} of column-0
// entries, rhs = sum over S of column-1 entries. S is a set of weight labels,
// interpreted verbatim; labels absent from the table contribute zero.
InequalityValue antichain_inequality(const RankBettiTable& table, const std::vector<IntSeq>& s);

std::string export_dot(const BettiGraph& graph);

}  // namespace grassbs
