#pragma once

#include <string>
#include <vector>

#include "grassbs/partition.hpp"
#include "grassbs/rational.hpp"
#include "grassbs/tables.hpp"

namespace grassbs {

/// One irreducible homogeneous summand S_delta(Q) (x) det(S)^a with a
/// positive integer multiplicity, where S and Q are the tautological sub- and
/// quotient bundles on Gr(k, n). The line bundle O(m) is det(S)^{-m}, so
/// det_power = -m. Restricting the subbundle side to determinant powers keeps
/// every twist E (x) S_lambda(S) irreducible without Littlewood-Richardson
/// decompositions.
struct BottComponent {
    int det_power = 0;
    Partition quotient_weight;
    Int multiplicity = 1;
    bool operator==(const BottComponent&) const = default;
};

struct BottBundle {
    std::vector<BottComponent> components;

    static BottBundle trivial() { return line(0); }
    static BottBundle line(int m) { return BottBundle{{BottComponent{-m, Partition{}, 1}}}; }

    std::string to_string() const;
    bool operator==(const BottBundle&) const = default;
};

// Parses expressions like "O", "O(1)+O(-1)", "Q[2,1]*O(-1)", "3*O(2)".
// Terms are separated by '+'; a term multiplies integer factors
// (multiplicity), O(m) factors and at most one Q[...] factor. Throws
// FormatError on malformed input.
BottBundle parse_bundle(const std::string& text);

// GL-cohomology table of the bundle over the requested weights: for each
// component (a, delta) and weight lambda, the length-n weight
// (delta, lambda + a) is pushed through the dotted Weyl action — add
// rho = (n-1, ..., 1, 0); a repeated entry kills all cohomology; otherwise
// sort descending, let ell be the number of exchanged pairs, subtract rho —
// and the GL(n) dimension of the result lands in degree ell. The returned
// table declares exactly the requested weights.
CohomologyTable bott_cohomology(int k, int n, const BottBundle& bundle,
                                const std::vector<IntSeq>& lambdas);

}  // namespace grassbs
