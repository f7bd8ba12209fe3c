#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "grassbs/betti_graph.hpp"
#include "grassbs/bott.hpp"
#include "grassbs/tables.hpp"

namespace grassbs {

/// The (p, q, lambda) product grid behind the pairing; the output table entry
/// at (i, lambda) is the sum of the lambda cells along the diagonal p - q = i.
struct PairingGrid {
    struct CellKeyLess {
        bool operator()(const std::tuple<int, int, IntSeq>& a,
                        const std::tuple<int, int, IntSeq>& b) const {
            if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
            if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
            return graded_lex_less(std::get<2>(a), std::get<2>(b));
        }
    };
    std::map<std::tuple<int, int, IntSeq>, Rat, CellKeyLess> cells;
};

struct PairingResult {
    RankBettiTable table;  // over (k, k)
    PairingGrid grid;
};

// The equivariant pairing: phi_{i,lambda} = sum_{p-q=i} beta_{p,lambda} *
// gamma_{q,lambda}. Takes a multiplicity Betti table and a cohomology table
// over the same (k, n) and produces a rank table over (k, k). Every weight in
// beta's support must be declared in gamma; throws otherwise.
PairingResult pair_tables(const BettiTable& beta, const CohomologyTable& gamma);

struct Obstruction {
    int probe_index = 0;
    BottBundle probe;
    RankBettiTable paired;
    ConvexityCertificate certificate;
};

// Pairs beta against each probe's cohomology table in order and returns the
// first probe whose paired table falls outside the derived cone, with the
// certificate; nullopt when every probe passes. A realizable beta can never
// produce an obstruction.
std::optional<Obstruction> realizability_obstruction(const BettiTable& beta,
                                                     const std::vector<BottBundle>& probes);

}  // namespace grassbs
