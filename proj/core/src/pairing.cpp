#include "grassbs/pairing.hpp"

#include <stdexcept>

namespace grassbs {

PairingResult pair_tables(const BettiTable& beta, const CohomologyTable& gamma) {
    if (beta.k() != gamma.k() || beta.n() != gamma.n())
        throw std::invalid_argument("pair_tables: (k, n) contexts do not match");

    for (const IntSeq& lambda : beta.lambda_support())
        if (!gamma.declared(lambda))
            throw std::invalid_argument(
                "pair_tables: cohomology table does not declare a weight required by the Betti "
                "table");

    PairingResult result;
    result.table = RankBettiTable(beta.k(), beta.k());
    for (const auto& [bkey, bval] : beta.entries())
        for (const auto& [gkey, gval] : gamma.entries()) {
            if (!(bkey.lambda == gkey.lambda)) continue;
            Rat product = bval * gval;
            result.grid.cells[{bkey.i, gkey.i, bkey.lambda}] = product;
            result.table.add(bkey.i - gkey.i, bkey.lambda, product);
        }
    return result;
}

std::optional<Obstruction> realizability_obstruction(const BettiTable& beta,
                                                     const std::vector<BottBundle>& probes) {
    std::vector<IntSeq> support = beta.lambda_support();
    for (std::size_t p = 0; p < probes.size(); ++p) {
        CohomologyTable gamma = bott_cohomology(beta.k(), beta.n(), probes[p], support);
        PairingResult paired = pair_tables(beta, gamma);
        MembershipResult membership = derived_cone_membership(paired.table);
        if (!membership.member) {
            Obstruction obstruction;
            obstruction.probe_index = static_cast<int>(p);
            obstruction.probe = probes[p];
            obstruction.paired = paired.table;
            obstruction.certificate = *membership.certificate;
            return obstruction;
        }
    }
    return std::nullopt;
}

}  // namespace grassbs
