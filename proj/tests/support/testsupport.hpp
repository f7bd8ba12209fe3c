#pragma once

#include <random>
#include <vector>

#include "grassbs/complexes.hpp"
#include "grassbs/partition.hpp"
#include "grassbs/tables.hpp"

// Independent oracles and shared fixtures for the test suites. Everything
// here stays deliberately naive: enumeration instead of formulas, so the
// library's closed forms are checked against something that cannot share
// their bugs.
namespace grassbs::testing {

// Number of standard Young tableaux by enumerating all |lambda|! fillings.
Int brute_force_syt(const Partition& lambda);

// Same for the skew shape lambda/mu.
Int brute_force_skew_syt(const Partition& lambda, const Partition& mu);

// Backtracking perfect-matching existence on a bipartite graph.
bool brute_force_has_perfect_matching(int nl, int nr, const std::vector<std::vector<int>>& adj);

// All perfect matchings of a bipartite graph as left->right assignments.
std::vector<std::vector<int>> enumerate_perfect_matchings(int nl, int nr,
                                                          const std::vector<std::vector<int>>& adj);

// The worked (2,3) pairing fixture: input tables, their pairing, and the
// unique pure-table decomposition.
BettiTable example_pairing_beta();
CohomologyTable example_pairing_gamma();
RankBettiTable example_pairing_phi();

// The six extremal (2,3) tables with partition sizes up to 3. The third is
// the table of the quotient by the maximal-minor ideal.
std::vector<BettiTable> extremal_tables();

// The table that satisfies the HK equations yet fails the pairing
// obstruction, and the table it pairs to against the trivial bundle.
BettiTable stably_realizable_candidate();
RankBettiTable nonmatchable_paired_table();

// The 8-dimensional labeled double complex whose naive spectral-sequence
// differentials cannot be assembled into a valid matching.
DoubleComplex cautionary_complex();

// Random nonnegative-integer rank table over (k, k); roughly half the draws
// are positive combinations of shifted pure tables (guaranteed members).
RankBettiTable random_rank_table(std::mt19937& rng, int k, int max_vertices);

// Random exact sequence with a few levels, each dimension at most max_dim,
// obtained by conjugating a split exact complex with random unimodular
// matrices.
ExactComplex random_exact_complex(std::mt19937& rng, int max_dim);

}  // namespace grassbs::testing
