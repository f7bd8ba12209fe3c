#include <doctest.h>

#include <random>

#include "grassbs/betti_graph.hpp"
#include "grassbs/matching.hpp"
#include "testsupport.hpp"

using namespace grassbs;

TEST_CASE("graph construction") {
    BettiGraph graph = build_graph(testing::example_pairing_phi());
    CHECK(graph.vertices.size() == 32);

    RankBettiTable lone(2, 2);
    lone.set(0, IntSeq{1, 0}, 1);
    BettiGraph g1 = build_graph(lone);
    CHECK(g1.vertices.size() == 1);
    CHECK(g1.edges.empty());

    RankBettiTable pair_table(1, 1);
    pair_table.set(0, IntSeq{1}, 1);
    pair_table.set(1, IntSeq{2}, 1);
    BettiGraph g2 = build_graph(pair_table);
    CHECK(g2.edges.size() == 1);

    RankBettiTable fractional(2, 2);
    fractional.set(0, IntSeq{1, 0}, Rat(1) / 2);
    CHECK_THROWS_AS(build_graph(fractional), std::invalid_argument);

    RankBettiTable rectangular(2, 3);
    CHECK_THROWS_AS(build_graph(rectangular), std::invalid_argument);
}

TEST_CASE("maximum matching") {
    CHECK(max_matching(build_graph(testing::example_pairing_phi())).pairs.size() == 16);
    CHECK(max_matching(BettiGraph{}).pairs.empty());

    // Star K_{1,3}: one center below, three neighbors above.
    RankBettiTable star(1, 1);
    star.set(0, IntSeq{0}, 1);
    star.set(1, IntSeq{1}, 3);
    GraphMatching m = max_matching(build_graph(star));
    CHECK(m.pairs.size() == 1);
    CHECK_FALSE(m.perfect);
}

TEST_CASE("the worked pairing table decomposes uniquely") {
    MembershipResult result = derived_cone_membership(testing::example_pairing_phi());
    REQUIRE(result.member);
    CHECK(result.scale == 1);
    REQUIRE(result.decomposition.size() == 4);
    auto has = [&](int i, IntSeq lambda, IntSeq mu, int c) {
        for (const PureTableSummand& s : result.decomposition)
            if (s.i == i && s.lambda == lambda && s.mu == mu && s.coefficient == c) return true;
        return false;
    };
    CHECK(has(-1, IntSeq{1, 0}, IntSeq{2, 0}, 3));
    CHECK(has(-1, IntSeq{1, 0}, IntSeq{2, 2}, 1));
    CHECK(has(0, IntSeq{1, 0}, IntSeq{1, 1}, 9));
    CHECK(has(0, IntSeq{1, 0}, IntSeq{3, 1}, 3));
}

TEST_CASE("the non-realizable paired table is rejected with an isolating certificate") {
    MembershipResult result = derived_cone_membership(testing::nonmatchable_paired_table());
    REQUIRE_FALSE(result.member);
    REQUIRE(result.certificate.has_value());
    const ConvexityCertificate& cert = *result.certificate;
    // The empty weight at position 0 has no neighbors at all.
    CHECK_FALSE(cert.odd_sources);
    REQUIRE(cert.sources.count(0));
    CHECK(cert.sources.at(0) == std::vector<IntSeq>{IntSeq{0, 0}});
    CHECK(cert.lhs == 0);
    CHECK(cert.rhs == 1);
    auto [lhs, rhs] = evaluate_certificate(cert, testing::nonmatchable_paired_table());
    CHECK(lhs == 0);
    CHECK(rhs == 1);
}

TEST_CASE("a shifted pure table is its own decomposition") {
    RankBettiTable pure(2, 2);
    pure.set(-3, IntSeq{0, -1}, 1);
    pure.set(-2, IntSeq{2, 1}, 1);
    MembershipResult result = derived_cone_membership(pure);
    REQUIRE(result.member);
    REQUIRE(result.decomposition.size() == 1);
    CHECK(result.decomposition[0] ==
          PureTableSummand{-3, IntSeq{0, -1}, IntSeq{2, 1}, 1});
}

TEST_CASE("rank condition") {
    CHECK(rank_condition(testing::example_pairing_phi()) == 0);
    RankBettiTable one(2, 2);
    one.set(0, IntSeq{1, 0}, 1);
    CHECK(rank_condition(one) == 1);
    CHECK(rank_condition(RankBettiTable(2, 2)) == 0);
}

TEST_CASE("antichain inequalities") {
    RankBettiTable pure(1, 1);
    pure.set(0, IntSeq{1}, 1);
    pure.set(1, IntSeq{2}, 1);
    InequalityValue v = antichain_inequality(pure, {IntSeq{2}, IntSeq{1}, IntSeq{0}});
    CHECK(v.lhs >= 1);
    CHECK(v.rhs == 1);

    CHECK(antichain_inequality(pure, {}).lhs == 0);
    CHECK(antichain_inequality(pure, {}).rhs == 0);

    RankBettiTable t(1, 1);
    t.set(0, IntSeq{1}, 2);
    t.set(1, IntSeq{2}, 1);
    t.set(1, IntSeq{1}, 1);
    InequalityValue w = antichain_inequality(t, {IntSeq{2}, IntSeq{1}, IntSeq{0}});
    CHECK(w.lhs == 2);
    CHECK(w.rhs == 2);

    RankBettiTable three_cols(1, 1);
    three_cols.set(2, IntSeq{0}, 1);
    CHECK_THROWS_AS(antichain_inequality(three_cols, {}), std::invalid_argument);
}

TEST_CASE("two-column antichain example from the spec") {
    // {(0,(1)):2, (1,(2)):1, (1,(1,1)):1} with S the full lower set.
    RankBettiTable t(2, 2);
    t.set(0, IntSeq{1, 0}, 2);
    t.set(1, IntSeq{2, 0}, 1);
    t.set(1, IntSeq{1, 1}, 1);
    InequalityValue v = antichain_inequality(
        t, {IntSeq{2, 0}, IntSeq{1, 1}, IntSeq{1, 0}, IntSeq{0, 0}});
    CHECK(v.lhs == 2);
    CHECK(v.rhs == 2);
}

namespace {

// Exhaustive Hall check over label subsets of one side.
bool hall_violated(const RankBettiTable& table, bool odd_side) {
    std::vector<TableKey> side_entries;
    for (const auto& [key, value] : table.entries()) {
        bool odd = ((key.i % 2) + 2) % 2 == 1;
        if (odd == odd_side) side_entries.push_back(key);
    }
    std::size_t n = side_entries.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        Rat size = 0, neighbors = 0;
        std::vector<TableKey> chosen;
        for (std::size_t b = 0; b < n; ++b)
            if (mask & (std::size_t{1} << b)) {
                chosen.push_back(side_entries[b]);
                size += table.get(side_entries[b].i, side_entries[b].lambda);
            }
        for (const auto& [key, value] : table.entries()) {
            bool odd = ((key.i % 2) + 2) % 2 == 1;
            if (odd == odd_side) continue;
            bool adjacent = false;
            for (const TableKey& s : chosen) {
                if (s.i == key.i + 1 && strictly_contains(key.lambda, s.lambda)) adjacent = true;
                if (s.i == key.i - 1 && strictly_contains(s.lambda, key.lambda)) adjacent = true;
            }
            if (adjacent) neighbors += value;
        }
        if (neighbors < size) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("derived cone equivalence on random tables") {
    std::mt19937 rng(20260809);
    for (int trial = 0; trial < 120; ++trial) {
        RankBettiTable table = testing::random_rank_table(rng, 2, 14);
        MembershipResult result = derived_cone_membership(table);

        bool rank_zero = rank_condition(table) == 0;
        bool violated = hall_violated(table, true) || hall_violated(table, false);
        CHECK(result.member == (rank_zero && !violated));

        if (result.member) {
            RankBettiTable resum(2, 2);
            for (const PureTableSummand& s : result.decomposition) {
                CHECK(strictly_contains(s.lambda, s.mu));
                CHECK(s.coefficient > 0);
                resum.add(s.i, s.lambda, Rat(s.coefficient));
                resum.add(s.i + 1, s.mu, Rat(s.coefficient));
            }
            RankBettiTable scaled(2, 2);
            for (const auto& [key, value] : table.entries())
                scaled.set(key.i, key.lambda, value * Rat(result.scale));
            CHECK(resum.entries() == scaled.entries());
        } else {
            REQUIRE(result.certificate.has_value());
            auto [lhs, rhs] = evaluate_certificate(*result.certificate, table);
            CHECK(rhs > lhs);
            // Source sets are convex within the support.
            for (const auto& [i, labels] : result.certificate->sources)
                for (const auto& [key, value] : table.entries()) {
                    if (key.i != i) continue;
                    bool above = false, below = false;
                    for (const IntSeq& mu : labels) {
                        if (contains(mu, key.lambda)) below = true;
                        if (contains(key.lambda, mu)) above = true;
                    }
                    if (above && below)
                        CHECK(std::find(labels.begin(), labels.end(), key.lambda) != labels.end());
                }
        }

        // Scale invariance.
        for (int c : {2, 3}) {
            RankBettiTable scaled(2, 2);
            for (const auto& [key, value] : table.entries())
                scaled.set(key.i, key.lambda, value * c);
            CHECK(derived_cone_membership(scaled).member == result.member);
        }
    }
}

TEST_CASE("two-column membership agrees with the antichain criterion") {
    std::mt19937 rng(7);
    std::vector<IntSeq> pool;
    for (int a = -1; a <= 2; ++a)
        for (int b = -1; b <= a; ++b) pool.push_back(IntSeq{a, b});
    for (int trial = 0; trial < 80; ++trial) {
        RankBettiTable table(2, 2);
        int entries = std::uniform_int_distribution<int>(2, 5)(rng);
        for (int e = 0; e < entries; ++e)
            table.add(std::uniform_int_distribution<int>(0, 1)(rng),
                      pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)],
                      std::uniform_int_distribution<int>(1, 3)(rng));

        // All subsets of column-1 labels that are downward closed within the
        // support.
        std::vector<IntSeq> upper;
        for (const auto& [key, value] : table.entries())
            if (key.i == 1) upper.push_back(key.lambda);
        bool all_hold = rank_condition(table) == 0;
        for (std::size_t mask = 0; mask < (std::size_t{1} << upper.size()) && all_hold; ++mask) {
            std::vector<IntSeq> s;
            for (std::size_t b = 0; b < upper.size(); ++b)
                if (mask & (std::size_t{1} << b)) s.push_back(upper[b]);
            bool closed = true;
            for (const IntSeq& inside : upper) {
                bool dominated = false;
                for (const IntSeq& mu : s)
                    if (contains(inside, mu)) dominated = true;
                if (dominated && std::find(s.begin(), s.end(), inside) == s.end()) closed = false;
            }
            if (!closed) continue;
            InequalityValue v = antichain_inequality(table, s);
            if (v.lhs < v.rhs) all_hold = false;
        }
        CHECK(derived_cone_membership(table).member == all_hold);
    }
}

TEST_CASE("dot export names every vertex") {
    BettiGraph graph = build_graph(testing::nonmatchable_paired_table());
    std::string dot = export_dot(graph);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("(0, [0,0])") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
}
