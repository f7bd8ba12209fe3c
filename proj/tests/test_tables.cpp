#include <doctest.h>

#include "grassbs/tables.hpp"
#include "testsupport.hpp"

using namespace grassbs;

TEST_CASE("to_rank rescales by the GL dimension") {
    BettiTable beta(2, 3);
    beta.set(1, IntSeq{1, 1}, 9);
    beta.set(2, IntSeq{3, 1}, 1);
    RankBettiTable rank = to_rank(beta);
    CHECK(rank.get(1, IntSeq{1, 1}) == 9);  // d_{(1,1)}(2) = 1
    CHECK(rank.get(2, IntSeq{3, 1}) == 3);  // d_{(3,1)}(2) = 3
    CHECK(to_rank(BettiTable(2, 3)).empty());
}

TEST_CASE("to_rank is linear and injective on support") {
    BettiTable a(2, 2), b(2, 2);
    a.set(0, IntSeq{2, 0}, Rat(1) / 2);
    a.set(1, IntSeq{3, 1}, 2);
    b.set(0, IntSeq{2, 0}, 3);
    BettiTable sum(2, 2);
    for (const auto& [key, value] : a.entries()) sum.add(key.i, key.lambda, value);
    for (const auto& [key, value] : b.entries()) sum.add(key.i, key.lambda, value);
    RankBettiTable ra = to_rank(a), rb = to_rank(b), rsum = to_rank(sum);
    for (const auto& [key, value] : rsum.entries())
        CHECK(value == ra.get(key.i, key.lambda) + rb.get(key.i, key.lambda));
    for (const auto& [key, value] : a.entries())
        CHECK(ra.get(key.i, key.lambda) / value == Rat(dim_gl(key.lambda, 2)));
}

TEST_CASE("k_class alternating sums") {
    BettiTable rp2(2, 3);
    rp2.set(0, IntSeq{0, 0}, 1);
    rp2.set(1, IntSeq{1, 1}, 3);
    rp2.set(2, IntSeq{2, 1}, 1);
    SchurVector cls = k_class(rp2);
    CHECK(cls.get(Partition{}) == 1);
    CHECK(cls.get(Partition{1, 1}) == -3);
    CHECK(cls.get(Partition{2, 1}) == 1);

    CHECK(k_class(BettiTable(2, 3)).is_zero());

    BettiTable cancel(2, 3);
    cancel.set(0, IntSeq{1, 0}, 5);
    cancel.set(1, IntSeq{1, 0}, 5);
    CHECK(k_class(cancel).is_zero());

    BettiTable negative(2, 3);
    negative.set(0, IntSeq{0, -1}, 1);
    CHECK_THROWS_WITH_AS(k_class(negative), doctest::Contains("det-twist"), std::invalid_argument);
}

TEST_CASE("k_class is additive and negates under homological shift") {
    BettiTable beta = testing::example_pairing_beta();
    BettiTable shifted(beta.k(), beta.n());
    for (const auto& [key, value] : beta.entries()) shifted.set(key.i + 1, key.lambda, value);
    SchurVector a = k_class(beta), b = k_class(shifted);
    CHECK((a + b).is_zero());
}

TEST_CASE("validate reports semantic problems") {
    BettiTable good = testing::example_pairing_beta();
    CHECK(validate(good).empty());

    RankBettiTable bad(2, 2);
    bad.set(0, IntSeq{1, 0}, -1);
    CHECK(validate(bad).size() == 1);

    CohomologyTable gamma(2, 3);
    gamma.declare(IntSeq{1, 0});
    gamma.set(3, IntSeq{1, 0}, 1);  // dim Gr(2,3) = 2
    auto diagnostics = validate(gamma);
    REQUIRE(diagnostics.size() == 1);
    CHECK(diagnostics[0].find("q out of range") != std::string::npos);

    CohomologyTable undeclared(2, 3);
    undeclared.set(1, IntSeq{1, 0}, 1);
    CHECK(validate(undeclared).size() == 1);
}

TEST_CASE("entry maps stay canonically sorted and drop zeros") {
    BettiTable t(2, 2);
    t.set(0, IntSeq{1, 1}, 1);
    t.set(0, IntSeq{2, 0}, 1);
    t.set(-1, IntSeq{5, 5}, 1);
    std::vector<TableKey> keys;
    for (const auto& [key, value] : t.entries()) keys.push_back(key);
    REQUIRE(keys.size() == 3);
    CHECK(keys[0].i == -1);
    CHECK(keys[1].lambda == IntSeq{2, 0});  // graded-lex: (2,0) before (1,1)
    CHECK(keys[2].lambda == IntSeq{1, 1});

    t.set(0, IntSeq{2, 0}, 0);
    CHECK(t.entries().size() == 2);
    CHECK(t.get(0, IntSeq{2, 0}) == 0);
    CHECK_THROWS_AS(t.set(0, IntSeq{1}, 1), std::invalid_argument);
}
