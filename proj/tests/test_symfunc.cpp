#include <doctest.h>

#include "grassbs/symfunc.hpp"

using namespace grassbs;

TEST_CASE("schur polynomials by tableau sums") {
    // s_(1) = e_1, s_(1,1) = e_2 in two variables.
    Poly s1 = schur_poly(Partition{1}, 2);
    CHECK(s1.terms().size() == 2);
    Poly s11 = schur_poly(Partition{1, 1}, 2);
    REQUIRE(s11.terms().size() == 1);
    CHECK(s11.terms().begin()->first == Poly::Expo{1, 1});
    // Dimension count: number of monomials of s_(2,1) in 3 variables weighs
    // to d_(2,1)(3) = 8.
    Rat total = 0;
    for (const auto& [e, c] : schur_poly(Partition{2, 1}, 3).terms()) total += c;
    CHECK(total == 8);
    CHECK(schur_poly(Partition{1, 1, 1}, 2).is_zero());
}

TEST_CASE("schur expansion round trip") {
    SchurVector v = schur_expand_oracle(schur_poly(Partition{2, 1}, 2));
    CHECK(v.coefficients().size() == 1);
    CHECK(v.get(Partition{2, 1}) == 1);
}

TEST_CASE("(1-t1)(1-t2) expands as 1 - s_(1) + s_(1,1)") {
    Poly one = Poly::constant(2, 1);
    Poly p = (one - Poly::variable(2, 0)) * (one - Poly::variable(2, 1));
    SchurVector v = schur_expand_oracle(p);
    CHECK(v.get(Partition{}) == 1);
    CHECK(v.get(Partition{1}) == -1);
    CHECK(v.get(Partition{1, 1}) == 1);
    CHECK(v.coefficients().size() == 3);
}

TEST_CASE("h_2 = s_(2)") {
    Poly h2(2);
    h2.add_term({2, 0}, 1);
    h2.add_term({1, 1}, 1);
    h2.add_term({0, 2}, 1);
    SchurVector v = schur_expand_oracle(h2);
    CHECK(v.coefficients().size() == 1);
    CHECK(v.get(Partition{2}) == 1);
}

TEST_CASE("non-symmetric input is rejected during elimination") {
    Poly p(2);
    p.add_term({0, 1}, 1);  // t2 alone
    CHECK_THROWS_AS(schur_expand_oracle(p), std::invalid_argument);
}

TEST_CASE("substitution t -> 1-t on polynomials is an involution") {
    Poly p = schur_poly(Partition{2, 1}, 2) * Rat(3) + schur_poly(Partition{1}, 2);
    Poly q = p.substitute_one_minus_vars().substitute_one_minus_vars();
    CHECK(p == q);
}
