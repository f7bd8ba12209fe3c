#pragma once

#include <map>
#include <vector>

#include "grassbs/partition.hpp"
#include "grassbs/rational.hpp"
#include "grassbs/tables.hpp"

namespace grassbs {

/// Sparse polynomial in a fixed number of commuting variables with exact
/// rational coefficients. Terms are kept in descending lexicographic order of
/// the exponent vector, so the leading monomial is the first term.
class Poly {
public:
    using Expo = std::vector<int>;
    struct LexGreater {
        bool operator()(const Expo& a, const Expo& b) const { return a > b; }
    };
    using TermMap = std::map<Expo, Rat, LexGreater>;

    explicit Poly(int nvars) : nvars_(nvars) {}
    static Poly constant(int nvars, const Rat& c);
    static Poly variable(int nvars, int index);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Expo& exponents, const Rat& coefficient);

    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly operator*(const Rat& scalar) const;
    bool operator==(const Poly&) const = default;

    // The substitution t_i -> 1 - t_i, expanded.
    Poly substitute_one_minus_vars() const;

private:
    int nvars_ = 0;
    TermMap terms_;
};

// Schur polynomial s_lambda(t_1..t_k) as a monomial sum over semistandard
// Young tableaux with entries in 1..k. Zero when lambda has more than k rows.
Poly schur_poly(const Partition& lambda, int k);

// Schur expansion by repeated leading-monomial elimination: the lex-largest
// monomial of a symmetric polynomial is t^lambda for a partition lambda;
// subtract its coefficient times s_lambda and recurse. Throws
// std::invalid_argument when a leading exponent is not weakly decreasing
// (non-symmetric input).
SchurVector schur_expand_oracle(const Poly& p);

}  // namespace grassbs
