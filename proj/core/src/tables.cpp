#include "grassbs/tables.hpp"

#include <stdexcept>

namespace grassbs {

Rat TableBase::get(int i, const IntSeq& lambda) const {
    auto it = entries_.find({i, lambda});
    return it == entries_.end() ? Rat(0) : it->second;
}

void TableBase::set(int i, const IntSeq& lambda, Rat value) {
    check_lambda(lambda);
    if (value == 0)
        entries_.erase({i, lambda});
    else
        entries_[{i, lambda}] = std::move(value);
}

void TableBase::add(int i, const IntSeq& lambda, const Rat& value) {
    set(i, lambda, get(i, lambda) + value);
}

void TableBase::check_lambda(const IntSeq& lambda) const {
    if (lambda.length() != k_)
        throw std::invalid_argument("table entry weight has length " +
                                    std::to_string(lambda.length()) + ", expected k = " +
                                    std::to_string(k_));
}

std::vector<IntSeq> TableBase::lambda_support() const {
    std::set<IntSeq, GradedLex> seen;
    for (const auto& [key, value] : entries_) seen.insert(key.lambda);
    return {seen.begin(), seen.end()};
}

std::vector<int> TableBase::homological_range() const {
    std::set<int> seen;
    for (const auto& [key, value] : entries_) seen.insert(key.i);
    return {seen.begin(), seen.end()};
}

void CohomologyTable::declare(const IntSeq& lambda) {
    check_lambda(lambda);
    support_.insert(lambda);
}

Rat SchurVector::get(const Partition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void SchurVector::set(const Partition& lambda, Rat value) {
    if (value == 0)
        coeffs_.erase(lambda);
    else
        coeffs_[lambda] = std::move(value);
}

void SchurVector::add(const Partition& lambda, const Rat& value) {
    set(lambda, get(lambda) + value);
}

SchurVector SchurVector::operator+(const SchurVector& rhs) const {
    SchurVector out = *this;
    for (const auto& [lambda, c] : rhs.coeffs_) out.add(lambda, c);
    return out;
}

SchurVector SchurVector::operator*(const Rat& scalar) const {
    SchurVector out;
    if (scalar == 0) return out;
    for (const auto& [lambda, c] : coeffs_) out.set(lambda, c * scalar);
    return out;
}

RankBettiTable to_rank(const BettiTable& beta) {
    RankBettiTable out(beta.k(), beta.n());
    for (const auto& [key, value] : beta.entries())
        out.set(key.i, key.lambda, value * Rat(dim_gl(key.lambda, beta.k())));
    return out;
}

SchurVector k_class(const BettiTable& beta) {
    SchurVector out;
    for (const auto& [key, value] : beta.entries()) {
        if (!key.lambda.nonnegative())
            throw std::invalid_argument(
                "k_class: table has weights with negative parts; det-twist the table up first");
        Rat signed_value = (key.i % 2 == 0) ? value : -value;
        out.add(Partition::from_seq(key.lambda), signed_value);
    }
    return out;
}

namespace {

std::string entry_name(const TableKey& key) {
    std::string s = "(" + std::to_string(key.i) + ", [";
    for (int j = 0; j < key.lambda.length(); ++j) {
        if (j) s += ",";
        s += std::to_string(key.lambda[j]);
    }
    return s + "])";
}

void check_nonnegative(const TableBase& table, std::vector<std::string>& out) {
    for (const auto& [key, value] : table.entries())
        if (value < 0) out.push_back("negative value at " + entry_name(key));
}

}  // namespace

std::vector<std::string> validate(const BettiTable& table) {
    std::vector<std::string> out;
    check_nonnegative(table, out);
    return out;
}

std::vector<std::string> validate(const RankBettiTable& table) {
    std::vector<std::string> out;
    check_nonnegative(table, out);
    return out;
}

std::vector<std::string> validate(const CohomologyTable& table) {
    std::vector<std::string> out;
    check_nonnegative(table, out);
    int dim = table.k() * (table.n() - table.k());
    for (const auto& [key, value] : table.entries()) {
        if (key.i < 0 || key.i > dim)
            out.push_back("q out of range [0, " + std::to_string(dim) + "] at " + entry_name(key));
        if (!table.declared(key.lambda))
            out.push_back("entry outside declared support at " + entry_name(key));
    }
    return out;
}

}  // namespace grassbs
