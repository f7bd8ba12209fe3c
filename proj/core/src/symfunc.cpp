#include "grassbs/symfunc.hpp"

#include <functional>
#include <stdexcept>

namespace grassbs {

Poly Poly::constant(int nvars, const Rat& c) {
    Poly p(nvars);
    p.add_term(Expo(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

Poly Poly::variable(int nvars, int index) {
    Poly p(nvars);
    Expo e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    p.add_term(e, 1);
    return p;
}

void Poly::add_term(const Expo& exponents, const Rat& coefficient) {
    if (static_cast<int>(exponents.size()) != nvars_)
        throw std::invalid_argument("exponent vector length mismatch");
    if (coefficient == 0) return;
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
        terms_.emplace(exponents, coefficient);
    } else {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& rhs) const {
    if (nvars_ != rhs.nvars_) throw std::invalid_argument("polynomial variable count mismatch");
    Poly out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

Poly Poly::operator-(const Poly& rhs) const {
    return *this + rhs * Rat(-1);
}

Poly Poly::operator*(const Poly& rhs) const {
    if (nvars_ != rhs.nvars_) throw std::invalid_argument("polynomial variable count mismatch");
    Poly out(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_) {
            Expo e(static_cast<std::size_t>(nvars_));
            for (int i = 0; i < nvars_; ++i)
                e[static_cast<std::size_t>(i)] =
                    ea[static_cast<std::size_t>(i)] + eb[static_cast<std::size_t>(i)];
            out.add_term(e, ca * cb);
        }
    return out;
}

Poly Poly::operator*(const Rat& scalar) const {
    Poly out(nvars_);
    if (scalar == 0) return out;
    for (const auto& [e, c] : terms_) out.add_term(e, c * scalar);
    return out;
}

Poly Poly::substitute_one_minus_vars() const {
    // (1 - t_i)^e expanded per variable, then multiplied through.
    Poly out(nvars_);
    for (const auto& [expo, coeff] : terms_) {
        Poly term = Poly::constant(nvars_, coeff);
        for (int i = 0; i < nvars_; ++i) {
            int e = expo[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            Poly binom(nvars_);
            for (int j = 0; j <= e; ++j) {
                Expo mono(static_cast<std::size_t>(nvars_), 0);
                mono[static_cast<std::size_t>(i)] = j;
                Rat c = Rat(binomial(static_cast<unsigned>(e), static_cast<unsigned>(j)));
                binom.add_term(mono, (j % 2 == 0) ? c : -c);
            }
            term = term * binom;
        }
        out = out + term;
    }
    return out;
}

Poly schur_poly(const Partition& lambda, int k) {
    Poly out(k);
    if (lambda.rows() > k) return out;
    if (lambda.empty()) return Poly::constant(k, 1);

    // Fill boxes row-major; entries weakly increase along rows and strictly
    // increase down columns.
    std::vector<std::vector<int>> cells(static_cast<std::size_t>(lambda.rows()));
    for (int r = 0; r < lambda.rows(); ++r)
        cells[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(lambda.row(r)), 0);

    std::function<void(int, int)> fill = [&](int r, int c) {
        if (r == lambda.rows()) {
            Poly::Expo e(static_cast<std::size_t>(k), 0);
            for (const auto& row : cells)
                for (int v : row) ++e[static_cast<std::size_t>(v - 1)];
            out.add_term(e, 1);
            return;
        }
        int nr = r, nc = c + 1;
        if (nc == lambda.row(r)) {
            ++nr;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
        if (r > 0) lo = std::max(lo, cells[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
        for (int v = lo; v <= k; ++v) {
            cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            fill(nr, nc);
        }
        cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
    };
    fill(0, 0);
    return out;
}

SchurVector schur_expand_oracle(const Poly& p) {
    SchurVector out;
    Poly rest = p;
    while (!rest.is_zero()) {
        const auto& [lead, coeff] = *rest.terms().begin();
        for (std::size_t i = 1; i < lead.size(); ++i)
            if (lead[i - 1] < lead[i])
                throw std::invalid_argument(
                    "schur_expand_oracle: leading monomial is not weakly decreasing; "
                    "input is not symmetric");
        std::vector<int> parts = lead;
        if (!parts.empty() && parts.back() < 0)
            throw std::invalid_argument("schur_expand_oracle: negative exponent");
        Partition lambda(parts);
        Rat c = coeff;
        out.add(lambda, c);
        rest = rest - schur_poly(lambda, p.nvars()) * c;
    }
    return out;
}

}  // namespace grassbs
