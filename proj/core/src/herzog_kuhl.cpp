#include "grassbs/herzog_kuhl.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "grassbs/matrix.hpp"

namespace grassbs {

Rat stanley_b(const Partition& lambda, const Partition& mu, int k) {
    if (!contains(mu, lambda)) return 0;
    std::vector<Box> boxes = skew_boxes(lambda, mu);
    Rat value = Rat(skew_syt_count(lambda, mu)) /
                Rat(factorial(static_cast<unsigned>(boxes.size())));
    for (const Box& b : boxes) value *= k + b.col - b.row;
    if (mu.size() % 2 != 0) value = -value;
    return value;
}

Rat stanley_b_tableau_form(const Partition& lambda, const Partition& mu, int k) {
    if (!contains(mu, lambda)) return 0;
    if (lambda.rows() > k)
        throw std::invalid_argument("stanley_b_tableau_form: lambda has more than k parts");
    Rat value = Rat(skew_syt_count(lambda, mu)) * Rat(syt_count(mu)) / Rat(syt_count(lambda));
    value *= Rat(binomial(static_cast<unsigned>(lambda.size()), static_cast<unsigned>(mu.size())));
    value *= Rat(dim_gl(lambda, k)) / Rat(dim_gl(mu, k));
    if (mu.size() % 2 != 0) value = -value;
    return value;
}

Rat BasisChangeMatrix::coefficient(const Partition& lambda, const Partition& mu) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(lambda, mu);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Rat value = stanley_b(lambda, mu, k_);
    cache_.emplace(std::move(key), value);
    return value;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int)> rec = [&](int row) {
        if (row == lambda.rows()) {
            out.push_back(Partition(current));
            return;
        }
        int cap = current.empty() ? lambda.row(row) : std::min(lambda.row(row), current.back());
        for (int p = cap; p >= 0; --p) {
            current.push_back(p);
            rec(row + 1);
            current.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), GradedLex{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SchurVector substitute_one_minus_t(const SchurVector& f, int k) {
    SchurVector out;
    for (const auto& [lambda, a] : f.coefficients()) {
        if (lambda.rows() > k)
            throw std::invalid_argument(
                "substitute_one_minus_t: weight has more than k parts");
        for (const Partition& mu : subpartitions(lambda)) out.add(mu, a * stanley_b(lambda, mu, k));
    }
    return out;
}

HKSystem::HKSystem(int k, int n) : k_(k), n_(n) {
    if (k < 1 || k > n) throw std::invalid_argument("hk_system: need 1 <= k <= n");
    rows_ = rectangle_partitions(k, n - k);
}

Rat HKSystem::coefficient(const Partition& mu, int i, const Partition& lambda) const {
    if (!contains(mu, lambda)) return 0;
    Rat value = Rat(dim_gl(lambda, k_));
    value *= Rat(skew_syt_count(lambda, mu)) * Rat(syt_count(mu)) / Rat(syt_count(lambda));
    value *= Rat(binomial(static_cast<unsigned>(lambda.size()), static_cast<unsigned>(mu.size())));
    if (i % 2 != 0) value = -value;
    return value;
}

std::vector<Rat> HKSystem::residuals(const BettiTable& beta) const {
    if (beta.k() != k_ || beta.n() != n_)
        throw std::invalid_argument("hk residuals: table context does not match the system");
    std::vector<Rat> out(rows_.size(), Rat(0));
    for (const auto& [key, value] : beta.entries()) {
        if (!key.lambda.nonnegative())
            throw std::invalid_argument(
                "hk residuals: table has weights with negative parts; det-twist the table up first");
        Partition lambda = Partition::from_seq(key.lambda);
        for (std::size_t r = 0; r < rows_.size(); ++r)
            out[r] += value * coefficient(rows_[r], key.i, lambda);
    }
    return out;
}

std::vector<Rat> HKSystem::residuals(const SchurVector& k_class) const {
    std::vector<Rat> out(rows_.size(), Rat(0));
    for (const auto& [lambda, a] : k_class.coefficients())
        for (std::size_t r = 0; r < rows_.size(); ++r)
            out[r] += a * coefficient(rows_[r], 0, lambda);
    return out;
}

HKSystem hk_system(int k, int n) {
    return HKSystem(k, n);
}

std::vector<Rat> hk_check(const BettiTable& beta) {
    return HKSystem(beta.k(), beta.n()).residuals(beta);
}

Rat split_probability_oracle(const Partition& lambda, const Partition& mu, int max_boxes) {
    if (!contains(mu, lambda))
        throw std::invalid_argument("split_probability_oracle: mu not contained in lambda");
    int t = lambda.size();
    if (t > max_boxes)
        throw std::invalid_argument("split_probability_oracle: shape exceeds the enumeration cap");
    int m = mu.size();

    std::vector<Box> boxes = skew_boxes(lambda, Partition{});
    std::map<Box, int> pos;
    for (std::size_t idx = 0; idx < boxes.size(); ++idx) pos[boxes[idx]] = static_cast<int>(idx);

    std::vector<int> values(boxes.size());
    std::iota(values.begin(), values.end(), 1);

    long total = 0, standard = 0, splits = 0, standard_and_splits = 0;
    do {
        ++total;
        bool is_standard = true;
        for (std::size_t idx = 0; idx < boxes.size() && is_standard; ++idx) {
            const Box& b = boxes[idx];
            auto right = pos.find({b.row, b.col + 1});
            if (right != pos.end() &&
                values[idx] > values[static_cast<std::size_t>(right->second)])
                is_standard = false;
            auto below = pos.find({b.row + 1, b.col});
            if (below != pos.end() &&
                values[idx] > values[static_cast<std::size_t>(below->second)])
                is_standard = false;
        }
        bool does_split = true;
        for (std::size_t idx = 0; idx < boxes.size() && does_split; ++idx) {
            bool in_mu = mu.has_box(boxes[idx].row, boxes[idx].col);
            if (in_mu != (values[idx] <= m)) does_split = false;
        }
        if (is_standard) ++standard;
        if (does_split) ++splits;
        if (is_standard && does_split) ++standard_and_splits;
    } while (std::next_permutation(values.begin(), values.end()));

    // Prob(splits | standard) / Prob(splits); an empty shape splits trivially.
    if (t == 0) return 1;
    Rat cond = Rat(standard_and_splits) / Rat(standard);
    Rat uncond = Rat(splits) / Rat(total);
    return cond / uncond;
}

namespace {

bool entry_map_less(const EntryMap& a, const EntryMap& b) {
    auto ia = a.begin(), ib = b.begin();
    TableKeyLess key_less;
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
        if (key_less(ia->first, ib->first)) return true;
        if (key_less(ib->first, ia->first)) return false;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.end() && ib != b.end();
}

}  // namespace

std::vector<BettiTable> enumerate_pure_tables(int k, int n, int max_size) {
    HKSystem system(k, n);
    int columns = n - k + 2;  // homological indices 0 .. n-k+1
    std::vector<Partition> pool = partitions_up_to_size(max_size, k);

    std::vector<BettiTable> out;
    std::vector<std::vector<Partition>> chosen(static_cast<std::size_t>(columns));

    auto admissible = [&](const std::vector<Partition>& prev, const Partition& next) {
        for (const Partition& p : prev)
            if (!strictly_contains(p, next)) return false;
        return true;
    };

    auto try_support = [&]() {
        std::vector<std::pair<int, Partition>> support;
        for (int c = 0; c < columns; ++c)
            for (const Partition& p : chosen[static_cast<std::size_t>(c)]) support.push_back({c, p});

        QMatrix mat(static_cast<int>(system.row_partitions().size()),
                    static_cast<int>(support.size()));
        for (std::size_t r = 0; r < system.row_partitions().size(); ++r)
            for (std::size_t c = 0; c < support.size(); ++c)
                mat(static_cast<int>(r), static_cast<int>(c)) =
                    system.coefficient(system.row_partitions()[r], support[c].first, support[c].second);

        auto kernel = mat.nullspace_basis();
        if (kernel.size() != 1) return;
        std::vector<Rat>& v = kernel.front();
        int sign = 0;
        for (const Rat& x : v) {
            if (x == 0) return;  // not strictly positive on the chosen support
            int s = sgn(x);
            if (sign == 0) sign = s;
            if (s != sign) return;
        }
        if (sign < 0)
            for (Rat& x : v) x = -x;

        // Scale to the primitive positive integer point.
        Int denominator_lcm = 1;
        for (const Rat& x : v)
            mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(),
                    mpq_denref(x.get_mpq_t()));
        Int content = 0;
        std::vector<Int> scaled;
        for (const Rat& x : v) {
            scaled.push_back(to_integer(x * Rat(denominator_lcm)));
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.back().get_mpz_t());
        }
        BettiTable table(k, n);
        for (std::size_t c = 0; c < support.size(); ++c)
            table.set(support[c].first, support[c].second.to_seq(k), Rat(scaled[c] / content));
        out.push_back(std::move(table));
    };

    // One weight per column, with at most one column doubled.
    std::function<void(int, bool)> build = [&](int col, bool doubled) {
        if (col == columns) {
            try_support();
            return;
        }
        for (std::size_t a = 0; a < pool.size(); ++a) {
            if (col > 0 && !admissible(chosen[static_cast<std::size_t>(col - 1)], pool[a])) continue;
            chosen[static_cast<std::size_t>(col)] = {pool[a]};
            build(col + 1, doubled);
            if (!doubled) {
                for (std::size_t b = a + 1; b < pool.size(); ++b) {
                    if (col > 0 && !admissible(chosen[static_cast<std::size_t>(col - 1)], pool[b]))
                        continue;
                    chosen[static_cast<std::size_t>(col)] = {pool[a], pool[b]};
                    build(col + 1, true);
                }
            }
        }
        chosen[static_cast<std::size_t>(col)].clear();
    };
    build(0, false);

    std::sort(out.begin(), out.end(), [](const BettiTable& a, const BettiTable& b) {
        return entry_map_less(a.entries(), b.entries());
    });
    return out;
}

namespace {

Box strip_end(const std::vector<Box>& boxes) {
    // Minimal row; within it, maximal column.
    Box best = boxes.front();
    for (const Box& b : boxes)
        if (b.row < best.row || (b.row == best.row && b.col > best.col)) best = b;
    return best;
}

Box strip_start(const std::vector<Box>& boxes) {
    // Maximal row; within it, minimal column.
    Box best = boxes.front();
    for (const Box& b : boxes)
        if (b.row > best.row || (b.row == best.row && b.col < best.col)) best = b;
    return best;
}

}  // namespace

BorderStripClassification classify_border_strips(const Partition& lambda, const Partition& mu,
                                                 const Partition& nu) {
    if (!strictly_contains(lambda, mu) || !strictly_contains(mu, nu))
        throw std::invalid_argument("classify_border_strips: need lambda < mu < nu strictly");
    BorderStripClassification result;
    result.bound_ok = nu.row(1) <= lambda.row(0) + 1;
    if (is_border_strip(mu, lambda) && is_border_strip(nu, mu)) {
        Box end = strip_end(skew_boxes(mu, lambda));
        Box start = strip_start(skew_boxes(nu, mu));
        result.simple_hypothesis = (start.row == end.row) && (start.col == end.col + 1);
    }
    return result;
}

}  // namespace grassbs
