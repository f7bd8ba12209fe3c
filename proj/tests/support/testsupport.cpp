#include "testsupport.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "grassbs/matrix.hpp"

namespace grassbs::testing {

namespace {

Int count_standard_fillings(const std::vector<Box>& boxes) {
    if (boxes.empty()) return 1;
    std::map<Box, int> pos;
    for (std::size_t i = 0; i < boxes.size(); ++i) pos[boxes[i]] = static_cast<int>(i);
    std::vector<int> values(boxes.size());
    std::iota(values.begin(), values.end(), 1);
    Int count = 0;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < boxes.size() && ok; ++i) {
            auto right = pos.find({boxes[i].row, boxes[i].col + 1});
            if (right != pos.end() && values[i] > values[static_cast<std::size_t>(right->second)])
                ok = false;
            auto below = pos.find({boxes[i].row + 1, boxes[i].col});
            if (below != pos.end() && values[i] > values[static_cast<std::size_t>(below->second)])
                ok = false;
        }
        if (ok) ++count;
    } while (std::next_permutation(values.begin(), values.end()));
    return count;
}

}  // namespace

Int brute_force_syt(const Partition& lambda) {
    return count_standard_fillings(skew_boxes(lambda, Partition{}));
}

Int brute_force_skew_syt(const Partition& lambda, const Partition& mu) {
    return count_standard_fillings(skew_boxes(lambda, mu));
}

namespace {

bool extend_matching(int u, const std::vector<std::vector<int>>& adj, std::vector<int>& right_match,
                     std::vector<bool>& visited) {
    for (int v : adj[static_cast<std::size_t>(u)]) {
        if (visited[static_cast<std::size_t>(v)]) continue;
        visited[static_cast<std::size_t>(v)] = true;
        if (right_match[static_cast<std::size_t>(v)] < 0 ||
            extend_matching(right_match[static_cast<std::size_t>(v)], adj, right_match, visited)) {
            right_match[static_cast<std::size_t>(v)] = u;
            return true;
        }
    }
    return false;
}

}  // namespace

bool brute_force_has_perfect_matching(int nl, int nr, const std::vector<std::vector<int>>& adj) {
    if (nl != nr) return false;
    std::vector<int> right_match(static_cast<std::size_t>(nr), -1);
    for (int u = 0; u < nl; ++u) {
        std::vector<bool> visited(static_cast<std::size_t>(nr), false);
        if (!extend_matching(u, adj, right_match, visited)) return false;
    }
    return true;
}

std::vector<std::vector<int>> enumerate_perfect_matchings(int nl, int nr,
                                                          const std::vector<std::vector<int>>& adj) {
    std::vector<std::vector<int>> out;
    if (nl != nr) return out;
    std::vector<int> assignment(static_cast<std::size_t>(nl), -1);
    std::vector<bool> used(static_cast<std::size_t>(nr), false);
    std::function<void(int)> rec = [&](int u) {
        if (u == nl) {
            out.push_back(assignment);
            return;
        }
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = true;
            assignment[static_cast<std::size_t>(u)] = v;
            rec(u + 1);
            used[static_cast<std::size_t>(v)] = false;
        }
        assignment[static_cast<std::size_t>(u)] = -1;
    };
    rec(0);
    return out;
}

namespace {

IntSeq seq2(int a, int b) {
    return IntSeq{a, b};
}

}  // namespace

BettiTable example_pairing_beta() {
    BettiTable beta(2, 3);
    beta.set(0, seq2(1, 0), 4);
    beta.set(1, seq2(2, 0), 1);
    beta.set(1, seq2(1, 1), 9);
    beta.set(1, seq2(2, 1), 3);
    beta.set(2, seq2(2, 1), 3);
    beta.set(2, seq2(3, 1), 1);
    beta.set(2, seq2(2, 2), 1);
    return beta;
}

CohomologyTable example_pairing_gamma() {
    CohomologyTable gamma(2, 3);
    for (IntSeq lambda : {seq2(1, 0), seq2(2, 0), seq2(1, 1), seq2(2, 1), seq2(3, 1), seq2(2, 2)})
        gamma.declare(lambda);
    gamma.set(0, seq2(1, 0), 3);
    gamma.set(1, seq2(1, 0), 1);
    gamma.set(1, seq2(2, 0), 3);
    gamma.set(0, seq2(1, 1), 1);
    gamma.set(1, seq2(3, 1), 3);
    gamma.set(2, seq2(2, 2), 1);
    return gamma;
}

RankBettiTable example_pairing_phi() {
    RankBettiTable phi(2, 2);
    phi.set(-1, seq2(1, 0), 4);
    phi.set(0, seq2(1, 0), 12);
    phi.set(0, seq2(2, 0), 3);
    phi.set(0, seq2(2, 2), 1);
    phi.set(1, seq2(1, 1), 9);
    phi.set(1, seq2(3, 1), 3);
    return phi;
}

std::vector<BettiTable> extremal_tables() {
    std::vector<BettiTable> tables;
    auto make = [](std::initializer_list<std::tuple<int, int, int, int>> entries) {
        BettiTable t(2, 3);
        for (const auto& [i, a, b, value] : entries) t.set(i, IntSeq{a, b}, value);
        return t;
    };
    tables.push_back(make({{0, 0, 0, 3}, {1, 1, 0, 3}, {2, 2, 0, 1}}));
    tables.push_back(make({{0, 0, 0, 8}, {1, 1, 0, 6}, {2, 3, 0, 1}}));
    tables.push_back(make({{0, 0, 0, 1}, {1, 1, 1, 3}, {2, 2, 1, 1}}));
    tables.push_back(make({{0, 0, 0, 2}, {1, 2, 0, 2}, {2, 3, 0, 1}}));
    tables.push_back(make({{0, 1, 0, 6}, {1, 2, 0, 8}, {2, 3, 0, 3}}));
    tables.push_back(make({{0, 1, 0, 3}, {1, 2, 0, 1}, {1, 1, 1, 9}, {2, 2, 1, 3}}));
    return tables;
}

BettiTable stably_realizable_candidate() {
    BettiTable beta(2, 3);
    beta.set(0, seq2(0, 0), 1);
    beta.set(0, seq2(2, 0), 3);
    beta.set(1, seq2(2, 1), 8);
    beta.set(2, seq2(3, 2), 3);
    return beta;
}

RankBettiTable nonmatchable_paired_table() {
    RankBettiTable phi(2, 2);
    phi.set(0, seq2(0, 0), 1);
    phi.set(-1, seq2(2, 0), 9);
    phi.set(0, seq2(2, 1), 8);
    return phi;
}

DoubleComplex cautionary_complex() {
    std::vector<Partition> labels{Partition{1}, Partition{2},    Partition{3},
                                  Partition{1, 1}, Partition{2, 1}, Partition{3, 1}};
    DoubleComplex dc;
    dc.poset = Poset::partition_containment(labels);
    int l1 = dc.poset.index_of("[1]");
    int l2 = dc.poset.index_of("[2]");
    int l3 = dc.poset.index_of("[3]");
    int l11 = dc.poset.index_of("[1,1]");
    int l21 = dc.poset.index_of("[2,1]");
    int l31 = dc.poset.index_of("[3,1]");

    dc.cells[{0, 0}] = {{l11}};
    dc.cells[{1, 0}] = {{l21}};
    dc.cells[{1, 1}] = {{l21, l1}};
    dc.cells[{2, 1}] = {{l31, l2}};
    dc.cells[{2, 2}] = {{l2}};
    dc.cells[{3, 2}] = {{l3}};

    QMatrix dv10(2, 1);
    dv10(0, 0) = 1;  // (2,1) at q=0 lifts to (2,1) at q=1
    dc.dv[{1, 0}] = dv10;

    QMatrix dv21(1, 2);
    dv21(0, 1) = 1;  // (2) at q=1 lifts to (2) at q=2
    dc.dv[{2, 1}] = dv21;

    QMatrix dh10(1, 1);
    dh10(0, 0) = 1;
    dc.dh[{1, 0}] = dh10;

    // f(3,1) = (2,1) - (1), f(2) = (1); columns ordered ((3,1), (2)).
    QMatrix dh21(2, 2);
    dh21(0, 0) = 1;
    dh21(1, 0) = -1;
    dh21(1, 1) = 1;
    dc.dh[{2, 1}] = dh21;

    QMatrix dh32(1, 1);
    dh32(0, 0) = 1;
    dc.dh[{3, 2}] = dh32;
    return dc;
}

RankBettiTable random_rank_table(std::mt19937& rng, int k, int max_vertices) {
    // Weight pool: weakly decreasing length-k sequences with parts in [-2, 3].
    std::vector<IntSeq> pool;
    std::vector<int> current;
    std::function<void()> gen = [&]() {
        if (static_cast<int>(current.size()) == k) {
            pool.push_back(IntSeq(std::vector<int>(current)));
            return;
        }
        int hi = current.empty() ? 3 : current.back();
        for (int v = -2; v <= hi; ++v) {
            current.push_back(v);
            gen();
            current.pop_back();
        }
    };
    gen();

    std::uniform_int_distribution<int> coin(0, 1);
    RankBettiTable table(k, k);
    int budget = std::uniform_int_distribution<int>(2, max_vertices)(rng);
    if (coin(rng) == 0) {
        // A positive combination of shifted pure tables: always a member.
        while (budget >= 2) {
            int i = std::uniform_int_distribution<int>(-2, 2)(rng);
            const IntSeq& a = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
            const IntSeq& b = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
            if (!strictly_contains(a, b)) continue;
            int c = std::uniform_int_distribution<int>(1, std::min(3, budget / 2))(rng);
            table.add(i, a, c);
            table.add(i + 1, b, c);
            budget -= 2 * c;
        }
    } else {
        while (budget > 0) {
            int i = std::uniform_int_distribution<int>(-2, 2)(rng);
            const IntSeq& a = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
            int c = std::uniform_int_distribution<int>(1, std::min(3, budget))(rng);
            table.add(i, a, c);
            budget -= c;
        }
    }
    return table;
}

namespace {

QMatrix random_unimodular(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> small(-2, 2);
    std::uniform_int_distribution<int> sign(0, 1);
    QMatrix lower = QMatrix::identity(n), upper = QMatrix::identity(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            if (r > c) lower(r, c) = small(rng);
            if (r < c) upper(r, c) = small(rng);
        }
    for (int d = 0; d < n; ++d) upper(d, d) = sign(rng) == 0 ? 1 : -1;
    return lower * upper;
}

QMatrix inverse(const QMatrix& m) {
    QMatrix inv(m.rows(), m.cols());
    for (int c = 0; c < m.cols(); ++c) {
        std::vector<Rat> e(static_cast<std::size_t>(m.rows()), Rat(0));
        e[static_cast<std::size_t>(c)] = 1;
        auto col = m.solve(e);
        for (int r = 0; r < m.rows(); ++r) inv(r, c) = (*col)[static_cast<std::size_t>(r)];
    }
    return inv;
}

}  // namespace

ExactComplex random_exact_complex(std::mt19937& rng, int max_dim) {
    int levels = std::uniform_int_distribution<int>(2, 5)(rng);
    // ranks[j] = rank of the map out of V_j; dims[j] = ranks[j] + ranks[j+1].
    std::vector<int> ranks(static_cast<std::size_t>(levels + 1), 0);
    for (int j = 1; j < levels; ++j)
        ranks[static_cast<std::size_t>(j)] = std::uniform_int_distribution<int>(0, max_dim / 2)(rng);

    ExactComplex complex;
    for (int j = 0; j < levels; ++j)
        complex.dims.push_back(ranks[static_cast<std::size_t>(j)] + ranks[static_cast<std::size_t>(j + 1)]);

    std::vector<QMatrix> change;
    for (int j = 0; j < levels; ++j) change.push_back(random_unimodular(rng, complex.dims[static_cast<std::size_t>(j)]));

    for (int j = 0; j + 1 < levels; ++j) {
        // Split model: V_{j+1} = Q^{r_{j+1}} + Q^{r_{j+2}} maps onto the
        // second block of V_j = Q^{r_j} + Q^{r_{j+1}}.
        QMatrix base(complex.dims[static_cast<std::size_t>(j)], complex.dims[static_cast<std::size_t>(j + 1)]);
        for (int t = 0; t < ranks[static_cast<std::size_t>(j + 1)]; ++t)
            base(ranks[static_cast<std::size_t>(j)] + t, t) = 1;
        complex.delta.push_back(change[static_cast<std::size_t>(j)] * base *
                                inverse(change[static_cast<std::size_t>(j + 1)]));
    }
    return complex;
}

}  // namespace grassbs::testing
