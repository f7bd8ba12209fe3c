#include "grassbs/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace grassbs {

namespace {

void check_weakly_decreasing(const std::vector<int>& parts) {
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i - 1] < parts[i])
            throw std::invalid_argument("sequence is not weakly decreasing");
}

}  // namespace

IntSeq::IntSeq(std::vector<int> parts) : parts_(std::move(parts)) {
    check_weakly_decreasing(parts_);
}

IntSeq::IntSeq(std::initializer_list<int> parts) : IntSeq(std::vector<int>(parts)) {}

IntSeq IntSeq::zero(int k) {
    return IntSeq(std::vector<int>(static_cast<std::size_t>(k), 0));
}

long IntSeq::sum() const {
    long total = 0;
    for (int p : parts_) total += p;
    return total;
}

bool IntSeq::nonnegative() const {
    return parts_.empty() || parts_.back() >= 0;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    check_weakly_decreasing(parts_);
    if (!parts_.empty() && parts_.back() < 0)
        throw std::invalid_argument("partition has negative parts");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::from_seq(const IntSeq& seq) {
    if (!seq.nonnegative())
        throw std::invalid_argument("sequence with negative parts is not a partition");
    return Partition(seq.parts());
}

int Partition::size() const {
    int total = 0;
    for (int p : parts_) total += p;
    return total;
}

IntSeq Partition::to_seq(int k) const {
    if (rows() > k)
        throw std::invalid_argument("partition has more parts than the ambient length");
    std::vector<int> padded = parts_;
    padded.resize(static_cast<std::size_t>(k), 0);
    return IntSeq(std::move(padded));
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
    return Partition(std::move(conj));
}

bool Partition::has_box(int r, int c) const {
    return r >= 0 && c >= 0 && r < rows() && c < row(r);
}

bool contains(const IntSeq& lambda, const IntSeq& mu) {
    if (lambda.length() != mu.length())
        throw std::invalid_argument("containment between sequences of different lengths");
    for (int i = 0; i < lambda.length(); ++i)
        if (lambda[i] > mu[i]) return false;
    return true;
}

bool strictly_contains(const IntSeq& lambda, const IntSeq& mu) {
    return contains(lambda, mu) && lambda != mu;
}

bool contains(const Partition& lambda, const Partition& mu) {
    for (int i = 0; i < lambda.rows(); ++i)
        if (lambda.row(i) > mu.row(i)) return false;
    return true;
}

bool strictly_contains(const Partition& lambda, const Partition& mu) {
    return contains(lambda, mu) && lambda != mu;
}

IntSeq det_twist(const IntSeq& lambda, int a) {
    std::vector<int> parts = lambda.parts();
    for (int& p : parts) p += a;
    return IntSeq(std::move(parts));
}

Int dim_gl(const IntSeq& lambda, int k) {
    if (lambda.length() != k)
        throw std::invalid_argument("dim_gl: sequence length does not match k");
    Int num = 1, den = 1;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            num *= lambda[i] - lambda[j] + j - i;
            den *= j - i;
        }
    Int result;
    mpz_divexact(result.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return result;
}

Int dim_gl(const Partition& lambda, int k) {
    return dim_gl(lambda.to_seq(k), k);
}

namespace {

bool graded_lex_less_vec(const std::vector<int>& a, long sum_a,
                         const std::vector<int>& b, long sum_b) {
    if (sum_a != sum_b) return sum_a < sum_b;
    if (a.size() != b.size()) return a.size() < b.size();
    // Same size: reverse-lexicographic, so the lex-larger sequence comes first.
    return a > b;
}

}  // namespace

bool graded_lex_less(const IntSeq& a, const IntSeq& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return graded_lex_less_vec(a.parts(), a.sum(), b.parts(), b.sum());
}

bool graded_lex_less(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    int rows = std::max(a.rows(), b.rows());
    for (int i = 0; i < rows; ++i) {
        if (a.row(i) != b.row(i)) return a.row(i) > b.row(i);
    }
    return false;
}

Int syt_count(const Partition& lambda) {
    Partition conj = lambda.conjugate();
    Int hooks = 1;
    for (int i = 0; i < lambda.rows(); ++i)
        for (int j = 0; j < lambda.row(i); ++j)
            hooks *= (lambda.row(i) - j) + (conj.row(j) - i) - 1;
    Int result;
    mpz_divexact(result.get_mpz_t(), factorial(static_cast<unsigned>(lambda.size())).get_mpz_t(),
                 hooks.get_mpz_t());
    return result;
}

Int skew_syt_count(const Partition& lambda, const Partition& mu) {
    if (!contains(mu, lambda))
        throw std::invalid_argument("skew_syt_count: mu is not contained in lambda");
    int m = lambda.size() - mu.size();
    int ell = lambda.rows();
    if (ell == 0) return 1;

    // det of the ell x ell matrix with entries 1/(lambda_i - mu_j - i + j)!
    // (1-indexed i, j), computed by fraction-full Gaussian elimination.
    std::vector<std::vector<Rat>> a(static_cast<std::size_t>(ell),
                                    std::vector<Rat>(static_cast<std::size_t>(ell)));
    for (int i = 1; i <= ell; ++i)
        for (int j = 1; j <= ell; ++j) {
            int v = lambda.row(i - 1) - mu.row(j - 1) - i + j;
            if (v >= 0)
                a[i - 1][j - 1] = Rat(1) / Rat(factorial(static_cast<unsigned>(v)));
        }
    Rat det = 1;
    for (int col = 0; col < ell; ++col) {
        int pivot = -1;
        for (int r = col; r < ell; ++r)
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(col)]);
            det = -det;
        }
        const Rat& p = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        det *= p;
        for (int r = col + 1; r < ell; ++r) {
            Rat factor = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / p;
            if (factor == 0) continue;
            for (int c = col; c < ell; ++c)
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    factor * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
        }
    }
    Rat count = Rat(factorial(static_cast<unsigned>(m))) * det;
    return to_integer(count);
}

namespace {

void enumerate_bounded(int max_rows, int max_first, int max_size,
                       std::vector<int>& current, std::vector<Partition>& out) {
    out.push_back(Partition(current));
    if (static_cast<int>(current.size()) >= max_rows) return;
    int cap = current.empty() ? max_first : std::min(max_first, current.back());
    for (int p = 1; p <= cap && p <= max_size; ++p) {
        current.push_back(p);
        enumerate_bounded(max_rows, max_first, max_size - p, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> rectangle_partitions(int k, int w) {
    if (k < 1 || w < 0) throw std::invalid_argument("rectangle_partitions: need k >= 1, w >= 0");
    std::vector<Partition> out;
    std::vector<int> current;
    enumerate_bounded(k, w, k * w, current, out);
    std::sort(out.begin(), out.end(), GradedLex{});
    return out;
}

std::vector<Partition> partitions_up_to_size(int max_size, int max_rows) {
    std::vector<Partition> out;
    if (max_size < 0 || max_rows < 0) return out;
    std::vector<int> current;
    enumerate_bounded(max_rows, max_size, max_size, current, out);
    std::sort(out.begin(), out.end(), GradedLex{});
    return out;
}

std::vector<Box> skew_boxes(const Partition& lambda, const Partition& mu) {
    if (!contains(mu, lambda))
        throw std::invalid_argument("skew_boxes: mu is not contained in lambda");
    std::vector<Box> boxes;
    for (int r = 0; r < lambda.rows(); ++r)
        for (int c = mu.row(r); c < lambda.row(r); ++c) boxes.push_back({r, c});
    return boxes;
}

bool is_border_strip(const Partition& lambda, const Partition& mu) {
    std::vector<Box> boxes = skew_boxes(lambda, mu);
    if (boxes.empty()) return false;
    std::set<Box> box_set(boxes.begin(), boxes.end());
    // No 2x2 square.
    for (const Box& b : boxes)
        if (box_set.count({b.row, b.col + 1}) && box_set.count({b.row + 1, b.col}) &&
            box_set.count({b.row + 1, b.col + 1}))
            return false;
    // Edge-connected.
    std::set<Box> seen;
    std::vector<Box> stack{boxes.front()};
    seen.insert(boxes.front());
    while (!stack.empty()) {
        Box b = stack.back();
        stack.pop_back();
        for (Box nb : {Box{b.row - 1, b.col}, Box{b.row + 1, b.col}, Box{b.row, b.col - 1},
                       Box{b.row, b.col + 1}})
            if (box_set.count(nb) && !seen.count(nb)) {
                seen.insert(nb);
                stack.push_back(nb);
            }
    }
    return seen.size() == boxes.size();
}

}  // namespace grassbs
