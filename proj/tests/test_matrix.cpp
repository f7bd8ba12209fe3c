#include <doctest.h>

#include "grassbs/matrix.hpp"

using namespace grassbs;

namespace {

QMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    QMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    return m;
}

}  // namespace

TEST_CASE("rank and rref pivots") {
    QMatrix m = from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
    CHECK(m.rank() == 2);
    CHECK(m.rref().pivot_cols == std::vector<int>{0, 1});
    CHECK(QMatrix::identity(4).rank() == 4);
    CHECK(QMatrix(3, 5).rank() == 0);
}

TEST_CASE("determinant") {
    CHECK(from_rows({{1, 1}, {0, 1}}).determinant() == 1);
    CHECK(from_rows({{0, 1}, {1, 0}}).determinant() == -1);
    CHECK(from_rows({{1, 2}, {2, 4}}).determinant() == 0);
    CHECK(from_rows({{2, 0, 1}, {1, 3, 0}, {0, 1, 4}}).determinant() == 25);
}

TEST_CASE("nullspace basis solves the system") {
    QMatrix m = from_rows({{1, 2, 3}, {0, 1, 1}});
    auto basis = m.nullspace_basis();
    REQUIRE(basis.size() == 1);
    for (const auto& v : basis) {
        auto image = m.apply(v);
        for (const Rat& x : image) CHECK(x == 0);
    }
    CHECK(QMatrix::identity(3).nullspace_basis().empty());
}

TEST_CASE("solve") {
    QMatrix m = from_rows({{1, 1}, {0, 1}});
    auto x = m.solve({Rat(3), Rat(1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 1);

    QMatrix inconsistent = from_rows({{1, 1}, {1, 1}});
    CHECK_FALSE(inconsistent.solve({Rat(0), Rat(1)}).has_value());
}

TEST_CASE("submatrix and product") {
    QMatrix m = from_rows({{1, 2, 3}, {4, 5, 6}});
    QMatrix s = m.submatrix({1}, {0, 2});
    CHECK(s(0, 0) == 4);
    CHECK(s(0, 1) == 6);
    QMatrix p = m * from_rows({{1}, {0}, {-1}});
    CHECK(p(0, 0) == -2);
    CHECK(p(1, 0) == -2);
}
