#include <catch2/catch_amalgamated.hpp>

#include "ccx/linalg.hpp"
#include "ccx/oracle.hpp"

using namespace ccx;

TEST_CASE("solve: identity system") {
    QMatrix A{{1, 0}, {0, 1}};
    auto x = solve_linear_system(A, {Rational(3), Rational(4)});
    REQUIRE(x);
    CHECK(*x == QVector{Rational(3), Rational(4)});
}

TEST_CASE("solve: underdetermined fixes free variables to zero") {
    QMatrix A{{1, 1}};
    auto x = solve_linear_system(A, {Rational(2)});
    REQUIRE(x);
    CHECK(*x == QVector{Rational(2), Rational(0)});
}

TEST_CASE("solve: inconsistent system") {
    QMatrix A{{1}, {1}};
    CHECK_FALSE(solve_linear_system(A, {Rational(1), Rational(2)}));
}

TEST_CASE("solve result satisfies the system exactly") {
    SplitMix64 rng(Seed{7});
    for (int t = 0; t < 60; ++t) {
        std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(5);
        QMatrix A(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) A.at(i, j) = rng.rational(6);
        QVector b(rows);
        for (auto& q : b) q = rng.rational(6);
        auto x = solve_linear_system(A, b);
        if (x) CHECK(A.apply(*x) == b);
    }
}

TEST_CASE("rank basics") {
    CHECK(rank(QMatrix::identity(3)) == 3);
    CHECK(rank(QMatrix(2, 2)) == 0);
    CHECK(rank(QMatrix{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("rank equals rank of the transpose") {
    SplitMix64 rng(Seed{11});
    for (int t = 0; t < 80; ++t) {
        std::size_t rows = 1 + rng.below(6), cols = 1 + rng.below(6);
        QMatrix A(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) A.at(i, j) = rng.rational(5);
        CHECK(rank(A) == rank(A.transpose()));
    }
}

TEST_CASE("kernel vectors annihilate and count out the rank") {
    SplitMix64 rng(Seed{13});
    for (int t = 0; t < 60; ++t) {
        std::size_t rows = 1 + rng.below(4), cols = 1 + rng.below(5);
        QMatrix A(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) A.at(i, j) = rng.rational(5);
        auto basis = kernel_basis(A);
        CHECK(basis.size() == cols - rank(A));
        for (const auto& v : basis) CHECK(is_zero(A.apply(v)));
    }
}
