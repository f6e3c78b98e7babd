#include <random>

#include "doctest.h"

#include "arq/linalg.hpp"

using namespace arq;

namespace {

/// Naive textbook elimination, kept deliberately separate from the library.
std::size_t naive_rank(const Field& f, std::vector<std::vector<Scalar>> a) {
    std::size_t rank = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && f.reduce(a[piv][c]) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || f.reduce(a[r][c]) == 0) continue;
            Scalar factor = f.div(a[r][c], a[rank][c]);
            for (std::size_t k = 0; k < cols; ++k) a[r][k] = f.sub(a[r][k], f.mul(factor, a[rank][k]));
        }
        ++rank;
    }
    return rank;
}

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937& rng) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = f.reduce(static_cast<long>(rng() % 5) - 2);
    return m;
}

std::vector<std::vector<Scalar>> rows_of(const Matrix& m) {
    std::vector<std::vector<Scalar>> out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
    return out;
}

}  // namespace

TEST_SUITE("linalg") {
    TEST_CASE("rank_kernel on small examples") {
        Field q = Field::rationals();
        auto rk = rank_kernel(q, Matrix::from_rows({{1, 1}, {0, 0}}));
        CHECK(rk.rank == 1);
        REQUIRE(rk.kernel.size() == 1);
        // Span {(1, −1)}, echelon-normalized with pivot entry 1.
        CHECK(rk.kernel[0][0] == 1);
        CHECK(rk.kernel[0][1] == -1);

        auto empty = rank_kernel(q, Matrix(0, 3));
        CHECK(empty.rank == 0);
        CHECK(empty.kernel.size() == 3);
    }

    TEST_CASE("rank agrees with a naive elimination oracle over F_2 and Q") {
        std::mt19937 rng(11);
        for (Field f : {Field::prime(2), Field::rationals(), Field::prime(3)}) {
            for (int t = 0; t < 100; ++t) {
                auto m = random_matrix(f, 5, 7, rng);
                CHECK(rank(f, m) == naive_rank(f, rows_of(m)));
            }
        }
    }

    TEST_CASE("rank equals rank of the transpose and rank-nullity holds") {
        std::mt19937 rng(3);
        for (Field f : {Field::prime(2), Field::rationals()}) {
            for (int t = 0; t < 250; ++t) {
                std::size_t r = rng() % 6, c = rng() % 6;
                auto m = random_matrix(f, r, c, rng);
                auto rk = rank_kernel(f, m);
                CHECK(rk.rank == rank(f, m.transpose()));
                CHECK(rk.rank + rk.kernel.size() == c);
                for (const auto& v : rk.kernel) CHECK(multiply(f, m, Matrix::column_vector(v)).is_zero());
            }
        }
    }

    TEST_CASE("cokernel basis annihilates the image") {
        Field f = Field::rationals();
        CHECK(cokernel_basis(f, Matrix::identity(3)).rows() == 0);
        CHECK(cokernel_basis(f, Matrix(3, 2)).rows() == 3);
        std::mt19937 rng(9);
        for (int t = 0; t < 50; ++t) {
            auto m = random_matrix(f, 4, 3, rng);
            auto ck = cokernel_basis(f, m);
            CHECK(ck.rows() == 4 - rank(f, m));
            CHECK(multiply(f, ck, m).is_zero());
        }
    }

    TEST_CASE("solve and inverse") {
        Field f = Field::prime(5);
        Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
        Matrix inv = inverse(f, a);
        CHECK(multiply(f, a, inv) == Matrix::identity(2));
        auto x = solve(f, a, Matrix::from_rows({{1}, {0}}));
        REQUIRE(x);
        CHECK(multiply(f, a, *x) == Matrix::from_rows({{1}, {0}}));
        CHECK(!solve(f, Matrix::from_rows({{1, 1}, {1, 1}}), Matrix::from_rows({{1}, {0}})));
    }
}
