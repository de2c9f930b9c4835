#include <doctest.h>

#include <random>

#include "lcdkit/matrix.hpp"

using namespace lcdkit;

namespace {

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix m(f, rows, cols);
    std::uniform_int_distribution<std::uint32_t> dist(0, f.modulus() - 1);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, dist(rng));
    }
    return m;
}

}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("text format round trip") {
    Field f2(2);
    Matrix m = Matrix::from_text(f2, "110;011");
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(1, 0) == 0);
    CHECK(m.to_text() == "110;011");
    // newline separation is equivalent
    CHECK(Matrix::from_text(f2, "110\n011") == m);

    Field f11(11);
    Matrix big = Matrix::from_text(f11, "10,0,3;0,1,10");
    CHECK(big.at(0, 0) == 10);
    CHECK(big.to_text() == "10,0,3;0,1,10");

    std::mt19937_64 rng(11);
    for (std::uint32_t p : {2u, 5u, 11u}) {
        Field f(p);
        for (int trial = 0; trial < 20; ++trial) {
            Matrix r = random_matrix(f, 1 + trial % 5, 1 + (trial * 7) % 6, rng);
            CHECK(Matrix::from_text(f, r.to_text()) == r);
        }
    }
}

TEST_CASE("text format rejects malformed input") {
    Field f(2);
    CHECK_THROWS_AS(Matrix::from_text(f, ""), ParseError);
    CHECK_THROWS_AS(Matrix::from_text(f, "10;1"), ParseError);   // ragged
    CHECK_THROWS_AS(Matrix::from_text(f, "12"), ParseError);     // entry >= p
    CHECK_THROWS_AS(Matrix::from_text(f, "1a"), ParseError);
}

TEST_CASE("mul fixed points") {
    Field f2(2);
    Matrix m = Matrix::from_text(f2, "10;11");
    CHECK(Matrix::identity(f2, 2).mul(m) == m);
    CHECK(m.mul(Matrix::from_text(f2, "11;10")) == Matrix::from_text(f2, "11;01"));

    Field f3(3);
    CHECK(Matrix::from_text(f3, "2").mul(Matrix::from_text(f3, "2")) ==
          Matrix::from_text(f3, "1"));  // 4 mod 3

    CHECK_THROWS_AS(m.mul(Matrix::from_text(f2, "111")), std::invalid_argument);
    CHECK_THROWS_AS(m.mul(Matrix::from_text(f3, "11;11")), std::invalid_argument);
}

TEST_CASE("gram fixed points") {
    Field f2(2);
    CHECK(Matrix::identity(f2, 3).gram() == Matrix::identity(f2, 3));
    CHECK(Matrix::from_text(f2, "110;011").gram() == Matrix::from_text(f2, "01;10"));
    Field f3(3);
    CHECK(Matrix::from_text(f3, "111").gram() == Matrix::from_text(f3, "0"));
}

TEST_CASE("gram is symmetric") {
    std::mt19937_64 rng(5150);
    for (std::uint32_t p : {2u, 3u, 7u}) {
        Field f(p);
        for (int trial = 0; trial < 30; ++trial) {
            Matrix m = random_matrix(f, 1 + trial % 6, 1 + (trial * 3) % 7, rng);
            CHECK(m.gram().is_symmetric());
        }
    }
}

TEST_CASE("rref fixed points") {
    Field f2(2);
    Matrix z(f2, 3, 4);
    auto rz = z.rref();
    CHECK(rz.rank == 0);
    CHECK(rz.pivots.empty());

    auto r = Matrix::from_text(f2, "11;10").rref();
    CHECK(r.rank == 2);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
    CHECK(r.reduced == Matrix::identity(f2, 2));

    Field f5(5);
    auto r5 = Matrix::from_text(f5, "12;24").rref();  // row 2 = 2 * row 1
    CHECK(r5.rank == 1);
    CHECK(r5.pivots == std::vector<std::size_t>{0});
    CHECK(r5.reduced.at(0, 0) == 1);
    CHECK(r5.reduced.at(0, 1) == 2);
    CHECK(r5.reduced.at(1, 0) == 0);
    CHECK(r5.reduced.at(1, 1) == 0);
}

TEST_CASE("rref transform is invertible and maps input to reduced") {
    std::mt19937_64 rng(424242);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        Field f(p);
        for (int trial = 0; trial < 60; ++trial) {
            std::size_t rows = 1 + trial % 6, cols = 1 + (trial * 5) % 7;
            Matrix m = random_matrix(f, rows, cols, rng);
            auto r = m.rref();
            CHECK(r.transform.mul(m) == r.reduced);
            CHECK(r.transform.det() != 0);
            // pivots strictly increasing, reduced columns canonical
            for (std::size_t i = 1; i < r.pivots.size(); ++i) {
                CHECK(r.pivots[i - 1] < r.pivots[i]);
            }
            for (std::size_t i = 0; i < r.pivots.size(); ++i) {
                for (std::size_t row = 0; row < rows; ++row) {
                    CHECK(r.reduced.at(row, r.pivots[i]) == (row == i ? 1u : 0u));
                }
            }
            // idempotent: rref of the reduced matrix is itself
            CHECK(r.reduced.rref().reduced == r.reduced);
        }
    }
}

TEST_CASE("det fixed points") {
    Field f2(2);
    CHECK(Matrix::identity(f2, 3).det() == 1);
    CHECK(Matrix::from_text(f2, "01;10").det() == 1);
    Field f3(3);
    CHECK(Matrix::from_text(f3, "10;02").det() == 2);
    CHECK(Matrix(f2, 0, 0).det() == 1);  // empty product
    CHECK_THROWS_AS(Matrix(f2, 2, 3).det(), std::invalid_argument);
}

TEST_CASE("det is multiplicative") {
    std::mt19937_64 rng(99);
    for (std::uint32_t p : {2u, 3u, 7u}) {
        Field f(p);
        for (int trial = 0; trial < 50; ++trial) {
            std::size_t n = 1 + trial % 5;
            Matrix a = random_matrix(f, n, n, rng);
            Matrix b = random_matrix(f, n, n, rng);
            CHECK(a.mul(b).det() == f.mul(a.det(), b.det()));
        }
    }
}

TEST_CASE("inverse fixed points") {
    Field f2(2);
    CHECK(Matrix::identity(f2, 4).inverse() == Matrix::identity(f2, 4));
    Matrix j2 = Matrix::from_text(f2, "01;10");
    CHECK(j2.inverse() == j2);
    Field f5(5);
    CHECK(Matrix::from_text(f5, "2").inverse() == Matrix::from_text(f5, "3"));
    CHECK_THROWS_AS(Matrix(f2, 2, 2).inverse(), std::invalid_argument);  // singular
}

TEST_CASE("inverse times input is the identity") {
    std::mt19937_64 rng(31337);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        Field f(p);
        int found = 0;
        for (int trial = 0; trial < 200 && found < 40; ++trial) {
            std::size_t n = 1 + trial % 5;
            Matrix m = random_matrix(f, n, n, rng);
            if (m.det() == 0) continue;
            ++found;
            CHECK(m.inverse().mul(m) == Matrix::identity(f, n));
            CHECK(m.mul(m.inverse()) == Matrix::identity(f, n));
        }
        CHECK(found >= 20);
    }
}

TEST_CASE("right_kernel fixed points") {
    Field f2(2);
    CHECK(Matrix::identity(f2, 3).right_kernel().rows() == 0);
    CHECK(Matrix::from_text(f2, "11").right_kernel() == Matrix::from_text(f2, "11"));
    Field f3(3);
    CHECK(Matrix::from_text(f3, "111").right_kernel() == Matrix::from_text(f3, "102;012"));
}

TEST_CASE("right_kernel spans the solution space") {
    std::mt19937_64 rng(271828);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        Field f(p);
        for (int trial = 0; trial < 60; ++trial) {
            std::size_t rows = 1 + trial % 5, cols = 1 + (trial * 3) % 7;
            Matrix m = random_matrix(f, rows, cols, rng);
            Matrix ker = m.right_kernel();
            CHECK(ker.rows() + m.rref().rank == cols);
            if (ker.rows() > 0) {
                Matrix prod = m.mul(ker.transpose());
                CHECK(prod.is_zero());
                CHECK(ker.rref().rank == ker.rows());
                CHECK(ker.rref().reduced == ker);  // kernel basis is canonical
            }
        }
    }
}

TEST_CASE("vstack and transpose") {
    Field f(3);
    Matrix a = Matrix::from_text(f, "12;01");
    Matrix b = Matrix::from_text(f, "20");
    Matrix s = a.vstack(b);
    CHECK(s.rows() == 3);
    CHECK(s.to_text() == "12;01;20");
    CHECK(a.transpose().to_text() == "10;21");
    CHECK(a.transpose().transpose() == a);
}

}  // TEST_SUITE
