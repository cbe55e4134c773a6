#include <doctest.h>

#include <random>

#include "qsigma/intmatrix.hpp"

using namespace qsigma;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, long range) {
    std::uniform_int_distribution<long> dist(-range, range);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
    return m;
}

void check_snf(const IntMatrix& m) {
    SnfDecomposition d = smith_normal_form(m);
    CHECK(d.u * m * d.v == d.s);
    Int du = d.u.determinant(), dv = d.v.determinant();
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    const std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i + 1 < n; ++i) {
        CHECK(d.s.at(i, i) >= 0);
        if (d.s.at(i, i) != 0) {
            if (d.s.at(i + 1, i + 1) != 0) CHECK(d.s.at(i + 1, i + 1) % d.s.at(i, i) == 0);
        } else {
            CHECK(d.s.at(i + 1, i + 1) == 0);
        }
    }
    for (std::size_t i = 0; i < d.s.rows(); ++i)
        for (std::size_t j = 0; j < d.s.cols(); ++j)
            if (i != j) CHECK(d.s.at(i, j) == 0);
}

}  // namespace

TEST_SUITE("intmatrix") {

TEST_CASE("smith normal form examples") {
    SUBCASE("identity") {
        IntMatrix id = IntMatrix::identity(3);
        SnfDecomposition d = smith_normal_form(id);
        CHECK(d.s == id);
        check_snf(id);
    }
    SUBCASE("circulant of (1,0,1)") {
        IntMatrix m = IntMatrix::from_rows({{Int(1), Int(0), Int(1)},
                                            {Int(1), Int(1), Int(0)},
                                            {Int(0), Int(1), Int(1)}});
        SnfDecomposition d = smith_normal_form(m);
        CHECK(d.s.at(0, 0) == 1);
        CHECK(d.s.at(1, 1) == 1);
        CHECK(d.s.at(2, 2) == 2);
        check_snf(m);
    }
    SUBCASE("diag(2,3)") {
        IntMatrix m(2, 2);
        m.at(0, 0) = 2;
        m.at(1, 1) = 3;
        SnfDecomposition d = smith_normal_form(m);
        CHECK(d.s.at(0, 0) == 1);
        CHECK(d.s.at(1, 1) == 6);
        check_snf(m);
    }
}

TEST_CASE("smith normal form randomized") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int iter = 0; iter < 200; ++iter) {
        IntMatrix m = random_matrix(rng, dim(rng), dim(rng), 6);
        check_snf(m);
    }
}

TEST_CASE("integer kernel examples") {
    SUBCASE("rank-one difference matrix") {
        IntMatrix m = IntMatrix::from_rows({{Int(-1), Int(1)}, {Int(1), Int(-1)}});
        auto basis = integer_kernel(m);
        REQUIRE(basis.size() == 1);
        CHECK(basis[0] == std::vector<Int>{Int(1), Int(1)});
    }
    SUBCASE("identity has trivial kernel") {
        CHECK(integer_kernel(IntMatrix::identity(2)).empty());
    }
    SUBCASE("all-ones row") {
        IntMatrix m = IntMatrix::from_rows({{Int(1), Int(1), Int(1)}});
        auto basis = integer_kernel(m);
        REQUIRE(basis.size() == 2);
        for (const auto& v : basis) {
            Int dot = v[0] + v[1] + v[2];
            CHECK(dot == 0);
            CHECK(content(v) == 1);
        }
    }
}

TEST_CASE("integer kernel randomized") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int iter = 0; iter < 200; ++iter) {
        IntMatrix m = random_matrix(rng, dim(rng), dim(rng), 4);
        auto basis = integer_kernel(m);
        for (const auto& v : basis) {
            CHECK(content(v) == 1);
            for (std::size_t i = 0; i < m.rows(); ++i) {
                Int dot = 0;
                for (std::size_t j = 0; j < m.cols(); ++j) dot += m.at(i, j) * v[j];
                CHECK(dot == 0);
            }
        }
        SnfDecomposition d = smith_normal_form(m);
        std::size_t rank = 0;
        for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
            if (d.s.at(i, i) != 0) ++rank;
        CHECK(basis.size() == m.cols() - rank);
    }
}

TEST_CASE("hermite normal form and lattices") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 100; ++iter) {
        IntMatrix m = random_matrix(rng, 3, 4, 5);
        HnfDecomposition d = hermite_normal_form(m);
        CHECK(d.u * m == d.h);
        Int det = d.u.determinant();
        CHECK((det == 1 || det == -1));

        Lattice lat(4, {m.row(0), m.row(1), m.row(2)});
        // A random integer combination of generators is a member, and solve
        // returns exact coefficients.
        std::uniform_int_distribution<long> coeff(-3, 3);
        std::vector<Int> x(4, Int(0));
        std::vector<Int> y_true(3);
        for (std::size_t r = 0; r < 3; ++r) {
            y_true[r] = coeff(rng);
            for (std::size_t j = 0; j < 4; ++j) x[j] += y_true[r] * m.at(r, j);
        }
        auto y = lat.solve(x);
        REQUIRE(y.has_value());
        std::vector<Int> reconstructed(4, Int(0));
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t j = 0; j < 4; ++j) reconstructed[j] += (*y)[r] * m.at(r, j);
        CHECK(reconstructed == x);
        // Canonical reduction is idempotent.
        auto red = lat.reduce(x);
        CHECK(lat.reduce(red) == red);
        CHECK(is_zero_vector(red));
    }
}

TEST_CASE("determinant") {
    IntMatrix m = IntMatrix::from_rows({{Int(2), Int(1)}, {Int(7), Int(4)}});
    CHECK(m.determinant() == 1);
    IntMatrix z(2, 2);
    CHECK(z.determinant() == 0);
    CHECK(IntMatrix::identity(4).determinant() == 1);
}

}  // TEST_SUITE
