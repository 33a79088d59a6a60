#include <catch2/catch_amalgamated.hpp>

#include <cfloat>
#include <cmath>

#include "shiftbound/jacobi.hpp"
#include "shiftbound/parse.hpp"
#include "shiftbound/symmetric_matrix.hpp"
#include "support.hpp"

using namespace shiftbound;
using Catch::Approx;
using testsupport::all_fives;
using testsupport::mixed_signs;
using testsupport::random_symmetric;

TEST_CASE("construction validates input") {
    CHECK_THROWS_AS(SymmetricMatrix(2, {1, 2, 3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(SymmetricMatrix(2, {1, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(SymmetricMatrix(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(SymmetricMatrix(1, {std::nan("")}), std::invalid_argument);

    // Near-symmetric input is averaged.
    const SymmetricMatrix a(2, {1.0, 2.0, 2.0 + 5e-13, 3.0});
    CHECK(a(0, 1) == a(1, 0));
}

TEST_CASE("shift_matrix subtracts x from every entry") {
    const SymmetricMatrix a = mixed_signs();

    const SymmetricMatrix s1 = shift_matrix(a, 1.0);
    const SymmetricMatrix want1{{5, 0, 2}, {0, 6, 3}, {2, 3, 4}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(s1(i, j) == want1(i, j));

    const SymmetricMatrix s3 = shift_matrix(a, 3.0);
    const SymmetricMatrix want3{{3, -2, 0}, {-2, 4, 1}, {0, 1, 2}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(s3(i, j) == want3(i, j));

    const SymmetricMatrix s0 = shift_matrix(a, 0.0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(s0(i, j) == a(i, j));
}

TEST_CASE("shift round trip is exact to one ulp per entry") {
    Xoshiro256StarStar rng(11);
    for (int t = 0; t < 200; ++t) {
        const int n = rng.uniform_int(1, 8);
        const SymmetricMatrix a = random_symmetric(n, -10.0, 10.0, rng);
        const double x = rng.uniform_real(0.0, 10.0);
        const SymmetricMatrix back = shift_matrix(shift_matrix(a, x), -x);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const double scale = std::max({std::abs(a(i, j)), std::abs(x), 1.0});
                CHECK(std::abs(back(i, j) - a(i, j)) <= DBL_EPSILON * scale);
            }
    }
}

TEST_CASE("row_radius") {
    CHECK(row_radius(all_fives(), 0) == 10.0);
    CHECK(row_radius(SymmetricMatrix(1, {7.0}), 0) == 0.0);
    CHECK(row_radius(mixed_signs(), 2) == 7.0);
    CHECK_THROWS_AS(row_radius(all_fives(), 3), std::out_of_range);

    // Definitional identity under shifting, sampled x.
    Xoshiro256StarStar rng(12);
    for (int t = 0; t < 100; ++t) {
        const int n = rng.uniform_int(2, 8);
        const SymmetricMatrix a = random_symmetric(n, -10.0, 10.0, rng);
        const double x = rng.uniform_real(-5.0, 5.0);
        const SymmetricMatrix s = shift_matrix(a, x);
        for (int i = 0; i < n; ++i) {
            double direct = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != i) direct += std::abs(a(i, j) - x);
            CHECK(row_radius(s, i) == Approx(direct).margin(1e-12));
        }
    }
}

TEST_CASE("negate") {
    const SymmetricMatrix a{{1, -2}, {-2, 3}};
    const SymmetricMatrix na = negate(a);
    CHECK(na(0, 0) == -1.0);
    CHECK(na(0, 1) == 2.0);
    CHECK(na(1, 1) == -3.0);

    const SymmetricMatrix z(3, std::vector<double>(9, 0.0));
    const SymmetricMatrix nz = negate(z);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(nz(i, j) == 0.0);

    const SymmetricMatrix round = negate(negate(mixed_signs()));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(round(i, j) == mixed_signs()(i, j));
}

TEST_CASE("eigen oracle on the worked examples") {
    const Spectrum s1 = eigen_oracle(all_fives());
    REQUIRE(s1.eigenvalues.size() == 3);
    CHECK(s1.eigenvalues[0] == Approx(1.0).margin(1e-9));
    CHECK(s1.eigenvalues[1] == Approx(1.0).margin(1e-9));
    CHECK(s1.eigenvalues[2] == Approx(16.0).margin(1e-9));

    const Spectrum s2 = eigen_oracle(mixed_signs());
    CHECK(s2.eigenvalues[0] == Approx(1.13026).margin(1e-4));
    CHECK(s2.eigenvalues[1] == Approx(5.39938).margin(1e-4));
    CHECK(s2.eigenvalues[2] == Approx(11.4704).margin(1e-4));

    const Spectrum s3 = eigen_oracle(SymmetricMatrix::diagonal({1, 2, 3}));
    CHECK(s3.eigenvalues[0] == 1.0);
    CHECK(s3.eigenvalues[1] == 2.0);
    CHECK(s3.eigenvalues[2] == 3.0);
}

TEST_CASE("eigen oracle trace and residual properties") {
    Xoshiro256StarStar rng(13);
    for (int t = 0; t < 1000; ++t) {
        const int n = rng.uniform_int(1, 10);
        const SymmetricMatrix a = random_symmetric(n, -10.0, 10.0, rng);
        const EigenDecomposition dec = jacobi_eigen(a);

        double sum = 0.0;
        for (double ev : dec.eigenvalues) sum += ev;
        REQUIRE(std::abs(sum - a.trace()) < 1e-7);

        for (int k = 0; k < n; ++k) {
            double res2 = 0.0;
            for (int r = 0; r < n; ++r) {
                double av = 0.0;
                for (int c = 0; c < n; ++c) av += a(r, c) * dec.vector_entry(c, k);
                const double diff = av - dec.eigenvalues[k] * dec.vector_entry(r, k);
                res2 += diff * diff;
            }
            REQUIRE(std::sqrt(res2) < 1e-6);
        }

        for (std::size_t k = 1; k < dec.eigenvalues.size(); ++k)
            REQUIRE(dec.eigenvalues[k - 1] <= dec.eigenvalues[k]);
    }
}

TEST_CASE("eigen oracle rejects oversized input") {
    const int n = 257;
    CHECK_THROWS_AS(eigen_oracle(SymmetricMatrix::diagonal(std::vector<double>(n, 1.0))),
                    std::invalid_argument);
}

TEST_CASE("parse_matrix") {
    const SymmetricMatrix a = parse_matrix("3\n6 5 5\n5 6 5\n5 5 6\n");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(a(i, j) == all_fives()(i, j));

    const SymmetricMatrix one = parse_matrix("1\n7\n");
    CHECK(one.size() == 1);
    CHECK(one(0, 0) == 7.0);

    CHECK_NOTHROW(parse_matrix("# comment\n2\n1 2\n2 1\n# trailing\n"));
    CHECK_THROWS_AS(parse_matrix("2\n1 2\n3 1\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("2\n1 2\n2\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("2\n1 x\n2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("2\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix(""), ParseError);
    CHECK_THROWS_AS(parse_matrix("0\n"), ParseError);
}

TEST_CASE("parse_graph") {
    const UndirectedGraph g = parse_graph("3\n0 1\n1 2\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edges().size() == 2);

    CHECK_THROWS_AS(parse_graph("3\n1 1\n"), ParseError);   // self-loop
    CHECK_THROWS_AS(parse_graph("3\n2 1\n"), ParseError);   // u >= v
    CHECK_THROWS_AS(parse_graph("3\n0 3\n"), ParseError);   // out of range
    CHECK_THROWS_AS(parse_graph("3\n0 1\n0 1\n"), ParseError);  // duplicate
    CHECK_THROWS_AS(parse_graph("3\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("3\n0 a\n"), ParseError);
}
