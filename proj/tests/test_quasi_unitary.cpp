#include "doctest.h"

#include "starcert/quasi_unitary.hpp"

#include <random>

using namespace starcert;

namespace {

StarPoly c(const PolyRingPtr& R, long n) { return StarPoly(R, ExactScalar(n)); }

Matrix<StarPoly> ident(const PolyRingPtr& R, size_t n) {
    return Matrix<StarPoly>::identity(n, c(R, 1), StarPoly(R));
}

StarPoly random_poly(const PolyRingPtr& R, std::mt19937& rng, int max_deg, int terms) {
    TermMap t;
    for (int k = 0; k < terms; ++k) {
        Exponents e(R->nvars(), 0);
        int budget = int(rng() % (max_deg + 1));
        for (int b = 0; b < budget; ++b) e[rng() % R->nvars()]++;
        long num = long(rng() % 9) - 4;
        if (num) t[e] = ExactScalar(mpq_class(num));
    }
    return StarPoly(R, std::move(t));
}

}  // namespace

TEST_CASE("qu_pair basics") {
    auto R = PolyRing::make({"x"});
    StarPoly x = StarPoly::variable(R, 0);

    QuasiUnitary q = qu_pair(x, c(R, 1));
    CHECK(q.T(0, 0) == x);
    CHECK(q.T(0, 1) == -c(R, 1));
    CHECK(q.T(1, 0) == c(R, 1));
    CHECK(q.T(1, 1) == x);
    CHECK(q.s == x * x + c(R, 1));

    QuasiUnitary z = qu_pair(StarPoly(R), StarPoly(R));
    CHECK(z.T.is_zero());
    CHECK(z.s.is_zero());

    QuasiUnitary e = qu_pair(c(R, 1), StarPoly(R));
    CHECK(e.T == ident(R, 2));
    CHECK(e.s == c(R, 1));
}

TEST_CASE("build_quasi_unitary column condition and unitarity") {
    auto R = PolyRing::make({"x", "y"});
    StarPoly x = StarPoly::variable(R, 0), y = StarPoly::variable(R, 1);

    SUBCASE("k=2 with unit vector input") {
        BuiltQuasiUnitary b = build_quasi_unitary({c(R, 1), StarPoly(R), StarPoly(R), StarPoly(R)});
        for (size_t i = 0; i < 4; ++i)
            CHECK(b.qu.T(i, 0) == b.multiplier * (i == 0 ? c(R, 1) : StarPoly(R)));
    }

    SUBCASE("k=2 induction-hypothesis branch (upper half only)") {
        BuiltQuasiUnitary b = build_quasi_unitary({x, y, StarPoly(R), StarPoly(R)});
        CHECK(b.qu.T(0, 0) == b.multiplier * x);
        CHECK(b.qu.T(1, 0) == b.multiplier * y);
        CHECK(b.qu.T(2, 0).is_zero());
        CHECK(b.qu.T(3, 0).is_zero());
    }

    SUBCASE("k=2 full recursion") {
        BuiltQuasiUnitary b = build_quasi_unitary({x, y, c(R, 1), x + y});
        // construction self-checks T*T = TT* = s I exactly; re-check the column
        std::vector<StarPoly> in{x, y, c(R, 1), x + y};
        for (size_t i = 0; i < 4; ++i) CHECK(b.qu.T(i, 0) == b.multiplier * in[i]);
        // s and the multiplier expand from their stored squares
        StarPoly s(R);
        for (const auto& q : b.qu.s_squares) s += q.star() * q;
        CHECK(s == b.qu.s);
        StarPoly m(R);
        for (const auto& q : b.multiplier_squares) m += q.star() * q;
        CHECK(m == b.multiplier);
    }
}

TEST_CASE("quasi-unitary product law s(UV) = s(U)s(V)") {
    auto R = PolyRing::make({"x"});
    StarPoly x = StarPoly::variable(R, 0);
    QuasiUnitary U = qu_pair(x, c(R, 2));
    QuasiUnitary V = qu_pair(c(R, 1), x * x);
    Matrix<StarPoly> W = U.T * V.T;
    StarPoly sW = U.s * V.s;
    CHECK(W.adjoint() * W == ident(R, 2) * sW);
    CHECK(W * W.adjoint() == ident(R, 2) * sW);
}

TEST_CASE("worked 2x2 Artin example over Q[x]") {
    auto R = PolyRing::make({"x"});
    StarPoly x = StarPoly::variable(R, 0);
    StarPoly a = c(R, 1) + x * x;

    Matrix<StarPoly> A(2, 2, StarPoly(R));
    A(0, 0) = a;
    A(0, 1) = x;
    A(1, 0) = x;
    A(1, 1) = c(R, 1);

    // pivot decomposition a = 1^2 + x^2 as in the worked example
    auto cert = certify_psd_matrix(A, make_univariate_certifier());
    CHECK(cert.denominator == a);
    REQUIRE(cert.rows.size() == 2);
    CHECK(cert.rows[0][0] == a);
    CHECK(cert.rows[0][1].is_zero());
    CHECK(cert.rows[1][0] == x * a);
    CHECK(cert.rows[1][1] == a);
    CHECK(verify_artin(cert, A));
}

TEST_CASE("artin certificate edge cases") {
    auto R = PolyRing::make({"x"});
    StarPoly x = StarPoly::variable(R, 0);

    SUBCASE("n=1") {
        Matrix<StarPoly> A(1, 1, x * x);
        auto cert = certify_psd_matrix(A, make_univariate_certifier());
        CHECK(cert.denominator == c(R, 1));
        REQUIRE(cert.rows.size() == 1);
        CHECK(cert.rows[0][0] == x);
    }

    SUBCASE("identity matrix") {
        Matrix<StarPoly> A = ident(R, 3);
        auto cert = certify_psd_matrix(A, make_univariate_certifier());
        CHECK(verify_artin(cert, A));
        CHECK(cert.denominator == c(R, 1));
    }

    SUBCASE("zero pivot with nonzero row rejected") {
        Matrix<StarPoly> A(2, 2, StarPoly(R));
        A(0, 1) = x;
        A(1, 0) = x;
        A(1, 1) = c(R, 1);
        CHECK_THROWS_AS(certify_psd_matrix(A, make_univariate_certifier()), ZeroBlockInconsistent);
    }

    SUBCASE("zero pivot with zero row recurses") {
        Matrix<StarPoly> A(2, 2, StarPoly(R));
        A(1, 1) = x * x;
        auto cert = certify_psd_matrix(A, make_univariate_certifier());
        CHECK(verify_artin(cert, A));
    }

    SUBCASE("non-hermitian rejected") {
        Matrix<StarPoly> A(2, 2, StarPoly(R));
        A(0, 1) = x;
        CHECK_THROWS_AS(certify_psd_matrix(A, make_univariate_certifier()), NotHermitianError);
    }
}

TEST_CASE("verify_artin rejects tampered certificates") {
    auto R = PolyRing::make({"x"});
    StarPoly x = StarPoly::variable(R, 0);
    Matrix<StarPoly> A(2, 2, StarPoly(R));
    A(0, 0) = c(R, 1) + x * x;
    A(0, 1) = x;
    A(1, 0) = x;
    A(1, 1) = c(R, 1);
    auto cert = certify_psd_matrix(A, make_univariate_certifier());

    auto dropped = cert;
    dropped.rows.pop_back();
    CHECK_FALSE(verify_artin(dropped, A));

    auto shifted = A;
    shifted(0, 0) += c(R, 1);
    CHECK_FALSE(verify_artin(cert, shifted));
}

TEST_CASE("random annotated PSD matrices certify") {
    // General Gram annotations keep certificate sizes manageable up to n = 3;
    // for n = 4 an upper-triangular root matrix keeps every pivot a single
    // square and the Schur annotations thin.
    auto R = PolyRing::make({"x"});
    std::mt19937 rng(13);
    auto certifier = make_univariate_certifier();
    for (int rep = 0; rep < 6; ++rep) {
        size_t n = 2 + rep % 2;
        std::vector<std::vector<StarPoly>> roots;
        for (size_t t = 0; t < n; ++t) {
            std::vector<StarPoly> row;
            for (size_t j = 0; j < n; ++j) row.push_back(random_poly(R, rng, 1, 2));
            roots.push_back(std::move(row));
        }
        Matrix<StarPoly> A = rows_gram(roots, n, StarPoly(R));
        auto cert = certify_psd_matrix(A, certifier, &roots);
        CHECK(verify_artin(cert, A));
    }
    for (int rep = 0; rep < 2; ++rep) {
        size_t n = 4;
        std::vector<std::vector<StarPoly>> roots;
        for (size_t t = 0; t < n; ++t) {
            std::vector<StarPoly> row(n, StarPoly(R));
            for (size_t j = t; j < n; ++j) row[j] = random_poly(R, rng, 1, 2);
            if (row[t].is_zero()) row[t] = c(R, 1 + long(rng() % 3));
            roots.push_back(std::move(row));
        }
        Matrix<StarPoly> A = rows_gram(roots, n, StarPoly(R));
        auto cert = certify_psd_matrix(A, certifier, &roots);
        CHECK(verify_artin(cert, A));
        CHECK_FALSE(cert.denominator.is_zero());
    }
}
