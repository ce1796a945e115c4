#include "doctest.h"

#include "starcert/ore.hpp"
#include "starcert/poly.hpp"
#include "starcert/scalar_certifier.hpp"

#include <random>

using namespace starcert;

namespace {

StarPoly c(const PolyRingPtr& R, long n) { return StarPoly(R, ExactScalar(n)); }

WeylElement wc(long n) { return WeylElement::constant(ExactScalar(n)); }

PivotCertifier<StarPoly> poly_pivot_certifier() {
    return [](const StarPoly& a) -> std::optional<PivotCertificate<StarPoly>> {
        auto cert = certify_nonneg_univariate(a);
        if (!cert) return std::nullopt;
        return PivotCertificate<StarPoly>{cert->c, cert->squares};
    };
}

}  // namespace

TEST_CASE("weyl normal form and defining relation") {
    WeylElement a = WeylElement::annihilator(), ad = WeylElement::creator();
    CHECK(a * ad - ad * a == WeylElement::one());
    WeylElement N = WeylElement::number_op();
    CHECK(ad * a == N);
    CHECK(a * N == (N + WeylElement::one()) * a);

    // relation consistency on a random element: (a a*) x - (a* a) x = x
    std::mt19937 rng(11);
    for (int rep = 0; rep < 10; ++rep) {
        WeylElement x;
        for (int t = 0; t < 4; ++t)
            x += WeylElement::monomial(rng() % 3, rng() % 3, ExactScalar(long(rng() % 7) - 3));
        CHECK(a * ad * x - ad * a * x == x);
        CHECK(x.star().star() == x);
        WeylElement y = WeylElement::monomial(rng() % 2, rng() % 3, ExactScalar(long(rng() % 5) - 2));
        CHECK((x * y).star() == y.star() * x.star());
    }
}

TEST_CASE("weyl identities c_k and c_n x_n = c_{n+2}") {
    CHECK(weyl_identities(6));
    WeylElement N = WeylElement::number_op();
    CHECK(WeylElement::c_factor(1) == N);
    // c_1 x_1 = c_3 spelled out
    WeylElement x1 = (N - wc(1)) * (N - wc(2));
    CHECK(WeylElement::c_factor(1) * x1 == WeylElement::c_factor(3));
}

TEST_CASE("weyl_ore finds (N+1) a = a N and friends") {
    WeylElement a = WeylElement::annihilator();
    WeylElement N = WeylElement::number_op();

    SUBCASE("numerator a, denominator N") {
        auto sol = weyl_ore({a}, N, 8);
        CHECK(sol.u * a == sol.g[0] * N);
        // the pair (N+1, a) solves it as well
        CHECK((N + WeylElement::one()) * a == a * N);
    }
    SUBCASE("same element") {
        auto sol = weyl_ore({WeylElement::one()}, N, 8);
        CHECK(sol.u * WeylElement::one() == sol.g[0] * N);
    }
    SUBCASE("numerator N denominator N") {
        auto sol = weyl_ore({N}, N, 8);
        CHECK(sol.u * N == sol.g[0] * N);
    }
    SUBCASE("zero denominator") { CHECK_THROWS_AS(weyl_ore({a}, WeylElement::zero(), 4), ZeroPivotError); }
}

TEST_CASE("commutative ore specialization") {
    auto R = PolyRing::make({"x", "y"});
    StarPoly x = StarPoly::variable(R, 0), y = StarPoly::variable(R, 1);
    auto oracle = make_commutative_ore<StarPoly>();
    auto sol = oracle({y, x * x}, x);
    CHECK(sol.u == x);
    CHECK(sol.g[0] == y);
    CHECK(sol.g[1] == x * x);
}

TEST_CASE("block identities of the two diagonalization lemmas") {
    auto R = PolyRing::make({"x", "y"});
    StarPoly x = StarPoly::variable(R, 0), y = StarPoly::variable(R, 1);
    StarPoly one = c(R, 1);

    StarPoly a = one + x * x;
    std::vector<StarPoly> b{y, x};
    Matrix<StarPoly> C(2, 2, StarPoly(R));
    C(0, 0) = one + y * y;
    C(0, 1) = x * y;
    C(1, 0) = x * y;
    C(1, 1) = one;
    StarPoly s = a;
    std::vector<StarPoly> f{y, x};
    StarPoly z1 = one + y;
    Matrix<StarPoly> Y(2, 2, StarPoly(R));
    Y(0, 0) = x;
    Y(1, 0) = y;
    Y(1, 1) = one;
    std::vector<StarPoly> yf{x * y, y * y + x};
    StarPoly u = z1;
    std::vector<StarPoly> g = yf;

    CHECK(block_identities_check(a, b, C, s, f, z1, Y, u, g, one));

    auto fbad = f;
    fbad[0] += one;
    CHECK_THROWS_AS(block_identities_check(a, b, C, s, fbad, z1, Y, u, g, one), PreconditionViolated);
}

TEST_CASE("commutative nc-diagonalization") {
    auto R = PolyRing::make({"x"});
    StarPoly x = StarPoly::variable(R, 0);
    StarPoly one = c(R, 1);
    auto oracle = make_commutative_ore<StarPoly>();

    SUBCASE("diagonal input is fixed") {
        Matrix<StarPoly> A(2, 2, StarPoly(R));
        A(0, 0) = x * x;
        A(1, 1) = one;
        auto d = diagonalize_nc(A, oracle, {one, one}, one);
        CHECK(d.Xplus == Matrix<StarPoly>::identity(2, one, StarPoly(R)));
        CHECK(d.Xminus == Matrix<StarPoly>::identity(2, one, StarPoly(R)));
    }

    SUBCASE("worked 2x2") {
        Matrix<StarPoly> A(2, 2, StarPoly(R));
        A(0, 0) = one + x * x;
        A(0, 1) = x;
        A(1, 0) = x;
        A(1, 1) = one;
        auto d = diagonalize_nc(A, oracle, {one, one}, one);
        CHECK(d.d0[0] == one + x * x);
        // D = a^2 c - a b* b = a (a - x^2) = a
        CHECK(d.d0[1] == one + x * x);
    }

    SUBCASE("zero pivot nonzero row") {
        Matrix<StarPoly> A(2, 2, StarPoly(R));
        A(0, 1) = x;
        A(1, 0) = x;
        CHECK_THROWS_AS(diagonalize_nc(A, oracle, {one, one}, one), NotPositiveError);
    }
}

TEST_CASE("weyl nc-diagonalization") {
    WeylElement a = WeylElement::annihilator();
    WeylElement N = WeylElement::number_op();
    WeylElement one = WeylElement::one();
    auto oracle = make_weyl_ore_oracle(8);

    Matrix<WeylElement> A(2, 2, WeylElement::zero());
    A(0, 0) = N;
    A(0, 1) = a.star();
    A(1, 0) = a;
    A(1, 1) = N + one;
    REQUIRE(A == A.adjoint());
    auto d = diagonalize_nc(A, oracle, {one, one}, one);
    CHECK((d.Xplus * A * d.Xplus.adjoint()).is_diagonal());
    CHECK((d.Xminus * d.Xplus).is_diagonal());
}

TEST_CASE("posnc certificate, commutative and weyl") {
    SUBCASE("identity matrix") {
        auto R = PolyRing::make({"x"});
        StarPoly one = c(R, 1);
        Matrix<StarPoly> A = Matrix<StarPoly>::identity(3, one, StarPoly(R));
        auto cert = posnc_certificate<StarPoly>(A, make_commutative_ore<StarPoly>(), poly_pivot_certifier(), one);
        CHECK(cert.rows.size() == 3);
    }

    SUBCASE("commutative 2x2") {
        auto R = PolyRing::make({"x"});
        StarPoly x = StarPoly::variable(R, 0);
        StarPoly one = c(R, 1);
        Matrix<StarPoly> A(2, 2, StarPoly(R));
        A(0, 0) = one + x * x;
        A(0, 1) = x;
        A(1, 0) = x;
        A(1, 1) = one;
        auto cert = posnc_certificate<StarPoly>(A, make_commutative_ore<StarPoly>(), poly_pivot_certifier(), one);
        CHECK_FALSE(cert.rows.empty());
    }

    SUBCASE("weyl diag(c2, c2) pass-through") {
        WeylElement one = WeylElement::one();
        WeylElement c2 = WeylElement::c_factor(2);
        Matrix<WeylElement> A(2, 2, WeylElement::zero());
        A(0, 0) = c2;
        A(1, 1) = c2;
        PivotCertifier<WeylElement> certifier = [&](const WeylElement& p) -> std::optional<PivotCertificate<WeylElement>> {
            if (p == c2) return PivotCertificate<WeylElement>{one, {WeylElement::monomial(0, 2)}};
            if (p == one) return PivotCertificate<WeylElement>{one, {one}};
            return std::nullopt;
        };
        auto cert = posnc_certificate<WeylElement>(A, make_weyl_ore_oracle(8), certifier, one);
        CHECK(cert.rows.size() == 2);
    }
}

TEST_CASE("random hermitian diagonalization property") {
    auto R = PolyRing::make({"x"});
    StarPoly x = StarPoly::variable(R, 0);
    StarPoly one = c(R, 1);
    auto oracle = make_commutative_ore<StarPoly>();
    std::mt19937 rng(5);
    auto rnd = [&](int deg) {
        TermMap t;
        for (int k = 0; k <= deg; ++k) {
            long v = long(rng() % 5) - 2;
            if (v) t[{uint32_t(k)}] = ExactScalar(v);
        }
        return StarPoly(R, std::move(t));
    };
    for (int rep = 0; rep < 10; ++rep) {
        size_t n = 2 + rep % 3;
        std::vector<std::vector<StarPoly>> rows;
        for (size_t i = 0; i < n; ++i) {
            std::vector<StarPoly> r;
            for (size_t j = 0; j < n; ++j) r.push_back(rnd(1));
            rows.push_back(r);
        }
        Matrix<StarPoly> A = rows_gram(rows, n, StarPoly(R));
        A = A + Matrix<StarPoly>::identity(n, one, StarPoly(R));
        std::vector<StarPoly> z(n, one);
        auto d = diagonalize_nc(A, oracle, z, one);
        CHECK((d.Xplus * A * d.Xplus.adjoint()).is_diagonal());
        CHECK((d.Xminus * d.Xplus).is_diagonal());
    }
}
