#include "doctest.h"

#include "starcert/fraction.hpp"
#include "starcert/poly.hpp"
#include "starcert/scalar.hpp"

#include <random>

using namespace starcert;

TEST_CASE("exact scalar arithmetic and involution") {
    ExactScalar z(mpq_class(3), mpq_class(1, 2));
    CHECK(z.conj().conj() == z);
    ExactScalar w(mpq_class(-1, 3), mpq_class(2));
    CHECK((z * w).conj() == z.conj() * w.conj());
    ExactScalar n = z * z.conj();
    CHECK(n.is_real());
    CHECK(n.re() >= 0);
    CHECK(z * z.inverse() == ExactScalar::one());
}

TEST_CASE("scalar text round-trip") {
    for (const char* s : {"0", "3", "-3/2", "i", "-i", "2i", "-2/3i", "3/2+1/2i", "1-i"}) {
        auto z = ExactScalar::parse(s);
        REQUIRE(z.has_value());
        CHECK(z->str() == s);
    }
}

TEST_CASE("commutative star-poly laws") {
    auto R = PolyRing::make({"x", "y"});
    StarPoly x = StarPoly::variable(R, 0), y = StarPoly::variable(R, 1);
    StarPoly p = ExactScalar(mpq_class(3), mpq_class(1)) * x * x * y - y + StarPoly(R, ExactScalar::rational(1, 2));

    CHECK(p.star().star() == p);
    CHECK((p * y).star() == p.star() * y.star());
    CHECK(x * y == y * x);
    CHECK(p - p == StarPoly(R));
    CHECK((x + y) * (x - y) == x * x - y * y);

    // coefficient conjugation, variables fixed
    StarPoly q = ExactScalar(mpq_class(3), mpq_class(-1)) * x * x * y - y + StarPoly(R, ExactScalar::rational(1, 2));
    CHECK(p.star() == q);
}

TEST_CASE("poly text round-trip matches canonical form") {
    auto R = PolyRing::make({"x", "y", "z"});
    StarPoly x = StarPoly::variable(R, 0), y = StarPoly::variable(R, 1), z = StarPoly::variable(R, 2);
    StarPoly p = ExactScalar(mpq_class(3, 2), mpq_class(1, 2)) * x * x * y - z;
    std::string s = p.str();
    CHECK(s == "(3/2+1/2i)*x^2*y - z");
    CHECK(StarPoly::parse(R, s) == p);

    for (const char* t : {"x^2 - 2*x + 1", "i*x + 1", "-x*y*z", "0", "5/3"}) {
        StarPoly q = StarPoly::parse(R, t);
        CHECK(StarPoly::parse(R, q.str()) == q);
    }
}

TEST_CASE("kronecker product equals naive product") {
    auto R = PolyRing::make({"x", "y"});
    std::mt19937 rng(7);
    auto rnd_poly = [&](int terms, int deg) {
        TermMap t;
        for (int k = 0; k < terms; ++k) {
            Exponents e{uint32_t(rng() % (deg + 1)), uint32_t(rng() % (deg + 1))};
            long num = long(rng() % 19) - 9;
            long im = long(rng() % 5) - 2;
            t[e] = ExactScalar(mpq_class(num), mpq_class(im, 3));
        }
        return StarPoly(R, std::move(t));
    };
    for (int rep = 0; rep < 20; ++rep) {
        StarPoly a = rnd_poly(30, 12), b = rnd_poly(25, 9);
        TermMap kr = term_mul_kronecker(a.terms(), b.terms(), 2);
        TermMap nv = term_mul_naive(a.terms(), b.terms(), 2);
        CHECK(StarPoly(R, std::move(kr)) == StarPoly(R, std::move(nv)));
    }
}

TEST_CASE("quadratic relation ring normalizes") {
    // w^2 = w - r1^2 - r2^2
    auto base = PolyRing::make({"w", "r1", "r2"});
    TermMap rep;
    rep[{1, 0, 0}] = ExactScalar::one();
    rep[{0, 2, 0}] = -ExactScalar::one();
    rep[{0, 0, 2}] = -ExactScalar::one();
    auto Q = PolyRing::make_quotient({"w", "r1", "r2"}, "w", rep);

    StarPoly w = StarPoly::variable(Q, 0), r1 = StarPoly::variable(Q, 1), r2 = StarPoly::variable(Q, 2);
    CHECK(w * w == w - r1 * r1 - r2 * r2);
    CHECK(w.pow(3) == w * (w - r1 * r1 - r2 * r2));
    // degree in w never exceeds 1 after normalization
    CHECK(w.pow(5).degree_in(0) <= 1);
    // (A + Bw)(A + B - Bw) is w-free: the quadratic norm trick
    StarPoly A = r1 + r2, B = r1 - r2;
    StarPoly norm = (A + B * w) * (A + B - B * w);
    CHECK(norm.degree_in(0) == 0);
}

TEST_CASE("exact division") {
    auto R = PolyRing::make({"x", "y"});
    StarPoly x = StarPoly::variable(R, 0), y = StarPoly::variable(R, 1);
    StarPoly f = (x + y) * (x - y + StarPoly(R, ExactScalar::one()));
    auto q = f.divide_exact(x + y);
    REQUIRE(q.has_value());
    CHECK(*q == x - y + StarPoly(R, ExactScalar::one()));
    CHECK_FALSE(f.divide_exact(x + StarPoly(R, ExactScalar::one())).has_value());
}

TEST_CASE("fraction field arithmetic") {
    auto R = PolyRing::make({"s", "t"});
    Fraction s = Fraction::variable(R, 0), t = Fraction::variable(R, 1);
    Fraction one = Fraction::constant(R, ExactScalar::one());
    Fraction f = (s * s - t * t) / (s + t);
    CHECK(f == s - t);
    CHECK(f * f.inverse() == one);
    CHECK((s / t + t / s) * (s * t) == s * s + t * t);
    CHECK(f.star() == f);  // real coefficients, self-adjoint variables
    Fraction g = Fraction(StarPoly(R, ExactScalar::i())) * s / t;
    CHECK(g.star() == -g);
    CHECK(g.star().star() == g);
}
