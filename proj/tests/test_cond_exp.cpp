#include "doctest.h"

#include "starcert/crossed.hpp"
#include "starcert/quiver.hpp"

#include <random>

using namespace starcert;

namespace {

// two vertices, one arrow each way plus a knot pair at vertex 1
Quiver sample_quiver() {
    return Quiver::make(2, {{"b", 0, 1}, {"c", 1, 0}});
}

FreeStarPoly random_word_poly(const Quiver& q, std::mt19937& rng, int words, int maxlen) {
    WordTermMap t;
    for (int k = 0; k < words; ++k) {
        Word w;
        int len = int(rng() % (maxlen + 1));
        for (int l = 0; l < len; ++l) w.push_back(uint16_t(rng() % q.alphabet()->size()));
        long c = long(rng() % 7) - 3;
        if (c) t[w] = ExactScalar(c);
    }
    return FreeStarPoly(q.alphabet(), std::move(t));
}

Matrix<FreeStarPoly> random_matrix(const Quiver& q, std::mt19937& rng) {
    size_t n = q.vertex_count();
    Matrix<FreeStarPoly> X(n, n, FreeStarPoly(q.alphabet()));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) X(i, j) = random_word_poly(q, rng, 2, 3);
    return X;
}

Matrix<FreeStarPoly> gram(const Quiver& q, const std::vector<std::vector<FreeStarPoly>>& rows) {
    return rows_gram(rows, q.vertex_count(), FreeStarPoly(q.alphabet()));
}

}  // namespace

TEST_CASE("quiver structure and pij") {
    Quiver q = sample_quiver();
    auto A = q.alphabet();
    uint16_t b = *A->index("b"), bs = *A->index("b*"), c = *A->index("c");

    CHECK(q.origin(b) == 0);
    CHECK(q.terminus(b) == 1);
    CHECK(q.origin(bs) == 1);
    CHECK(q.terminus(bs) == 0);

    // a valid 0->0 path
    FreeStarPoly w = FreeStarPoly::word(A, {b, bs});
    CHECK(pij(q, w, 0, 0) == w);
    CHECK(pij(q, w, 0, 1).is_zero());

    // non-composable word dies
    FreeStarPoly bad = FreeStarPoly::word(A, {b, b});
    CHECK(pij(q, bad, 0, 0).is_zero());
    CHECK(pij(q, bad, 0, 1).is_zero());

    // b then c is 0 -> 0
    FreeStarPoly bc = FreeStarPoly::word(A, {b, c});
    CHECK(pij(q, bc, 0, 0) == bc);

    // empty word: delta_ij
    FreeStarPoly one(A, ExactScalar::one());
    CHECK(pij(q, one, 0, 0) == one);
    CHECK(pij(q, one, 0, 1).is_zero());
}

TEST_CASE("pij star law p_ij(x*) = p_ji(x)*") {
    Quiver q = sample_quiver();
    std::mt19937 rng(3);
    for (int rep = 0; rep < 20; ++rep) {
        FreeStarPoly x = random_word_poly(q, rng, 3, 3);
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < 2; ++j) CHECK(pij(q, x.star(), i, j) == pij(q, x, j, i).star());
    }
}

TEST_CASE("path projection is an idempotent bimodule map") {
    Quiver q = sample_quiver();
    std::mt19937 rng(17);
    auto A = q.alphabet();
    uint16_t b = *A->index("b"), c = *A->index("c");

    for (int rep = 0; rep < 10; ++rep) {
        Matrix<FreeStarPoly> X = random_matrix(q, rng);
        Matrix<FreeStarPoly> P = path_project(q, X);
        CHECK(path_project(q, P) == P);

        // fixes the embedded path algebra
        Matrix<FreeStarPoly> E = path_element(q, {b, c}) + vertex_idempotent(q, 1);
        CHECK(path_project(q, E) == E);

        // bimodule law over embedded elements
        Matrix<FreeStarPoly> B1 = arrow_element(q, b), B2 = arrow_element(q, c);
        CHECK(path_project(q, B1 * X * B2) == B1 * P * B2);

        // star compatibility
        CHECK(path_project(q, X.adjoint()) == P.adjoint());
    }
}

TEST_CASE("path_sos_project reproduces P(X*X) exactly") {
    Quiver q = sample_quiver();
    std::mt19937 rng(23);
    for (int rep = 0; rep < 25; ++rep) {
        std::vector<std::vector<FreeStarPoly>> rows;
        size_t nrows = 1 + rng() % 2;
        for (size_t r = 0; r < nrows; ++r) {
            std::vector<FreeStarPoly> row;
            for (size_t j = 0; j < q.vertex_count(); ++j) row.push_back(random_word_poly(q, rng, 2, 3));
            rows.push_back(row);
        }
        Matrix<FreeStarPoly> S = gram(q, rows);
        auto roots = path_sos_project(q, rows);
        CHECK(gram(q, roots) == path_project(q, S));
    }

    // vertex idempotent rows certify the diagonal
    auto A = q.alphabet();
    FreeStarPoly one(A, ExactScalar::one());
    std::vector<std::vector<FreeStarPoly>> rows{{one, FreeStarPoly(A)}};
    auto roots = path_sos_project(q, rows);
    Matrix<FreeStarPoly> total = gram(q, roots);
    CHECK(total == path_project(q, gram(q, rows)));
}

namespace {

CrossedProductSpec z2_sign_spec(const PolyRingPtr& R) {
    // Z/2 acting on Q[t] by t -> -t
    MonomialMap id{{{0, ExactScalar::one()}}};
    MonomialMap flip{{{0, -ExactScalar::one()}}};
    return CrossedProductSpec(R, GroupTable::cyclic(2), {id, flip});
}

CrossedProductSpec z3_rotation_spec(const PolyRingPtr& R) {
    MonomialMap id{{{0, ExactScalar::one()}, {1, ExactScalar::one()}, {2, ExactScalar::one()}}};
    MonomialMap rot{{{1, ExactScalar::one()}, {2, ExactScalar::one()}, {0, ExactScalar::one()}}};
    MonomialMap rot2{{{2, ExactScalar::one()}, {0, ExactScalar::one()}, {1, ExactScalar::one()}}};
    return CrossedProductSpec(R, GroupTable::cyclic(3), {id, rot, rot2});
}

StarPoly rnd_poly(const PolyRingPtr& R, std::mt19937& rng, int deg) {
    TermMap t;
    for (int k = 0; k < 3; ++k) {
        Exponents e(R->nvars(), 0);
        int budget = int(rng() % (deg + 1));
        for (int b = 0; b < budget; ++b) e[rng() % R->nvars()]++;
        long c = long(rng() % 7) - 3;
        if (c) t[e] = ExactScalar(c);
    }
    return StarPoly(R, std::move(t));
}

}  // namespace

TEST_CASE("group tables validate") {
    CHECK(GroupTable::cyclic(3).order() == 3);
    CHECK(GroupTable::symmetric3().order() == 6);
    GroupTable s3 = GroupTable::symmetric3();
    for (size_t g = 0; g < 6; ++g) CHECK(s3.mul(g, s3.inverse(g)) == s3.identity());

    std::vector<std::vector<size_t>> bad{{0, 1}, {1, 1}};
    CHECK_THROWS(GroupTable::from_table(bad, {"e", "a"}));
}

TEST_CASE("crossed embedding is a *-homomorphism") {
    auto R = PolyRing::make({"t1", "t2", "t3"});
    CrossedProductSpec spec = z3_rotation_spec(R);
    std::mt19937 rng(31);

    // identity maps to the identity matrix
    CrossedElement unit = CrossedElement::from_term(&spec, StarPoly(R, ExactScalar::one()), 0);
    Matrix<StarPoly> I = Matrix<StarPoly>::identity(3, StarPoly(R, ExactScalar::one()), StarPoly(R));
    CHECK(crossed_embed(unit) == I);

    for (int rep = 0; rep < 10; ++rep) {
        CrossedElement x(&spec), y(&spec);
        for (size_t g = 0; g < 3; ++g) {
            x.components()[g] = rnd_poly(R, rng, 2);
            y.components()[g] = rnd_poly(R, rng, 2);
        }
        CHECK(crossed_embed(x * y) == crossed_embed(x) * crossed_embed(y));
        CHECK(crossed_embed(x.star()) == crossed_embed(x).adjoint());
        CHECK(crossed_embed(x + y) == crossed_embed(x) + crossed_embed(y));
        // injectivity on the corpus
        if (!(x == y)) CHECK(crossed_embed(x) != crossed_embed(y));
    }
}

TEST_CASE("crossed projection is an idempotent bimodule map fixing the image") {
    auto R = PolyRing::make({"t1", "t2", "t3"});
    CrossedProductSpec spec = z3_rotation_spec(R);
    std::mt19937 rng(37);

    for (int rep = 0; rep < 8; ++rep) {
        Matrix<StarPoly> M(3, 3, StarPoly(R));
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) M(i, j) = rnd_poly(R, rng, 2);
        Matrix<StarPoly> P = crossed_project(spec, M);
        CHECK(crossed_project(spec, P) == P);
        CHECK(in_crossed_image(spec, P));

        CrossedElement x(&spec);
        for (size_t g = 0; g < 3; ++g) x.components()[g] = rnd_poly(R, rng, 1);
        Matrix<StarPoly> E = crossed_embed(x);
        CHECK(crossed_project(spec, E) == E);
        // bimodule law
        CHECK(crossed_project(spec, E * M) == E * P);
        CHECK(crossed_project(spec, M * E) == P * E);
        // star compatibility
        CHECK(crossed_project(spec, M.adjoint()) == P.adjoint());
    }
}

TEST_CASE("Z/2 sign action: projection of a (x) E_gg") {
    auto R = PolyRing::make({"t"});
    CrossedProductSpec spec = z2_sign_spec(R);
    StarPoly t = StarPoly::variable(R, 0);

    Matrix<StarPoly> M(2, 2, StarPoly(R));
    M(0, 0) = t;  // t (x) E_{e,e}
    Matrix<StarPoly> P = crossed_project(spec, M);
    // (1/2)(t (x) E_ee + (-t) (x) E_gg)
    CHECK(P(0, 0) == t * ExactScalar::rational(1, 2));
    CHECK(P(1, 1) == -(t * ExactScalar::rational(1, 2)));

    // creg evaluation of t^2 (x) e at t = 2 is diag(4, 4)
    CrossedElement x = CrossedElement::from_term(&spec, t * t, 0);
    Matrix<ExactScalar> V = creg_evaluate(x, {ExactScalar(2)});
    CHECK(V(0, 0) == ExactScalar(4));
    CHECK(V(1, 1) == ExactScalar(4));
    CHECK(V(0, 1).is_zero());
}

TEST_CASE("crossed_sos_project matches P(X*X) exactly") {
    std::mt19937 rng(41);

    auto run = [&](const CrossedProductSpec& spec) {
        size_t n = spec.order();
        const PolyRingPtr& R = spec.ring();
        for (int rep = 0; rep < 8; ++rep) {
            Matrix<StarPoly> X(n, n, StarPoly(R));
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) X(i, j) = rnd_poly(R, rng, 2);
            Matrix<StarPoly> target = crossed_project(spec, X.adjoint() * X);
            auto roots = crossed_sos_project(spec, X);
            REQUIRE(roots.size() == n);
            Matrix<StarPoly> acc(n, n, StarPoly(R));
            for (const auto& r : roots) {
                Matrix<StarPoly> E = crossed_embed(r);
                acc = acc + E.adjoint() * E;
            }
            acc = acc * StarPoly(R, ExactScalar::rational(1, long(n)));
            CHECK(acc == target);
            // faithfulness probe on the corpus
            if (!X.is_zero()) CHECK_FALSE(crossed_project(spec, X.adjoint() * X).is_zero());
        }
    };

    auto R3 = PolyRing::make({"t1", "t2", "t3"});
    run(z3_rotation_spec(R3));
    auto R1 = PolyRing::make({"t"});
    run(z2_sign_spec(R1));

    // S3 permutation action on three variables
    GroupTable s3 = GroupTable::symmetric3();
    std::vector<std::array<size_t, 3>> perms = {
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    std::vector<MonomialMap> maps;
    for (const auto& p : perms) {
        MonomialMap m;
        for (size_t v = 0; v < 3; ++v) m.images.push_back({p[v], ExactScalar::one()});
        maps.push_back(m);
    }
    run(CrossedProductSpec(R3, s3, maps));
}
