#include "starcert/quasi_unitary.hpp"

#include <algorithm>

namespace starcert {

namespace {

StarPoly zero_of(const PolyRingPtr& r) { return StarPoly(r); }
StarPoly one_of(const PolyRingPtr& r) { return StarPoly(r, ExactScalar::one()); }

// Exact check of T*T = TT* = s I through the hermitian upper triangles.
void check_quasi_unitary(const Matrix<StarPoly>& T, const StarPoly& s) {
    size_t n = T.rows();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i; j < n; ++j) {
            StarPoly g(s.ring()), h(s.ring());
            for (size_t k = 0; k < n; ++k) {
                if (!T(k, i).is_zero() && !T(k, j).is_zero()) g += T(k, i).star() * T(k, j);
                if (!T(i, k).is_zero() && !T(j, k).is_zero()) h += T(i, k) * T(j, k).star();
            }
            const StarPoly& want = i == j ? s : zero_of(s.ring());
            if (g != want || h != want) throw std::logic_error("quasi-unitary invariant failed");
        }
    }
}

bool is_power_of_two(size_t n) { return n && (n & (n - 1)) == 0; }

}  // namespace

QuasiUnitary qu_pair(const StarPoly& a1, const StarPoly& a2) {
    const PolyRingPtr& R = a1.ring();
    Matrix<StarPoly> T(2, 2, zero_of(R));
    T(0, 0) = a1;
    T(0, 1) = -a2.star();
    T(1, 0) = a2;
    T(1, 1) = a1.star();
    QuasiUnitary qu{T, a1.star() * a1 + a2.star() * a2, {a1, a2}};
    check_quasi_unitary(qu.T, qu.s);
    return qu;
}

BuiltQuasiUnitary build_quasi_unitary(const std::vector<StarPoly>& a) {
    if (a.size() < 2 || !is_power_of_two(a.size()))
        throw std::invalid_argument("build_quasi_unitary: need 2^k inputs, k >= 1");
    const PolyRingPtr& R = a[0].ring();
    const StarPoly one = one_of(R);

    if (a.size() == 2) {
        BuiltQuasiUnitary out{qu_pair(a[0], a[1]), one, {one}};
        return out;
    }

    size_t h = a.size() / 2;
    std::vector<StarPoly> upper(a.begin(), a.begin() + h), lower(a.begin() + h, a.end());
    bool lower_zero = std::all_of(lower.begin(), lower.end(), [](const StarPoly& p) { return p.is_zero(); });

    if (lower_zero) {
        // Induction shortcut: diag(U, U) keeps the column condition with the
        // same multiplier and the same s.
        BuiltQuasiUnitary U = build_quasi_unitary(upper);
        size_t m = U.qu.T.rows();
        Matrix<StarPoly> T(2 * m, 2 * m, zero_of(R));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) {
                T(i, j) = U.qu.T(i, j);
                T(m + i, m + j) = U.qu.T(i, j);
            }
        BuiltQuasiUnitary out{{T, U.qu.s, U.qu.s_squares}, U.multiplier, U.multiplier_squares};
        check_quasi_unitary(out.qu.T, out.qu.s);
        return out;
    }

    BuiltQuasiUnitary A = build_quasi_unitary(upper);
    BuiltQuasiUnitary B = build_quasi_unitary(lower);
    const StarPoly& sB = B.qu.s;
    if (sB.is_zero()) throw std::logic_error("build_quasi_unitary: s(B) = 0 with nonzero block");

    StarPoly alpha = B.multiplier * sB;  // s2 s(B)
    StarPoly beta = A.multiplier * sB;   // s1 s(B)

    size_t m = A.qu.T.rows();
    Matrix<StarPoly> T(2 * m, 2 * m, zero_of(R));
    Matrix<StarPoly> lowerRight = B.qu.T * A.qu.T.adjoint() * B.qu.T.adjoint() * B.multiplier;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            T(i, j) = alpha * A.qu.T(i, j);
            T(i, m + j) = -(beta * B.qu.T(j, i).star());
            T(m + i, j) = beta * B.qu.T(i, j);
            T(m + i, m + j) = lowerRight(i, j);
        }

    StarPoly s = alpha * alpha * A.qu.s + beta * beta * B.qu.s;
    std::vector<StarPoly> s_squares;
    for (const auto& q : A.qu.s_squares) s_squares.push_back(alpha * q);
    for (const auto& q : B.qu.s_squares) s_squares.push_back(beta * q);

    StarPoly multiplier = A.multiplier * B.multiplier * sB;
    std::vector<StarPoly> multiplier_squares;
    for (const auto& qa : A.multiplier_squares)
        for (const auto& qb : B.multiplier_squares)
            for (const auto& qs : B.qu.s_squares) multiplier_squares.push_back(qa * qb * qs);

    BuiltQuasiUnitary out{{T, s, s_squares}, multiplier, multiplier_squares};
    check_quasi_unitary(out.qu.T, out.qu.s);
    // column condition t_{i1} = multiplier * a_i
    for (size_t i = 0; i < a.size(); ++i)
        if (out.qu.T(i, 0) != out.multiplier * a[i]) throw std::logic_error("column condition failed");
    return out;
}

namespace {

struct Annotation {
    std::vector<std::vector<StarPoly>> rows;  // A = sum row* row
};

// Pivot decomposition from an annotation: a = sum_t m_t* m_t with m_t the
// first entries.
std::vector<StarPoly> pivot_squares(const Annotation& ann) {
    std::vector<StarPoly> out;
    for (const auto& r : ann.rows)
        if (!r[0].is_zero()) out.push_back(r[0]);
    return out;
}

// Schur-complement annotation: D = aC - b*b = sum_{t<u} w_tu^* w_tu with
// w_tu = m_u row_t[1..] - m_t row_u[1..]  (a Lagrange-type identity).
Annotation schur_annotation(const Annotation& ann, size_t n) {
    Annotation out;
    size_t T = ann.rows.size();
    for (size_t t = 0; t < T; ++t) {
        for (size_t u = t + 1; u < T; ++u) {
            const StarPoly &mt = ann.rows[t][0], &mu = ann.rows[u][0];
            if (mt.is_zero() && mu.is_zero()) continue;
            std::vector<StarPoly> w;
            w.reserve(n - 1);
            bool nonzero = false;
            for (size_t j = 1; j < n; ++j) {
                StarPoly e = mu * ann.rows[t][j] - mt * ann.rows[u][j];
                nonzero |= !e.is_zero();
                w.push_back(std::move(e));
            }
            if (nonzero) out.rows.push_back(std::move(w));
        }
    }
    return out;
}

MatrixArtinCertificate certify_rec(const Matrix<StarPoly>& A, const ScalarCertifier& certifier,
                                   const Annotation* ann) {
    const size_t n = A.rows();
    const PolyRingPtr& R = A(0, 0).ring();
    const StarPoly zero = StarPoly(R);
    const StarPoly one = StarPoly(R, ExactScalar::one());
    const StarPoly a = A(0, 0);

    auto scalar_cert = [&](const StarPoly& p, const Annotation* pann) -> ScalarSosCertificate {
        if (auto c = certifier(p)) return *c;
        if (pann) {
            ScalarSosCertificate c{one, pivot_squares(*pann)};
            if (verify_scalar_certificate(p, c)) return c;
        }
        throw ScalarCertificateUnavailable("no certificate for pivot " + p.str());
    };

    if (n == 1) {
        if (a.is_zero()) return {one, {}};
        ScalarSosCertificate c = scalar_cert(a, ann);
        if (!c.c.is_self_adjoint()) throw ScalarCertificateUnavailable("certifier returned non-self-adjoint c");
        MatrixArtinCertificate cert{c.c, {}};
        for (const auto& q : c.squares) cert.rows.push_back({q});
        return cert;
    }

    if (a.is_zero()) {
        for (size_t j = 1; j < n; ++j)
            if (!A(0, j).is_zero()) throw ZeroBlockInconsistent();
        Annotation sub;
        const Annotation* subp = nullptr;
        if (ann) {
            for (const auto& r : ann->rows) {
                if (!r[0].is_zero()) throw ZeroBlockInconsistent();
                sub.rows.emplace_back(r.begin() + 1, r.end());
            }
            subp = &sub;
        }
        MatrixArtinCertificate inner = certify_rec(A.submatrix(1, 1, n - 1, n - 1), certifier, subp);
        MatrixArtinCertificate cert{inner.denominator, {}};
        for (const auto& y : inner.rows) {
            std::vector<StarPoly> x{zero};
            x.insert(x.end(), y.begin(), y.end());
            cert.rows.push_back(std::move(x));
        }
        return cert;
    }

    ScalarSosCertificate ca = scalar_cert(a, ann);  // c1* c1 a = sum q* q
    const StarPoly& c1 = ca.c;
    if (!c1.is_self_adjoint()) throw ScalarCertificateUnavailable("certifier returned non-self-adjoint c");

    // Schur complement D = a C - b* b.
    Matrix<StarPoly> D(n - 1, n - 1, zero);
    for (size_t i = 1; i < n; ++i)
        for (size_t j = 1; j < n; ++j) D(i - 1, j - 1) = a * A(i, j) - A(0, i).star() * A(0, j);

    Annotation dann;
    const Annotation* dannp = nullptr;
    if (ann) {
        dann = schur_annotation(*ann, n);
        dannp = &dann;
    }
    MatrixArtinCertificate dc = certify_rec(D, certifier, dannp);
    const StarPoly& d2 = dc.denominator;  // d2^2 D = sum w* w

    StarPoly c = c1 * d2;

    // c*c a = sum (d2 q)^* (d2 q)
    std::vector<StarPoly> scalars;
    for (const auto& q : ca.squares) scalars.push_back(d2 * q);
    // c*c a C = (c b)^*(c b) + sum (c1 w)^*(c1 w)
    std::vector<std::vector<StarPoly>> arows;
    {
        std::vector<StarPoly> cb;
        for (size_t j = 1; j < n; ++j) cb.push_back(c * A(0, j));
        arows.push_back(std::move(cb));
        for (const auto& w : dc.rows) {
            std::vector<StarPoly> cw;
            for (const auto& e : w) cw.push_back(c1 * e);
            arows.push_back(std::move(cw));
        }
    }

    // Pad both lists with zeros to a common power of two >= 2.
    size_t need = std::max(scalars.size(), arows.size());
    size_t m2 = 2;
    while (m2 < need) m2 *= 2;
    scalars.resize(m2, zero);
    arows.resize(m2, std::vector<StarPoly>(n - 1, zero));

    BuiltQuasiUnitary b = build_quasi_unitary(scalars);
    const StarPoly& r = b.multiplier;
    const Matrix<StarPoly>& T = b.qu.T;
    const StarPoly& sT = b.qu.s;

    // s(T) = r^2 c*c a, always; fail loudly if the construction drifts.
    if (sT != r * r * c.star() * c * a) throw std::logic_error("s(T) identity failed");

    MatrixArtinCertificate cert{sT, {}};
    // First slot carries r^2 c a a_j = (rca) t_{j1}; with it the four block
    // identities expand to s(T)^2 A exactly.
    StarPoly rca = r * r * c * a;
    for (size_t j = 0; j < m2; ++j) {
        std::vector<StarPoly> x;
        x.reserve(n);
        x.push_back(rca * scalars[j]);
        for (size_t col = 0; col < n - 1; ++col) {
            StarPoly y(R);
            for (size_t k = 0; k < m2; ++k) {
                if (T(j, k).is_zero() || arows[k][col].is_zero()) continue;
                y += T(j, k) * arows[k][col];
            }
            x.push_back(r * y);
        }
        cert.rows.push_back(std::move(x));
    }
    return cert;
}

}  // namespace

MatrixArtinCertificate certify_psd_matrix(const Matrix<StarPoly>& A, const ScalarCertifier& certifier,
                                          const std::vector<std::vector<StarPoly>>* known_roots) {
    if (!A.is_square() || A.rows() == 0) throw std::invalid_argument("certify_psd_matrix: empty or non-square");
    if (!A.is_hermitian()) throw NotHermitianError();
    Annotation ann;
    const Annotation* annp = nullptr;
    if (known_roots) {
        ann.rows = *known_roots;
        if (rows_gram(ann.rows, A.rows(), A.zero_like()) != A)
            throw std::invalid_argument("certify_psd_matrix: known_roots do not expand to A");
        annp = &ann;
    }
    MatrixArtinCertificate cert = certify_rec(A, certifier, annp);
    if (!verify_artin(cert, A)) throw std::logic_error("certify_psd_matrix: postcondition failed");
    return cert;
}

bool verify_artin(const MatrixArtinCertificate& cert, const Matrix<StarPoly>& A) {
    if (!A.is_square()) return false;
    const StarPoly& d = cert.denominator;
    if (!d.is_self_adjoint()) return false;
    for (const auto& r : cert.rows)
        if (r.size() != A.rows()) return false;
    Matrix<StarPoly> expanded = rows_gram(cert.rows, A.rows(), A.zero_like());
    Matrix<StarPoly> target = A * (d * d);
    return expanded == target;
}

}  // namespace starcert
