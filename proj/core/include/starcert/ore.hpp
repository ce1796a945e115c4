#ifndef STARCERT_ORE_HPP
#define STARCERT_ORE_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "starcert/matrix.hpp"
#include "starcert/weyl.hpp"

namespace starcert {

struct OreOracleFailure : std::runtime_error {
    explicit OreOracleFailure(const std::string& w) : std::runtime_error(w) {}
};
struct DegreeCapExceeded : OreOracleFailure {
    explicit DegreeCapExceeded(const std::string& w) : OreOracleFailure(w) {}
};
struct ZeroPivotError : std::runtime_error {
    ZeroPivotError() : std::runtime_error("zero pivot") {}
};
struct NotPositiveError : std::runtime_error {
    NotPositiveError() : std::runtime_error("zero pivot with nonzero row: matrix not PSD") {}
};
struct PreconditionViolated : std::runtime_error {
    explicit PreconditionViolated(const std::string& w) : std::runtime_error(w) {}
};

/// Common-left-denominator data: u * c_i = g_i * x for all i, u != 0.
template <typename R>
struct OreSolution {
    R u;
    std::vector<R> g;
};

/// Oracle solving the left-fraction problem for a list of numerators c_i and
/// one denominator x. Outputs are treated as untrusted and re-verified.
template <typename R>
using OreOracle = std::function<OreSolution<R>(const std::vector<R>&, const R&)>;

/// Commutative specialization: u = x, g_i = c_i.
template <typename R>
OreOracle<R> make_commutative_ore() {
    return [](const std::vector<R>& c, const R& x) -> OreSolution<R> {
        if (x.is_zero()) throw ZeroPivotError();
        return {x, c};
    };
}

/// Weyl-algebra oracle: for each total-degree bound d <= degree_cap solves the
/// exact linear system for the coefficients of u and the g_i, returning the
/// first nontrivial solution (lowest degree, reduced-echelon tie-break).
OreSolution<WeylElement> weyl_ore(const std::vector<WeylElement>& c, const WeylElement& x, int degree_cap = 8);
OreOracle<WeylElement> make_weyl_ore_oracle(int degree_cap = 8);

/// c_k = N(N-1)...(N-k+1) and c_n x_n = c_{n+2} for all k, n up to the bound.
bool weyl_identities(int bound);

namespace detail {

template <typename R>
Matrix<R> scale_left(const R& s, const Matrix<R>& m) {
    Matrix<R> out = m;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out(i, j) = s * m(i, j);
    return out;
}

template <typename R>
Matrix<R> scale_right(const Matrix<R>& m, const R& s) {
    Matrix<R> out = m;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j) * s;
    return out;
}

template <typename R>
void check_ore(const OreSolution<R>& sol, const std::vector<R>& c, const R& x) {
    if (sol.u.is_zero()) throw OreOracleFailure("oracle returned u = 0");
    if (sol.g.size() != c.size()) throw OreOracleFailure("oracle returned wrong arity");
    for (size_t i = 0; i < c.size(); ++i)
        if (!(sol.u * c[i] == sol.g[i] * x)) throw OreOracleFailure("oracle identity u c = g x failed");
}

// T in L_n with T * W diagonal and nonzero, for lower-triangular W with
// nonzero diagonal.
template <typename R>
Matrix<R> clear_lower_triangle(const Matrix<R>& W, const OreOracle<R>& oracle, const R& one) {
    size_t n = W.rows();
    const R zero = W.zero_like();
    if (n == 1) return Matrix<R>::identity(1, one, zero);
    Matrix<R> Wsub = W.submatrix(1, 1, n - 1, n - 1);
    Matrix<R> Tsub = clear_lower_triangle(Wsub, oracle, one);
    const R& w0 = W(0, 0);
    if (w0.is_zero()) throw ZeroPivotError();
    // rows of Tsub * (column below w0)
    std::vector<R> tz(n - 1, zero);
    for (size_t i = 0; i < n - 1; ++i)
        for (size_t k = 0; k < n - 1; ++k) tz[i] = tz[i] + Tsub(i, k) * W(1 + k, 0);
    Matrix<R> T(n, n, zero);
    T(0, 0) = one;
    for (size_t i = 0; i < n - 1; ++i) {
        if (tz[i].is_zero()) {
            for (size_t k = 0; k < n - 1; ++k) T(1 + i, 1 + k) = Tsub(i, k);
            continue;
        }
        OreSolution<R> sol = oracle({tz[i]}, w0);
        check_ore(sol, {tz[i]}, w0);
        // s_i (Tsub z)_i = t_i w0: row becomes s_i * Tsub_row - t_i * e_0
        T(1 + i, 0) = zero - sol.g[0];
        for (size_t k = 0; k < n - 1; ++k) T(1 + i, 1 + k) = sol.u * Tsub(i, k);
    }
    return T;
}

}  // namespace detail

template <typename R>
struct NcDiagonalization {
    Matrix<R> Xplus;
    Matrix<R> Xminus;
    std::vector<R> d0;      // diagonal of X+ A X+^*, entries z_i a_i z_i^*
    std::vector<R> pivots;  // the a_i
    std::vector<R> scaling; // diagonal of X- X+
};

/// Hermitian-matrix diagonalization over a left Ore domain. Follows the
/// Schur-complement induction: a zero pivot forces a zero row (else
/// NotPositiveError). Every identity is re-checked exactly before returning.
template <typename R>
NcDiagonalization<R> diagonalize_nc(const Matrix<R>& A, const OreOracle<R>& oracle, const std::vector<R>& z,
                                    const R& one) {
    size_t n = A.rows();
    if (!A.is_square() || n == 0) throw std::invalid_argument("diagonalize_nc: bad shape");
    if (!(A == A.adjoint())) throw std::invalid_argument("diagonalize_nc: not hermitian");
    if (z.size() != n) throw std::invalid_argument("diagonalize_nc: need one pivot element per row");
    for (const auto& zi : z)
        if (zi.is_zero()) throw ZeroPivotError();
    const R zero = A.zero_like();

    NcDiagonalization<R> out;
    if (n == 1) {
        out.Xplus = Matrix<R>(1, 1, z[0]);
        out.Xminus = Matrix<R>::identity(1, one, zero);
        out.d0 = {z[0] * A(0, 0) * z[0].star()};
        out.pivots = {A(0, 0)};
        out.scaling = {z[0]};
        return out;
    }

    const R a = A(0, 0);
    std::vector<R> ztail(z.begin() + 1, z.end());

    bool row_zero = true;
    for (size_t j = 1; j < n && row_zero; ++j) row_zero = A(0, j).is_zero();

    if (a.is_zero() && !row_zero) throw NotPositiveError();

    if (row_zero) {
        // Nothing to eliminate: extend the submatrix solution by the corner.
        NcDiagonalization<R> sub = diagonalize_nc(A.submatrix(1, 1, n - 1, n - 1), oracle, ztail, one);
        out.Xplus = Matrix<R>(n, n, zero);
        out.Xminus = Matrix<R>(n, n, zero);
        out.Xplus(0, 0) = a.is_zero() ? one : z[0];
        out.Xminus(0, 0) = one;
        for (size_t i = 0; i < n - 1; ++i)
            for (size_t j = 0; j < n - 1; ++j) {
                out.Xplus(1 + i, 1 + j) = sub.Xplus(i, j);
                out.Xminus(1 + i, 1 + j) = sub.Xminus(i, j);
            }
        out.d0 = {a.is_zero() ? zero : z[0] * a * z[0].star()};
        out.d0.insert(out.d0.end(), sub.d0.begin(), sub.d0.end());
        out.pivots = {a};
        out.pivots.insert(out.pivots.end(), sub.pivots.begin(), sub.pivots.end());
        out.scaling = {out.Xplus(0, 0)};
        out.scaling.insert(out.scaling.end(), sub.scaling.begin(), sub.scaling.end());
        return out;
    }

    // s b_i^* = f_i a
    std::vector<R> bstar;
    for (size_t j = 1; j < n; ++j) bstar.push_back(A(0, j).star());
    OreSolution<R> ore1 = oracle(bstar, a);
    detail::check_ore(ore1, bstar, a);
    const R& s = ore1.u;
    const std::vector<R>& f = ore1.g;

    // D = s C s^* - f a f^*
    Matrix<R> D(n - 1, n - 1, zero);
    for (size_t i = 0; i < n - 1; ++i)
        for (size_t j = 0; j < n - 1; ++j)
            D(i, j) = s * A(1 + i, 1 + j) * s.star() - f[i] * a * f[j].star();

    NcDiagonalization<R> sub = diagonalize_nc(D, oracle, ztail, one);
    const Matrix<R>& Yp = sub.Xplus;

    // X+ = [[z1, 0], [-Y+ f, Y+ s]]
    out.Xplus = Matrix<R>(n, n, zero);
    out.Xplus(0, 0) = z[0];
    for (size_t i = 0; i < n - 1; ++i) {
        R yf = zero;
        for (size_t k = 0; k < n - 1; ++k) yf = yf + Yp(i, k) * f[k];
        out.Xplus(1 + i, 0) = zero - yf;
        for (size_t j = 0; j < n - 1; ++j) out.Xplus(1 + i, 1 + j) = Yp(i, j) * s;
    }

    // u (Y+ f)_i = g_i z1
    std::vector<R> yf(n - 1, zero);
    for (size_t i = 0; i < n - 1; ++i)
        for (size_t k = 0; k < n - 1; ++k) yf[i] = yf[i] + Yp(i, k) * f[k];
    OreSolution<R> ore2 = oracle(yf, z[0]);
    detail::check_ore(ore2, yf, z[0]);
    const R& u = ore2.u;
    const std::vector<R>& g = ore2.g;

    // W = u Y+ s, T W diagonal
    Matrix<R> W = detail::scale_right(detail::scale_left(u, Yp), s);
    Matrix<R> T = detail::clear_lower_triangle(W, oracle, one);

    // X- = [[1,0],[0,T]] [[1,0],[g, u I]]
    out.Xminus = Matrix<R>(n, n, zero);
    out.Xminus(0, 0) = one;
    for (size_t i = 0; i < n - 1; ++i) {
        R tg = zero;
        for (size_t k = 0; k < n - 1; ++k) tg = tg + T(i, k) * g[k];
        out.Xminus(1 + i, 0) = tg;
        for (size_t j = 0; j < n - 1; ++j) out.Xminus(1 + i, 1 + j) = T(i, j) * u;
    }

    out.d0 = {z[0] * a * z[0].star()};
    out.d0.insert(out.d0.end(), sub.d0.begin(), sub.d0.end());
    out.pivots = {a};
    out.pivots.insert(out.pivots.end(), sub.pivots.begin(), sub.pivots.end());

    // Postconditions, all exact.
    Matrix<R> D0 = out.Xplus * A * out.Xplus.adjoint();
    if (!D0.is_diagonal()) throw std::logic_error("diagonalize_nc: X+ A X+* not diagonal");
    for (size_t i = 0; i < n; ++i)
        if (!(D0(i, i) == out.d0[i])) throw std::logic_error("diagonalize_nc: pivot form mismatch");
    Matrix<R> S = out.Xminus * out.Xplus;
    if (!S.is_diagonal()) throw std::logic_error("diagonalize_nc: X- X+ not diagonal");
    out.scaling.clear();
    for (size_t i = 0; i < n; ++i) {
        if (S(i, i).is_zero()) throw std::logic_error("diagonalize_nc: X- X+ has zero diagonal");
        out.scaling.push_back(S(i, i));
    }
    return out;
}

/// z a z^* = sum q^* q.
template <typename R>
struct PivotCertificate {
    R z;
    std::vector<R> squares;
};
template <typename R>
using PivotCertifier = std::function<std::optional<PivotCertificate<R>>(const R&)>;

template <typename R>
struct PosncCertificate {
    NcDiagonalization<R> diag;
    std::vector<R> scaling;               // diagonal of D = X- X+
    std::vector<std::vector<R>> rows;     // D A D^* = sum row^* row
};

struct PivotCertificateUnavailable : std::runtime_error {
    PivotCertificateUnavailable() : std::runtime_error("no certificate for a diagonal pivot") {}
};

/// Chooses pivots z_i through the certifier so that D0 is a sum of diagonal
/// squares, then assembles D A D^* = X- D0 X-^* as one explicit Gram sum.
template <typename R>
PosncCertificate<R> posnc_certificate(const Matrix<R>& A, const OreOracle<R>& oracle,
                                      const PivotCertifier<R>& certifier, const R& one) {
    size_t n = A.rows();
    const R zero = A.zero_like();
    // Dry run with unit pivots to learn the a_i (they do not depend on z).
    std::vector<R> ones(n, one);
    NcDiagonalization<R> probe = diagonalize_nc(A, oracle, ones, one);

    std::vector<R> z;
    std::vector<std::vector<R>> pivot_squares;
    for (const auto& a : probe.pivots) {
        if (a.is_zero()) {
            z.push_back(one);
            pivot_squares.push_back({});
            continue;
        }
        auto cert = certifier(a);
        if (!cert) throw PivotCertificateUnavailable();
        R expanded = zero;
        for (const auto& q : cert->squares) expanded = expanded + q.star() * q;
        if (!(cert->z * a * cert->z.star() == expanded))
            throw OreOracleFailure("pivot certificate failed verification");
        z.push_back(cert->z);
        pivot_squares.push_back(cert->squares);
    }

    PosncCertificate<R> out;
    out.diag = diagonalize_nc(A, oracle, z, one);
    out.scaling = out.diag.scaling;
    for (size_t i = 0; i < n; ++i) {
        for (const auto& q : pivot_squares[i]) {
            std::vector<R> row;
            row.reserve(n);
            for (size_t k = 0; k < n; ++k) row.push_back(q * out.diag.Xminus(k, i).star());
            out.rows.push_back(std::move(row));
        }
    }
    // Exact check: D A D^* = sum row^* row.
    Matrix<R> Dm(n, n, zero);
    for (size_t i = 0; i < n; ++i) Dm(i, i) = out.scaling[i];
    if (!(Dm * A * Dm.adjoint() == rows_gram(out.rows, n, zero)))
        throw std::logic_error("posnc_certificate: expansion failed");
    return out;
}

/// Verifies the two displayed block identities of the diagonalization lemmas
/// for explicitly supplied data; throws PreconditionViolated when the Ore
/// identities do not hold for the inputs.
template <typename R>
bool block_identities_check(const R& a, const std::vector<R>& b, const Matrix<R>& C, const R& s,
                            const std::vector<R>& f, const R& x, const Matrix<R>& Y, const R& u,
                            const std::vector<R>& g, const R& one) {
    size_t n = b.size();
    const R zero = C.zero_like();
    for (size_t i = 0; i < n; ++i) {
        if (!(s * b[i].star() == f[i] * a)) throw PreconditionViolated("s b* = f a fails");
        if (!(a * f[i].star() == b[i] * s.star())) throw PreconditionViolated("a f* = b s* fails");
    }
    std::vector<R> yf(n, zero);
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) yf[i] = yf[i] + Y(i, k) * f[k];
    for (size_t i = 0; i < n; ++i)
        if (!(u * yf[i] == g[i] * x)) throw PreconditionViolated("u Y f = g x fails");

    Matrix<R> A(n + 1, n + 1, zero);
    A(0, 0) = a;
    for (size_t j = 0; j < n; ++j) {
        A(0, 1 + j) = b[j];
        A(1 + j, 0) = b[j].star();
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) A(1 + i, 1 + j) = C(i, j);

    Matrix<R> D(n, n, zero);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) D(i, j) = s * C(i, j) * s.star() - f[i] * a * f[j].star();

    // First lemma: [[x,0],[-Yf, Ys]] A (same)^* = diag(x a x^*, Y D Y^*).
    Matrix<R> L1(n + 1, n + 1, zero);
    L1(0, 0) = x;
    for (size_t i = 0; i < n; ++i) {
        L1(1 + i, 0) = zero - yf[i];
        for (size_t j = 0; j < n; ++j) L1(1 + i, 1 + j) = Y(i, j) * s;
    }
    Matrix<R> lhs1 = L1 * A * L1.adjoint();
    Matrix<R> rhs1(n + 1, n + 1, zero);
    rhs1(0, 0) = x * a * x.star();
    Matrix<R> YDY = Y * D * Y.adjoint();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) rhs1(1 + i, 1 + j) = YDY(i, j);
    if (!(lhs1 == rhs1)) return false;

    // Second lemma: diag(x, uYs) A (same)^* = [[1,0],[g,uI]] rhs1 (same)^*.
    Matrix<R> L2(n + 1, n + 1, zero);
    L2(0, 0) = x;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) L2(1 + i, 1 + j) = u * Y(i, j) * s;
    Matrix<R> G(n + 1, n + 1, zero);
    G(0, 0) = one;
    for (size_t i = 0; i < n; ++i) {
        G(1 + i, 0) = g[i];
        G(1 + i, 1 + i) = u;
    }
    return L2 * A * L2.adjoint() == G * rhs1 * G.adjoint();
}

}  // namespace starcert

#endif
