#include "starcert/univariate.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace starcert {

QPoly qp_trim(QPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

bool qp_is_zero(const QPoly& p) {
    return std::all_of(p.begin(), p.end(), [](const mpq_class& c) { return c == 0; });
}

int qp_deg(const QPoly& p) {
    for (int k = int(p.size()) - 1; k >= 0; --k)
        if (p[k] != 0) return k;
    return -1;
}

QPoly qp_add(const QPoly& a, const QPoly& b) {
    QPoly out(std::max(a.size(), b.size()), mpq_class(0));
    for (size_t k = 0; k < a.size(); ++k) out[k] += a[k];
    for (size_t k = 0; k < b.size(); ++k) out[k] += b[k];
    return qp_trim(out);
}

QPoly qp_sub(const QPoly& a, const QPoly& b) {
    QPoly out(std::max(a.size(), b.size()), mpq_class(0));
    for (size_t k = 0; k < a.size(); ++k) out[k] += a[k];
    for (size_t k = 0; k < b.size(); ++k) out[k] -= b[k];
    return qp_trim(out);
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (qp_is_zero(a) || qp_is_zero(b)) return {};
    QPoly out(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return qp_trim(out);
}

QPoly qp_scale(const QPoly& a, const mpq_class& c) {
    QPoly out = a;
    for (auto& x : out) x *= c;
    return qp_trim(out);
}

std::pair<QPoly, QPoly> qp_divmod(const QPoly& a, const QPoly& b) {
    int db = qp_deg(b);
    if (db < 0) throw std::domain_error("qp_divmod: zero divisor");
    QPoly r = qp_trim(a), q;
    int dr = qp_deg(r);
    if (dr >= db) q.assign(dr - db + 1, mpq_class(0));
    while ((dr = qp_deg(r)) >= db) {
        mpq_class c = r[dr] / b[db];
        q[dr - db] = c;
        for (int k = 0; k <= db; ++k) r[dr - db + k] -= c * b[k];
    }
    return {qp_trim(q), qp_trim(r)};
}

QPoly qp_derivative(const QPoly& a) {
    if (a.size() <= 1) return {};
    QPoly out(a.size() - 1);
    for (size_t k = 1; k < a.size(); ++k) out[k - 1] = a[k] * mpq_class(long(k));
    return qp_trim(out);
}

QPoly qp_monic(const QPoly& a) {
    int d = qp_deg(a);
    if (d < 0) return {};
    return qp_scale(a, 1 / a[d]);
}

QPoly qp_gcd(QPoly a, QPoly b) {
    a = qp_trim(a);
    b = qp_trim(b);
    while (!qp_is_zero(b)) {
        QPoly r = qp_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return qp_monic(a);
}

mpq_class qp_eval(const QPoly& a, const mpq_class& x) {
    mpq_class acc(0);
    for (int k = int(a.size()) - 1; k >= 0; --k) acc = acc * x + a[k];
    return acc;
}

SquarefreeDecomposition qp_squarefree(const QPoly& p0) {
    SquarefreeDecomposition out;
    QPoly p = qp_trim(p0);
    int d = qp_deg(p);
    if (d < 0) {
        out.lc = 0;
        return out;
    }
    out.lc = p[d];
    p = qp_monic(p);
    if (d == 0) return out;
    // Yun's algorithm.
    QPoly dp = qp_derivative(p);
    QPoly a = qp_gcd(p, dp);
    QPoly b = qp_divmod(p, a).first;
    QPoly c = qp_divmod(dp, a).first;
    QPoly z = qp_sub(c, qp_derivative(b));
    while (qp_deg(b) > 0) {
        QPoly f = qp_gcd(b, z);
        out.factors.push_back(f);
        b = qp_divmod(b, f).first;
        z = qp_sub(qp_divmod(z, f).first, qp_derivative(b));
    }
    return out;
}

std::vector<std::complex<double>> qp_roots(const QPoly& p0) {
    QPoly p = qp_monic(p0);
    int d = qp_deg(p);
    if (d <= 0) return {};
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
    for (int k = 0; k < d; ++k) companion(k, d - 1) = -p[k].get_d();
    for (int k = 1; k < d; ++k) companion(k, k - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
    std::vector<std::complex<double>> roots(d);
    for (int k = 0; k < d; ++k) roots[k] = es.eigenvalues()(k);
    return roots;
}

namespace {

// Continued-fraction rational reconstruction of a double, with denominator cap.
std::optional<mpq_class> rationalize(double x, long max_den) {
    if (!std::isfinite(x)) return std::nullopt;
    double v = x;
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(v);
        if (std::abs(fl) > 9e17) return std::nullopt;
        long a = long(fl);
        long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q1 != 0 && (std::abs(q2) > max_den || q2 < 0)) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double frac = v - fl;
        if (q1 != 0 && std::abs(double(p1) / double(q1) - x) < 1e-12 * std::max(1.0, std::abs(x))) break;
        if (frac < 1e-15) break;
        v = 1.0 / frac;
    }
    if (q1 == 0) return std::nullopt;
    mpq_class q(p1, q1);
    q.canonicalize();
    if (std::abs(q.get_d() - x) > 1e-9 * std::max(1.0, std::abs(x))) return std::nullopt;
    return q;
}

}  // namespace

std::optional<std::pair<QPoly, QPoly>> qp_sum_of_two_squares(const QPoly& p0) {
    QPoly p = qp_trim(p0);
    int d = qp_deg(p);
    if (d <= 0 || d % 2) return std::nullopt;
    auto roots = qp_roots(p);
    // Pair each upper-half-plane root with its conjugate; a root on the real
    // axis disqualifies the input.
    std::vector<std::complex<double>> upper;
    std::vector<bool> used(roots.size(), false);
    for (size_t k = 0; k < roots.size(); ++k) {
        if (used[k] || roots[k].imag() <= 0) continue;
        size_t best = roots.size();
        double bd = 1e18;
        for (size_t j = 0; j < roots.size(); ++j) {
            if (used[j] || j == k || roots[j].imag() > 0) continue;
            double dd = std::abs(roots[j] - std::conj(roots[k]));
            if (dd < bd) {
                bd = dd;
                best = j;
            }
        }
        if (best == roots.size()) return std::nullopt;
        used[k] = used[best] = true;
        upper.push_back(roots[k]);
    }
    if (int(upper.size()) * 2 != d) return std::nullopt;

    int pairs = int(upper.size());
    if (pairs > 12) return std::nullopt;
    mpq_class lc = p[d];
    if (lc <= 0) return std::nullopt;
    mpq_class slc;
    {
        // need lc to be a square in Q to emit exactly two squares
        if (!mpz_perfect_square_p(lc.get_num().get_mpz_t()) ||
            !mpz_perfect_square_p(lc.get_den().get_mpz_t()))
            return std::nullopt;
        mpz_class sn, sd;
        mpz_sqrt(sn.get_mpz_t(), lc.get_num().get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), lc.get_den().get_mpz_t());
        slc = mpq_class(sn, sd);
    }

    // Try each assignment of one root per conjugate pair to the candidate
    // Gaussian factor g = a + ib; rationalize and verify exactly.
    for (long mask = 0; mask < (1L << pairs); ++mask) {
        std::vector<std::complex<double>> g{{1.0, 0.0}};
        for (int k = 0; k < pairs; ++k) {
            std::complex<double> r = (mask >> k) & 1 ? std::conj(upper[k]) : upper[k];
            std::vector<std::complex<double>> ng(g.size() + 1, {0.0, 0.0});
            for (size_t j = 0; j < g.size(); ++j) {
                ng[j + 1] += g[j];
                ng[j] -= g[j] * r;
            }
            g = std::move(ng);
        }
        QPoly a(g.size()), b(g.size());
        bool ok = true;
        for (size_t j = 0; j < g.size(); ++j) {
            auto re = rationalize(g[j].real(), 1000000);
            auto im = rationalize(g[j].imag(), 1000000);
            if (!re || !im) {
                ok = false;
                break;
            }
            a[j] = *re;
            b[j] = *im;
        }
        if (!ok) continue;
        QPoly cand = qp_add(qp_mul(a, a), qp_mul(b, b));
        if (qp_trim(qp_scale(cand, lc)) == p)
            return std::make_pair(qp_scale(a, slc), qp_scale(b, slc));
    }
    return std::nullopt;
}

std::optional<std::array<mpz_class, 4>> four_square_decomposition(const mpz_class& n) {
    if (n < 0) return std::nullopt;
    if (n > 100000000) return std::nullopt;  // search budget
    long N = n.get_si();
    auto isq = [](long v) {
        if (v < 0) return -1L;
        long r = long(std::sqrt(double(v)));
        while (r * r > v) --r;
        while ((r + 1) * (r + 1) <= v) ++r;
        return r;
    };
    // Scan with a >= b >= c >= d; each prefix maximum bounds the remainder,
    // so the early breaks lose no solutions.
    for (long a = isq(N); a >= 0 && 4 * a * a >= N; --a) {
        long ra = N - a * a;
        for (long b = std::min(a, isq(ra)); b >= 0 && 3 * b * b >= ra; --b) {
            long rb = ra - b * b;
            for (long c = std::min(b, isq(rb)); c >= 0 && 2 * c * c >= rb; --c) {
                long rc = rb - c * c;
                long dd = isq(rc);
                if (dd >= 0 && dd * dd == rc) return std::array<mpz_class, 4>{a, b, c, dd};
            }
        }
    }
    return std::nullopt;
}

}  // namespace starcert
