#include "starcert/scalar_certifier.hpp"

#include <algorithm>

#include "starcert/univariate.hpp"

namespace starcert {

bool verify_scalar_certificate(const StarPoly& p, const ScalarSosCertificate& cert) {
    StarPoly lhs = cert.c.star() * cert.c * p;
    StarPoly rhs(p.ring());
    for (const auto& q : cert.squares) rhs += q.star() * q;
    return lhs == rhs;
}

ScalarCertifier make_pass_through_certifier(std::vector<std::pair<StarPoly, ScalarSosCertificate>> table) {
    auto shared = std::make_shared<std::vector<std::pair<StarPoly, ScalarSosCertificate>>>(std::move(table));
    return [shared](const StarPoly& p) -> std::optional<ScalarSosCertificate> {
        for (const auto& [key, cert] : *shared)
            if (key == p) return cert;
        return std::nullopt;
    };
}

namespace {

// p restricted to a single variable with real coefficients, or nullopt.
std::optional<std::pair<QPoly, size_t>> to_qpoly(const StarPoly& p) {
    size_t var = 0;
    bool found = false;
    for (const auto& [e, c] : p.terms()) {
        if (!c.is_real()) return std::nullopt;
        for (size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (found && v != var) return std::nullopt;
            var = v;
            found = true;
        }
    }
    QPoly q;
    for (const auto& [e, c] : p.terms()) {
        uint32_t d = found ? e[var] : 0;
        if (q.size() <= d) q.resize(d + 1, mpq_class(0));
        q[d] = c.re();
    }
    return std::make_pair(qp_trim(q), var);
}

StarPoly from_qpoly(const PolyRingPtr& ring, const QPoly& q, size_t var) {
    TermMap t;
    for (size_t d = 0; d < q.size(); ++d) {
        if (q[d] == 0) continue;
        Exponents e(ring->nvars(), 0);
        e[var] = static_cast<uint32_t>(d);
        t.emplace(std::move(e), ExactScalar(q[d]));
    }
    return StarPoly(ring, std::move(t));
}

// rationals r_i with lc = sum r_i^2 (lc >= 0), or nullopt.
std::optional<std::vector<mpq_class>> rational_square_split(const mpq_class& lc) {
    if (lc < 0) return std::nullopt;
    if (lc == 0) return std::vector<mpq_class>{};
    mpz_class scaled = lc.get_num() * lc.get_den();
    auto sq = four_square_decomposition(scaled);
    if (!sq) return std::nullopt;
    std::vector<mpq_class> out;
    for (const auto& a : *sq) {
        if (a == 0) continue;
        mpq_class r(a, lc.get_den());
        r.canonicalize();
        out.push_back(r);
    }
    return out;
}

void normalize_squares(std::vector<StarPoly>& squares) {
    for (auto& q : squares) {
        if (!q.is_zero() && q.terms().rbegin()->second.prints_negative()) q = -q;
    }
    std::sort(squares.begin(), squares.end(), [](const StarPoly& a, const StarPoly& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        return a.str() < b.str();
    });
}

}  // namespace

std::optional<ScalarSosCertificate> certify_nonneg_univariate(const StarPoly& p) {
    const PolyRingPtr& R = p.ring();
    StarPoly one(R, ExactScalar::one());
    if (p.is_zero()) return ScalarSosCertificate{one, {}};

    auto qv = to_qpoly(p);
    if (!qv) return std::nullopt;
    const auto& [qp, var] = *qv;
    int d = qp_deg(qp);

    if (d == 0) {
        auto split = rational_square_split(qp[0]);
        if (!split) return std::nullopt;
        ScalarSosCertificate cert{one, {}};
        for (const auto& r : *split) cert.squares.push_back(StarPoly(R, ExactScalar(r)));
        return cert;
    }

    SquarefreeDecomposition sf = qp_squarefree(qp);
    QPoly even{mpq_class(1)};
    QPoly odd{mpq_class(1)};
    for (size_t k = 0; k < sf.factors.size(); ++k) {
        size_t mult = k + 1;
        for (size_t j = 0; j < mult / 2; ++j) even = qp_mul(even, sf.factors[k]);
        if (mult % 2) odd = qp_mul(odd, sf.factors[k]);
    }

    auto lc_split = rational_square_split(sf.lc);
    if (!lc_split) return std::nullopt;

    std::vector<StarPoly> squares;
    if (qp_deg(odd) == 0) {
        // p = lc * even^2
        StarPoly e = from_qpoly(R, even, var);
        for (const auto& r : *lc_split) squares.push_back(ExactScalar(r) * e);
    } else {
        auto two = qp_sum_of_two_squares(odd);
        if (!two) return std::nullopt;
        StarPoly A = from_qpoly(R, qp_mul(two->first, even), var);
        StarPoly B = from_qpoly(R, qp_mul(two->second, even), var);
        for (const auto& r : *lc_split) {
            squares.push_back(ExactScalar(r) * A);
            squares.push_back(ExactScalar(r) * B);
        }
    }
    normalize_squares(squares);
    ScalarSosCertificate cert{one, std::move(squares)};
    if (!verify_scalar_certificate(p, cert)) return std::nullopt;
    return cert;
}

ScalarCertifier make_univariate_certifier() {
    return [](const StarPoly& p) { return certify_nonneg_univariate(p); };
}

ScalarCertifier chain_certifiers(ScalarCertifier first, ScalarCertifier second) {
    return [f = std::move(first), s = std::move(second)](const StarPoly& p) {
        if (auto r = f(p)) return r;
        return s(p);
    };
}

}  // namespace starcert
