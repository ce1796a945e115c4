#include "starcert/ore.hpp"

#include <map>
#include <string>

namespace starcert {

namespace {

using Key = WeylElement::Key;

std::vector<Key> degree_basis(int d) {
    std::vector<Key> out;
    for (int t = 0; t <= d; ++t)
        for (int p = 0; p <= t; ++p) out.push_back({uint32_t(p), uint32_t(t - p)});
    return out;
}

// Dense exact kernel vector of the homogeneous system rows * v = 0 with at
// least one nonzero entry, or empty if only the trivial solution exists.
std::vector<ExactScalar> kernel_vector(std::vector<std::vector<ExactScalar>> m, size_t ncols) {
    std::vector<long> pivot_of_col(ncols, -1);
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < m.size(); ++col) {
        size_t sel = row;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        ExactScalar inv = m[row][col].inverse();
        for (size_t j = col; j < ncols; ++j) m[row][j] *= inv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            ExactScalar factor = m[r][col];
            for (size_t j = col; j < ncols; ++j) m[r][j] -= factor * m[row][j];
        }
        pivot_of_col[col] = long(row);
        ++row;
    }
    long free_col = -1;
    for (size_t col = 0; col < ncols; ++col)
        if (pivot_of_col[col] < 0) {
            free_col = long(col);
            break;
        }
    if (free_col < 0) return {};
    std::vector<ExactScalar> v(ncols, ExactScalar::zero());
    v[free_col] = ExactScalar::one();
    for (size_t col = 0; col < ncols; ++col) {
        long pr = pivot_of_col[col];
        if (pr >= 0) v[col] = -m[size_t(pr)][size_t(free_col)];
    }
    return v;
}

}  // namespace

OreSolution<WeylElement> weyl_ore(const std::vector<WeylElement>& c, const WeylElement& x, int degree_cap) {
    if (x.is_zero()) throw ZeroPivotError();
    int dx = int(x.total_degree());

    for (int d = 0; d <= degree_cap; ++d) {
        std::vector<Key> ubasis = degree_basis(d);
        std::vector<std::vector<Key>> gbasis(c.size());
        size_t ncols = ubasis.size();
        std::vector<size_t> goffset(c.size());
        for (size_t i = 0; i < c.size(); ++i) {
            goffset[i] = ncols;
            if (!c[i].is_zero()) {
                int dg = d + int(c[i].total_degree()) - dx;
                if (dg >= 0) gbasis[i] = degree_basis(dg);
            }
            ncols += gbasis[i].size();
        }

        // Equations: coefficients of u*c_i - g_i*x over all result monomials.
        std::map<std::pair<size_t, Key>, size_t> eq_index;
        std::vector<std::vector<ExactScalar>> rows;
        auto eq_row = [&](size_t i, const Key& mono) -> std::vector<ExactScalar>& {
            auto it = eq_index.find({i, mono});
            if (it == eq_index.end()) {
                it = eq_index.emplace(std::make_pair(i, mono), rows.size()).first;
                rows.emplace_back(ncols, ExactScalar::zero());
            }
            return rows[it->second];
        };
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i].is_zero()) continue;
            for (size_t uk = 0; uk < ubasis.size(); ++uk) {
                WeylElement prod = WeylElement::monomial(ubasis[uk].first, ubasis[uk].second) * c[i];
                for (const auto& [mono, coeff] : prod.terms()) eq_row(i, mono)[uk] += coeff;
            }
            for (size_t gk = 0; gk < gbasis[i].size(); ++gk) {
                WeylElement prod = WeylElement::monomial(gbasis[i][gk].first, gbasis[i][gk].second) * x;
                for (const auto& [mono, coeff] : prod.terms()) eq_row(i, mono)[goffset[i] + gk] -= coeff;
            }
        }

        std::vector<ExactScalar> v = kernel_vector(std::move(rows), ncols);
        if (v.empty()) continue;

        OreSolution<WeylElement> sol;
        sol.u = WeylElement::zero();
        for (size_t uk = 0; uk < ubasis.size(); ++uk)
            if (!v[uk].is_zero()) sol.u += WeylElement::monomial(ubasis[uk].first, ubasis[uk].second, v[uk]);
        sol.g.assign(c.size(), WeylElement::zero());
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t gk = 0; gk < gbasis[i].size(); ++gk)
                if (!v[goffset[i] + gk].is_zero())
                    sol.g[i] += WeylElement::monomial(gbasis[i][gk].first, gbasis[i][gk].second, v[goffset[i] + gk]);
        if (sol.u.is_zero()) continue;  // cannot happen in a domain; stay safe
        detail::check_ore(sol, c, x);
        return sol;
    }
    throw DegreeCapExceeded("weyl_ore: no solution within degree cap " + std::to_string(degree_cap));
}

OreOracle<WeylElement> make_weyl_ore_oracle(int degree_cap) {
    return [degree_cap](const std::vector<WeylElement>& c, const WeylElement& x) {
        return weyl_ore(c, x, degree_cap);
    };
}

bool weyl_identities(int bound) {
    WeylElement N = WeylElement::number_op();
    WeylElement one = WeylElement::one();
    for (int k = 1; k <= bound; ++k) {
        WeylElement falling = one;
        for (int j = 0; j < k; ++j) falling = falling * (N - WeylElement::constant(ExactScalar(j)));
        if (!(WeylElement::c_factor(k) == falling)) return false;
    }
    for (int n = 1; n <= bound; ++n) {
        WeylElement xn = (N - WeylElement::constant(ExactScalar(n))) *
                         (N - WeylElement::constant(ExactScalar(n + 1)));
        WeylElement lhs = WeylElement::c_factor(n) * xn;
        if (!(lhs == WeylElement::c_factor(n + 2))) return false;
        if (!(lhs == xn * WeylElement::c_factor(n))) return false;
    }
    return true;
}

}  // namespace starcert
