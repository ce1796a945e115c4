#ifndef STARCERT_UNIVARIATE_HPP
#define STARCERT_UNIVARIATE_HPP

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <vector>

namespace starcert {

/// Dense univariate polynomial over Q, coefficient of x^k at index k.
using QPoly = std::vector<mpq_class>;

QPoly qp_trim(QPoly p);
bool qp_is_zero(const QPoly& p);
int qp_deg(const QPoly& p);  // -1 for zero
QPoly qp_add(const QPoly& a, const QPoly& b);
QPoly qp_sub(const QPoly& a, const QPoly& b);
QPoly qp_mul(const QPoly& a, const QPoly& b);
QPoly qp_scale(const QPoly& a, const mpq_class& c);
/// Quotient and remainder of a by b (b nonzero).
std::pair<QPoly, QPoly> qp_divmod(const QPoly& a, const QPoly& b);
QPoly qp_derivative(const QPoly& a);
QPoly qp_monic(const QPoly& a);
QPoly qp_gcd(QPoly a, QPoly b);  // monic gcd
mpq_class qp_eval(const QPoly& a, const mpq_class& x);

/// Yun squarefree decomposition: p = lc * prod factors[k]^(k+1) with the
/// factors monic, squarefree and pairwise coprime.
struct SquarefreeDecomposition {
    mpq_class lc;
    std::vector<QPoly> factors;  // factors[k] has multiplicity k+1
};
SquarefreeDecomposition qp_squarefree(const QPoly& p);

/// Complex roots by companion-matrix eigenvalues (numeric helper only; every
/// consumer verifies its output exactly).
std::vector<std::complex<double>> qp_roots(const QPoly& p);

/// p = a^2 + b^2 with a, b in Q[x], found by pairing numeric root conjugates
/// into a Gaussian-rational factor and verifying the identity exactly.
/// Requires p squarefree with positive leading coefficient and no real roots;
/// returns nullopt when no Q(i) factorization exists (or reconstruction
/// fails), never an unverified answer.
std::optional<std::pair<QPoly, QPoly>> qp_sum_of_two_squares(const QPoly& p);

/// n = a^2+b^2+c^2+d^2 for a nonnegative integer (small search; nullopt only
/// if n exceeds the search budget).
std::optional<std::array<mpz_class, 4>> four_square_decomposition(const mpz_class& n);

}  // namespace starcert

#endif
