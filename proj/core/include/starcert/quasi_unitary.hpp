#ifndef STARCERT_QUASI_UNITARY_HPP
#define STARCERT_QUASI_UNITARY_HPP

#include <stdexcept>
#include <vector>

#include "starcert/matrix.hpp"
#include "starcert/poly.hpp"
#include "starcert/scalar_certifier.hpp"

namespace starcert {

struct NotHermitianError : std::runtime_error {
    NotHermitianError() : std::runtime_error("matrix is not hermitian") {}
};
struct ZeroBlockInconsistent : std::runtime_error {
    ZeroBlockInconsistent() : std::runtime_error("pivot is 0 but its row is not; input was not PSD") {}
};
struct ScalarCertificateUnavailable : std::runtime_error {
    explicit ScalarCertificateUnavailable(const std::string& what) : std::runtime_error(what) {}
};

/// T with T*T = TT* = s I, s a stored sum of squares.
struct QuasiUnitary {
    Matrix<StarPoly> T;
    StarPoly s;
    std::vector<StarPoly> s_squares;  // s = sum q* q
};

/// Result of the first-column construction: T quasi-unitary with
/// t_{i1} = multiplier * a_i. The multiplier is itself a stored sum of
/// squares; note it is distinct from s(T) in general.
struct BuiltQuasiUnitary {
    QuasiUnitary qu;
    StarPoly multiplier;
    std::vector<StarPoly> multiplier_squares;
};

/// 2x2 block [[a1, -a2*], [a2, a1*]] with s = a1* a1 + a2* a2.
QuasiUnitary qu_pair(const StarPoly& a1, const StarPoly& a2);

/// Recursive construction for 2^k inputs, k >= 1. All identities are checked
/// exactly before returning.
BuiltQuasiUnitary build_quasi_unitary(const std::vector<StarPoly>& a);

/// d^2 A = sum_j x_j^* x_j with d self-adjoint and nonzero (unless A = 0).
struct MatrixArtinCertificate {
    StarPoly denominator;
    std::vector<std::vector<StarPoly>> rows;
};

/// Schur-complement induction. `known_roots`, when given, supplies A as an
/// exact Gram sum A = sum_r row_r^* row_r; pivot and complement decompositions
/// are then propagated instead of searched for. The certifier is consulted
/// first for every pivot (it keeps certificates small); propagation is the
/// fallback.
MatrixArtinCertificate certify_psd_matrix(const Matrix<StarPoly>& A, const ScalarCertifier& certifier,
                                          const std::vector<std::vector<StarPoly>>* known_roots = nullptr);

bool verify_artin(const MatrixArtinCertificate& cert, const Matrix<StarPoly>& A);

}  // namespace starcert

#endif
