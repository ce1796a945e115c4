#ifndef STARCERT_QUIVER_HPP
#define STARCERT_QUIVER_HPP

#include <string>
#include <vector>

#include "starcert/free_poly.hpp"
#include "starcert/matrix.hpp"

namespace starcert {

struct UnknownLetterError : std::runtime_error {
    UnknownLetterError() : std::runtime_error("word contains a letter outside the quiver") {}
};

/// A *-quiver: finite vertex set, arrows with a star-pairing b <-> b*
/// reversing orientation (knots satisfy b* != b; the starred partner is
/// always a separate arrow). Arrows double as the letters of the free
/// *-algebra the path algebra embeds into.
class Quiver {
public:
    /// arrows: (name, origin, terminus), vertices numbered from 0. The
    /// starred partner "<name>*" is created automatically.
    static Quiver make(size_t nvertices, const std::vector<std::tuple<std::string, size_t, size_t>>& arrows);

    size_t vertex_count() const { return nvertices_; }
    const FreeAlphabetPtr& alphabet() const { return alphabet_; }
    size_t origin(uint16_t letter) const { return origin_[letter]; }
    size_t terminus(uint16_t letter) const { return terminus_[letter]; }

    bool is_path(const Word& w) const;
    /// Path endpoints; only valid when is_path(w).
    std::pair<size_t, size_t> endpoints(const Word& w) const;

private:
    size_t nvertices_ = 0;
    FreeAlphabetPtr alphabet_;
    std::vector<size_t> origin_, terminus_;
};

/// p_ij: keeps exactly the words that are paths from vertex i to vertex j.
/// The empty word maps to delta_ij (the identity of the path algebra is the
/// sum of the vertex idempotents, so the matrix-level projection forces the
/// Kronecker-delta reading).
FreeStarPoly pij(const Quiver& q, const FreeStarPoly& x, size_t i, size_t j);

/// Entrywise p_ij on an n x n matrix, n = vertex count: the conditional
/// expectation onto the embedded path algebra.
Matrix<FreeStarPoly> path_project(const Quiver& q, const Matrix<FreeStarPoly>& X);

/// Embedded path-algebra generators.
Matrix<FreeStarPoly> vertex_idempotent(const Quiver& q, size_t i);
Matrix<FreeStarPoly> arrow_element(const Quiver& q, uint16_t letter);
Matrix<FreeStarPoly> path_element(const Quiver& q, const Word& w);

/// Explicit square roots of P(sum_r row_r^* row_r): for every input row
/// y = (y_1..y_n) and every vertex k the row (p_k1(y_1), ..., p_kn(y_n)).
/// The Gram sum of the returned rows equals path_project of the Gram sum of
/// the inputs, exactly.
std::vector<std::vector<FreeStarPoly>> path_sos_project(const Quiver& q,
                                                        const std::vector<std::vector<FreeStarPoly>>& rows);

}  // namespace starcert

#endif
