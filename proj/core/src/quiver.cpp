#include "starcert/quiver.hpp"

namespace starcert {

Quiver Quiver::make(size_t nvertices, const std::vector<std::tuple<std::string, size_t, size_t>>& arrows) {
    Quiver q;
    q.nvertices_ = nvertices;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& [name, o, t] : arrows) {
        if (o >= nvertices || t >= nvertices) throw std::invalid_argument("Quiver: vertex out of range");
        pairs.emplace_back(name, name + "*");
    }
    q.alphabet_ = FreeAlphabet::make(pairs);
    q.origin_.resize(q.alphabet_->size());
    q.terminus_.resize(q.alphabet_->size());
    for (const auto& [name, o, t] : arrows) {
        uint16_t b = *q.alphabet_->index(name);
        uint16_t bs = q.alphabet_->star_of(b);
        q.origin_[b] = o;
        q.terminus_[b] = t;
        q.origin_[bs] = t;  // o(b*) = t(b)
        q.terminus_[bs] = o;
    }
    return q;
}

bool Quiver::is_path(const Word& w) const {
    for (size_t k = 0; k + 1 < w.size(); ++k)
        if (terminus_[w[k]] != origin_[w[k + 1]]) return false;
    return true;
}

std::pair<size_t, size_t> Quiver::endpoints(const Word& w) const {
    return {origin_[w.front()], terminus_[w.back()]};
}

FreeStarPoly pij(const Quiver& q, const FreeStarPoly& x, size_t i, size_t j) {
    if (i >= q.vertex_count() || j >= q.vertex_count()) throw std::out_of_range("pij: vertex out of range");
    WordTermMap kept;
    for (const auto& [w, c] : x.terms()) {
        for (auto l : w)
            if (l >= q.alphabet()->size()) throw UnknownLetterError();
        if (w.empty()) {
            if (i == j) kept.emplace(w, c);
            continue;
        }
        if (!q.is_path(w)) continue;
        auto [o, t] = q.endpoints(w);
        if (o == i && t == j) kept.emplace(w, c);
    }
    return FreeStarPoly(x.alphabet(), std::move(kept));
}

Matrix<FreeStarPoly> path_project(const Quiver& q, const Matrix<FreeStarPoly>& X) {
    size_t n = q.vertex_count();
    if (X.rows() != n || X.cols() != n) throw std::invalid_argument("path_project: size != vertex count");
    Matrix<FreeStarPoly> out(n, n, FreeStarPoly(q.alphabet()));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out(i, j) = pij(q, X(i, j), i, j);
    return out;
}

Matrix<FreeStarPoly> vertex_idempotent(const Quiver& q, size_t i) {
    size_t n = q.vertex_count();
    Matrix<FreeStarPoly> out(n, n, FreeStarPoly(q.alphabet()));
    out(i, i) = FreeStarPoly(q.alphabet(), ExactScalar::one());
    return out;
}

Matrix<FreeStarPoly> arrow_element(const Quiver& q, uint16_t letter) {
    size_t n = q.vertex_count();
    Matrix<FreeStarPoly> out(n, n, FreeStarPoly(q.alphabet()));
    out(q.origin(letter), q.terminus(letter)) = FreeStarPoly::letter(q.alphabet(), letter);
    return out;
}

Matrix<FreeStarPoly> path_element(const Quiver& q, const Word& w) {
    if (w.empty()) throw std::invalid_argument("path_element: empty word; use vertex_idempotent");
    if (!q.is_path(w)) throw std::invalid_argument("path_element: word is not a path");
    size_t n = q.vertex_count();
    auto [o, t] = q.endpoints(w);
    Matrix<FreeStarPoly> out(n, n, FreeStarPoly(q.alphabet()));
    out(o, t) = FreeStarPoly::word(q.alphabet(), w);
    return out;
}

std::vector<std::vector<FreeStarPoly>> path_sos_project(const Quiver& q,
                                                        const std::vector<std::vector<FreeStarPoly>>& rows) {
    size_t n = q.vertex_count();
    std::vector<std::vector<FreeStarPoly>> out;
    for (const auto& y : rows) {
        if (y.size() != n) throw std::invalid_argument("path_sos_project: bad row width");
        for (size_t k = 0; k < n; ++k) {
            std::vector<FreeStarPoly> r;
            r.reserve(n);
            bool nonzero = false;
            for (size_t j = 0; j < n; ++j) {
                FreeStarPoly e = pij(q, y[j], k, j);
                nonzero |= !e.is_zero();
                r.push_back(std::move(e));
            }
            if (nonzero) out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace starcert
