#include "starcert/crossed.hpp"

#include <array>
#include <stdexcept>

namespace starcert {

GroupTable GroupTable::from_table(std::vector<std::vector<size_t>> mult, std::vector<std::string> names) {
    GroupTable g;
    size_t n = mult.size();
    if (n == 0 || names.size() != n) throw std::invalid_argument("GroupTable: bad table");
    for (const auto& row : mult) {
        if (row.size() != n) throw std::invalid_argument("GroupTable: ragged table");
        for (auto v : row)
            if (v >= n) throw std::invalid_argument("GroupTable: entry out of range");
    }
    // identity
    size_t id = n;
    for (size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (size_t x = 0; x < n && ok; ++x) ok = mult[e][x] == x && mult[x][e] == x;
        if (ok) {
            id = e;
            break;
        }
    }
    if (id == n) throw std::invalid_argument("GroupTable: no identity");
    // associativity
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c)
                if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
                    throw std::invalid_argument("GroupTable: not associative");
    // inverses
    std::vector<size_t> inv(n, n);
    for (size_t a = 0; a < n; ++a) {
        for (size_t b = 0; b < n; ++b)
            if (mult[a][b] == id && mult[b][a] == id) {
                inv[a] = b;
                break;
            }
        if (inv[a] == n) throw std::invalid_argument("GroupTable: missing inverse");
    }
    g.mult_ = std::move(mult);
    g.inv_ = std::move(inv);
    g.names_ = std::move(names);
    g.id_ = id;
    return g;
}

GroupTable GroupTable::cyclic(size_t n) {
    std::vector<std::vector<size_t>> mult(n, std::vector<size_t>(n));
    std::vector<std::string> names;
    for (size_t a = 0; a < n; ++a) {
        names.push_back("g" + std::to_string(a));
        for (size_t b = 0; b < n; ++b) mult[a][b] = (a + b) % n;
    }
    return from_table(std::move(mult), std::move(names));
}

GroupTable GroupTable::symmetric3() {
    // permutations of {0,1,2} listed as id, (01), (02), (12), (012), (021)
    std::vector<std::array<size_t, 3>> perms = {
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    auto compose = [&](size_t a, size_t b) {  // (a then b)(x) = a(b(x))
        std::array<size_t, 3> c{};
        for (size_t x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
        for (size_t k = 0; k < perms.size(); ++k)
            if (perms[k] == c) return k;
        throw std::logic_error("symmetric3: closure");
    };
    std::vector<std::vector<size_t>> mult(6, std::vector<size_t>(6));
    std::vector<std::string> names = {"e", "(01)", "(02)", "(12)", "(012)", "(021)"};
    for (size_t a = 0; a < 6; ++a)
        for (size_t b = 0; b < 6; ++b) mult[a][b] = compose(a, b);
    return from_table(std::move(mult), std::move(names));
}

CrossedProductSpec::CrossedProductSpec(PolyRingPtr ring, GroupTable group, std::vector<MonomialMap> action)
    : ring_(std::move(ring)), group_(std::move(group)) {
    size_t n = group_.order();
    if (action.size() != n) throw std::invalid_argument("CrossedProductSpec: one map per group element");
    size_t nv = ring_->nvars();
    images_.resize(n);
    for (size_t g = 0; g < n; ++g) {
        if (action[g].images.size() != nv) throw std::invalid_argument("CrossedProductSpec: bad map arity");
        for (auto [tgt, c] : action[g].images) {
            if (tgt >= nv) throw std::invalid_argument("CrossedProductSpec: target out of range");
            if (!c.is_real() || c.is_zero())
                throw std::invalid_argument("CrossedProductSpec: scalars must be real units");
            (void)tgt;
        }
        for (size_t v = 0; v < nv; ++v) {
            auto [tgt, c] = action[g].images[v];
            images_[g].push_back(StarPoly::variable(ring_, tgt) * c);
        }
    }
    // alpha_e = id and alpha_g alpha_h = alpha_{gh}, checked on the variables
    for (size_t v = 0; v < nv; ++v) {
        if (images_[group_.identity()][v] != StarPoly::variable(ring_, v))
            throw std::invalid_argument("CrossedProductSpec: alpha_e != id");
    }
    for (size_t g = 0; g < n; ++g)
        for (size_t h = 0; h < n; ++h)
            for (size_t v = 0; v < nv; ++v) {
                StarPoly lhs = apply(g, images_[h][v]);
                if (lhs != images_[group_.mul(g, h)][v])
                    throw std::invalid_argument("CrossedProductSpec: action is not a homomorphism");
            }
}

StarPoly CrossedProductSpec::apply(size_t g, const StarPoly& p) const { return p.substitute(images_[g]); }

CrossedElement::CrossedElement(const CrossedProductSpec* spec)
    : spec_(spec), comp_(spec->order(), StarPoly(spec->ring())) {}

CrossedElement::CrossedElement(const CrossedProductSpec* spec, std::vector<StarPoly> components)
    : spec_(spec), comp_(std::move(components)) {
    if (comp_.size() != spec_->order()) throw std::invalid_argument("CrossedElement: bad component count");
}

CrossedElement CrossedElement::from_term(const CrossedProductSpec* spec, const StarPoly& a, size_t g) {
    CrossedElement x(spec);
    x.comp_[g] = a;
    return x;
}

bool CrossedElement::is_zero() const {
    for (const auto& c : comp_)
        if (!c.is_zero()) return false;
    return true;
}

CrossedElement CrossedElement::star() const {
    CrossedElement out(spec_);
    for (size_t g = 0; g < comp_.size(); ++g) {
        size_t gi = spec_->group().inverse(g);
        out.comp_[gi] += spec_->apply(gi, comp_[g].star());
    }
    return out;
}

CrossedElement CrossedElement::operator-() const {
    CrossedElement out(spec_);
    for (size_t g = 0; g < comp_.size(); ++g) out.comp_[g] = -comp_[g];
    return out;
}

CrossedElement CrossedElement::operator+(const CrossedElement& o) const {
    CrossedElement out(spec_);
    for (size_t g = 0; g < comp_.size(); ++g) out.comp_[g] = comp_[g] + o.comp_[g];
    return out;
}

CrossedElement CrossedElement::operator-(const CrossedElement& o) const {
    CrossedElement out(spec_);
    for (size_t g = 0; g < comp_.size(); ++g) out.comp_[g] = comp_[g] - o.comp_[g];
    return out;
}

CrossedElement CrossedElement::operator*(const CrossedElement& o) const {
    CrossedElement out(spec_);
    for (size_t g = 0; g < comp_.size(); ++g) {
        if (comp_[g].is_zero()) continue;
        for (size_t h = 0; h < comp_.size(); ++h) {
            if (o.comp_[h].is_zero()) continue;
            out.comp_[spec_->group().mul(g, h)] += comp_[g] * spec_->apply(g, o.comp_[h]);
        }
    }
    return out;
}

bool CrossedElement::operator==(const CrossedElement& o) const {
    for (size_t g = 0; g < comp_.size(); ++g)
        if (comp_[g] != o.comp_[g]) return false;
    return true;
}

Matrix<StarPoly> crossed_embed(const CrossedElement& x) {
    const CrossedProductSpec& spec = *x.spec();
    size_t n = spec.order();
    Matrix<StarPoly> M(n, n, StarPoly(spec.ring()));
    for (size_t g = 0; g < n; ++g) {
        if (x.component(g).is_zero()) continue;
        for (size_t h = 0; h < n; ++h) M(h, spec.group().mul(h, g)) += spec.apply(h, x.component(g));
    }
    return M;
}

CrossedElement crossed_unembed(const CrossedProductSpec& spec, const Matrix<StarPoly>& M) {
    size_t e = spec.group().identity();
    CrossedElement x(&spec);
    for (size_t g = 0; g < spec.order(); ++g) x.components()[g] = M(e, spec.group().mul(e, g));
    if (!(crossed_embed(x) == M)) throw std::invalid_argument("crossed_unembed: matrix not in the image");
    return x;
}

bool in_crossed_image(const CrossedProductSpec& spec, const Matrix<StarPoly>& M) {
    size_t e = spec.group().identity();
    CrossedElement x(&spec);
    for (size_t g = 0; g < spec.order(); ++g) x.components()[g] = M(e, spec.group().mul(e, g));
    return crossed_embed(x) == M;
}

Matrix<StarPoly> crossed_project(const CrossedProductSpec& spec, const Matrix<StarPoly>& M) {
    size_t n = spec.order();
    if (M.rows() != n || M.cols() != n) throw std::invalid_argument("crossed_project: size != group order");
    Matrix<StarPoly> out(n, n, StarPoly(spec.ring()));
    ExactScalar w = ExactScalar::rational(1, long(n));
    for (size_t m = 0; m < n; ++m)
        for (size_t k = 0; k < n; ++k) {
            if (M(m, k).is_zero()) continue;
            for (size_t g = 0; g < n; ++g)
                out(spec.group().mul(g, m), spec.group().mul(g, k)) += spec.apply(g, M(m, k)) * w;
        }
    return out;
}

std::vector<CrossedElement> crossed_sos_project(const CrossedProductSpec& spec, const Matrix<StarPoly>& X) {
    size_t n = spec.order();
    if (X.rows() != n || X.cols() != n) throw std::invalid_argument("crossed_sos_project: bad shape");
    std::vector<CrossedElement> roots;
    for (size_t m = 0; m < n; ++m) {
        size_t mi = spec.group().inverse(m);
        CrossedElement root(&spec);
        for (size_t k = 0; k < n; ++k) {
            if (X(m, k).is_zero()) continue;
            root.components()[spec.group().mul(mi, k)] += spec.apply(mi, X(m, k));
        }
        roots.push_back(std::move(root));
    }
    return roots;
}

Matrix<ExactScalar> creg_evaluate(const CrossedElement& x, const std::vector<ExactScalar>& point) {
    Matrix<StarPoly> M = crossed_embed(x);
    size_t n = M.rows();
    Matrix<ExactScalar> out(n, n, ExactScalar::zero());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out(i, j) = M(i, j).eval(point);
    return out;
}

}  // namespace starcert
