#ifndef STARCERT_CROSSED_HPP
#define STARCERT_CROSSED_HPP

#include <memory>
#include <string>
#include <vector>

#include "starcert/matrix.hpp"
#include "starcert/poly.hpp"

namespace starcert {

/// Finite group by explicit multiplication table; validated at construction.
class GroupTable {
public:
    static GroupTable from_table(std::vector<std::vector<size_t>> mult, std::vector<std::string> names);
    static GroupTable cyclic(size_t n);
    static GroupTable symmetric3();

    size_t order() const { return mult_.size(); }
    size_t mul(size_t g, size_t h) const { return mult_[g][h]; }
    size_t inverse(size_t g) const { return inv_[g]; }
    size_t identity() const { return id_; }
    const std::string& name(size_t g) const { return names_[g]; }

private:
    std::vector<std::vector<size_t>> mult_;
    std::vector<size_t> inv_;
    std::vector<std::string> names_;
    size_t id_ = 0;
};

/// Monomial *-automorphism of a StarPoly ring: each variable maps to a real
/// unit multiple of a variable.
struct MonomialMap {
    std::vector<std::pair<size_t, ExactScalar>> images;  // variable -> (variable, scalar)
};

/// Base ring, finite group, and a monomial action g -> alpha_g. The
/// homomorphism laws and *-compatibility are validated at construction.
class CrossedProductSpec {
public:
    CrossedProductSpec(PolyRingPtr ring, GroupTable group, std::vector<MonomialMap> action);

    const PolyRingPtr& ring() const { return ring_; }
    const GroupTable& group() const { return group_; }
    size_t order() const { return group_.order(); }

    StarPoly apply(size_t g, const StarPoly& p) const;

private:
    PolyRingPtr ring_;
    GroupTable group_;
    std::vector<std::vector<StarPoly>> images_;  // substitution images per group element
};

/// Finitely supported map g -> a_g, i.e. sum_g a_g (x) g.
class CrossedElement {
public:
    explicit CrossedElement(const CrossedProductSpec* spec);
    CrossedElement(const CrossedProductSpec* spec, std::vector<StarPoly> components);

    static CrossedElement from_term(const CrossedProductSpec* spec, const StarPoly& a, size_t g);

    const CrossedProductSpec* spec() const { return spec_; }
    const StarPoly& component(size_t g) const { return comp_[g]; }
    std::vector<StarPoly>& components() { return comp_; }
    const std::vector<StarPoly>& components() const { return comp_; }
    bool is_zero() const;

    CrossedElement star() const;    // (a (x) g)* = alpha_{g^-1}(a*) (x) g^-1
    CrossedElement operator-() const;
    CrossedElement operator+(const CrossedElement& o) const;
    CrossedElement operator-(const CrossedElement& o) const;
    CrossedElement operator*(const CrossedElement& o) const;  // (a(x)g)(b(x)h) = a alpha_g(b) (x) gh
    bool operator==(const CrossedElement& o) const;

private:
    const CrossedProductSpec* spec_;
    std::vector<StarPoly> comp_;
};

/// Regular embedding eps: a (x) g -> sum_h alpha_h(a) (x) E_{h,hg}.
Matrix<StarPoly> crossed_embed(const CrossedElement& x);
/// Inverse of crossed_embed on its image (reads the identity row).
CrossedElement crossed_unembed(const CrossedProductSpec& spec, const Matrix<StarPoly>& M);
bool in_crossed_image(const CrossedProductSpec& spec, const Matrix<StarPoly>& M);

/// Group-average conditional expectation P = (1/n) sum_g beta_g with
/// beta_g(a (x) E_{m,k}) = alpha_g(a) (x) E_{gm,gk}.
Matrix<StarPoly> crossed_project(const CrossedProductSpec& spec, const Matrix<StarPoly>& M);

/// Explicit square roots: P(X^* X) = (1/n) sum_m root_m^* root_m with
/// root_m = sum_k alpha_{m^-1}(X(m,k)) (x) m^-1 k. Exactness of the expansion
/// is the strong-conditional-expectation property.
std::vector<CrossedElement> crossed_sos_project(const CrossedProductSpec& spec, const Matrix<StarPoly>& X);

/// Regular covariant representation at a rational point of the character
/// space: the embedded matrix evaluated along the orbit of the point.
Matrix<ExactScalar> creg_evaluate(const CrossedElement& x, const std::vector<ExactScalar>& point);

}  // namespace starcert

#endif
