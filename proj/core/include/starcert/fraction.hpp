#ifndef STARCERT_FRACTION_HPP
#define STARCERT_FRACTION_HPP

#include "starcert/poly.hpp"

namespace starcert {

/// num/den over a StarPoly ring (an integral domain, so cross-multiplied
/// equality is sound). Reduction is cheap-only: rational content, common
/// monomial factors and trial exact division; no full multivariate gcd.
class Fraction {
public:
    Fraction() = default;
    explicit Fraction(StarPoly num);
    Fraction(StarPoly num, StarPoly den);

    static Fraction constant(const PolyRingPtr& ring, const ExactScalar& c) {
        return Fraction(StarPoly(ring, c));
    }
    static Fraction variable(const PolyRingPtr& ring, size_t k) {
        return Fraction(StarPoly::variable(ring, k));
    }

    const StarPoly& num() const { return num_; }
    const StarPoly& den() const { return den_; }
    const PolyRingPtr& ring() const { return num_.ring(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    Fraction star() const { return Fraction(num_.star(), den_.star()); }
    bool is_self_adjoint() const { return *this == star(); }

    Fraction operator-() const;
    Fraction operator+(const Fraction& o) const;
    Fraction operator-(const Fraction& o) const;
    Fraction operator*(const Fraction& o) const;
    Fraction operator/(const Fraction& o) const;
    Fraction inverse() const;
    Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
    Fraction& operator-=(const Fraction& o) { return *this = *this - o; }
    Fraction& operator*=(const Fraction& o) { return *this = *this * o; }

    bool operator==(const Fraction& o) const;
    bool operator!=(const Fraction& o) const { return !(*this == o); }

    /// Evaluation; throws UndefinedAtPoint-style domain_error on a pole.
    ExactScalar eval(const std::vector<ExactScalar>& point) const;
    Fraction substitute(const std::vector<StarPoly>& images) const;

    std::string str() const;
    static Fraction parse(const PolyRingPtr& ring, const std::string& text);

private:
    void reduce();
    StarPoly num_, den_;
};

inline Fraction operator*(const ExactScalar& c, const Fraction& f) {
    return Fraction(f.num() * c, f.den());
}

}  // namespace starcert

#endif
