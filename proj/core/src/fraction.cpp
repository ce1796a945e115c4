#include "starcert/fraction.hpp"

#include <stdexcept>

namespace starcert {

namespace {

// Largest monomial dividing every term.
Exponents monomial_content(const StarPoly& p) {
    Exponents m;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        (void)c;
        if (first) {
            m = e;
            first = false;
        } else {
            for (size_t v = 0; v < m.size(); ++v) m[v] = std::min(m[v], e[v]);
        }
    }
    return m;
}

StarPoly shift_down(const StarPoly& p, const Exponents& m) {
    TermMap t;
    for (const auto& [e, c] : p.terms()) {
        Exponents ne = e;
        for (size_t v = 0; v < ne.size(); ++v) ne[v] -= m[v];
        t.emplace(std::move(ne), c);
    }
    return StarPoly(p.ring(), std::move(t));
}

// Rational content (gcd of numerators / lcm of denominators over both parts).
ExactScalar rational_content(const StarPoly& p) {
    mpz_class g(0), l(1);
    for (const auto& [e, c] : p.terms()) {
        (void)e;
        for (const mpq_class& q : {c.re(), c.im()}) {
            if (q == 0) continue;
            mpz_class num = q.get_num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
            mpz_class den = q.get_den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        }
    }
    if (g == 0) return ExactScalar::one();
    return ExactScalar(mpq_class(g, l));
}

}  // namespace

Fraction::Fraction(StarPoly num) : num_(std::move(num)), den_(num_.ring(), ExactScalar::one()) {}

Fraction::Fraction(StarPoly num, StarPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Fraction: zero denominator");
    if (!num_.ring()->same_ring(*den_.ring())) throw std::invalid_argument("Fraction: ring mismatch");
    reduce();
}

void Fraction::reduce() {
    if (num_.is_zero()) {
        den_ = StarPoly(den_.ring(), ExactScalar::one());
        return;
    }
    if (!num_.ring()->has_relation()) {
        Exponents mn = monomial_content(num_), md = monomial_content(den_);
        Exponents common(mn.size());
        bool any = false;
        for (size_t v = 0; v < mn.size(); ++v) {
            common[v] = std::min(mn[v], md[v]);
            any |= common[v] > 0;
        }
        if (any) {
            num_ = shift_down(num_, common);
            den_ = shift_down(den_, common);
        }
        if (auto q = num_.divide_exact(den_)) {
            num_ = *q;
            den_ = StarPoly(den_.ring(), ExactScalar::one());
        } else if (auto qd = den_.divide_exact(num_)) {
            // num/den = 1/(den/num)
            den_ = *qd;
            num_ = StarPoly(num_.ring(), ExactScalar::one());
        }
    }
    // Normalize so the denominator's trailing coefficient is 1.
    ExactScalar c = rational_content(den_);
    const ExactScalar& lead = den_.terms().begin()->second;
    if (lead.prints_negative()) c = -c;
    if (!den_.terms().begin()->second.is_real() || den_.terms().begin()->second.im() != 0) {
        // keep it simple: only scale by the rational content
    }
    if (!c.is_one()) {
        ExactScalar inv = c.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Fraction Fraction::operator-() const {
    Fraction f;
    f.num_ = -num_;
    f.den_ = den_;
    return f;
}

Fraction Fraction::operator+(const Fraction& o) const {
    if (den_ == o.den_) return Fraction(num_ + o.num_, den_);
    return Fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Fraction Fraction::operator-(const Fraction& o) const {
    if (den_ == o.den_) return Fraction(num_ - o.num_, den_);
    return Fraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Fraction Fraction::operator*(const Fraction& o) const { return Fraction(num_ * o.num_, den_ * o.den_); }

Fraction Fraction::inverse() const {
    if (num_.is_zero()) throw std::domain_error("Fraction: inverse of zero");
    return Fraction(den_, num_);
}

Fraction Fraction::operator/(const Fraction& o) const { return *this * o.inverse(); }

bool Fraction::operator==(const Fraction& o) const { return num_ * o.den_ == o.num_ * den_; }

ExactScalar Fraction::eval(const std::vector<ExactScalar>& point) const {
    ExactScalar d = den_.eval(point);
    if (d.is_zero()) throw std::domain_error("Fraction: undefined at point");
    return num_.eval(point) / d;
}

Fraction Fraction::substitute(const std::vector<StarPoly>& images) const {
    return Fraction(num_.substitute(images), den_.substitute(images));
}

std::string Fraction::str() const {
    if (is_polynomial() && den_.constant_term().is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Fraction Fraction::parse(const PolyRingPtr& ring, const std::string& text) {
    auto slash = text.find(")/(");
    if (!text.empty() && text.front() == '(' && slash != std::string::npos && text.back() == ')') {
        std::string n = text.substr(1, slash - 1);
        std::string d = text.substr(slash + 3, text.size() - slash - 4);
        return Fraction(StarPoly::parse(ring, n), StarPoly::parse(ring, d));
    }
    return Fraction(StarPoly::parse(ring, text));
}

}  // namespace starcert
