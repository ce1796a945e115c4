#ifndef STARCERT_WEYL_HPP
#define STARCERT_WEYL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "starcert/scalar.hpp"

namespace starcert {

/// Element of the Weyl algebra C<a, a* | a a* - a* a = 1> in normal form:
/// finite sum of c_{pq} (a*)^p a^q. Multiplication renormalizes through the
/// commutation rule a^q (a*)^r = sum_k k! C(q,k) C(r,k) (a*)^{r-k} a^{q-k}.
class WeylElement {
public:
    using Key = std::pair<uint32_t, uint32_t>;  // (p, q) for (a*)^p a^q

    WeylElement() = default;

    static WeylElement zero() { return WeylElement(); }
    static WeylElement constant(const ExactScalar& c);
    static WeylElement one() { return constant(ExactScalar::one()); }
    static WeylElement annihilator();                           // a
    static WeylElement creator();                               // a*
    static WeylElement monomial(uint32_t p, uint32_t q, const ExactScalar& c = ExactScalar::one());
    static WeylElement number_op() { return monomial(1, 1); }   // N = a* a

    /// Polynomial f(N) in the number operator.
    static WeylElement poly_in_N(const std::vector<ExactScalar>& coeffs);
    /// c_k = (a*)^k a^k = N(N-1)...(N-k+1).
    static WeylElement c_factor(uint32_t k) { return monomial(k, k); }

    const std::map<Key, ExactScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int64_t total_degree() const;

    WeylElement star() const;
    WeylElement operator-() const;
    WeylElement operator+(const WeylElement& o) const;
    WeylElement operator-(const WeylElement& o) const;
    WeylElement operator*(const WeylElement& o) const;
    WeylElement operator*(const ExactScalar& c) const;
    WeylElement& operator+=(const WeylElement& o);
    WeylElement& operator-=(const WeylElement& o);

    bool operator==(const WeylElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    void insert_term(const Key& k, const ExactScalar& c);
    std::map<Key, ExactScalar> terms_;
};

inline WeylElement operator*(const ExactScalar& c, const WeylElement& w) { return w * c; }

}  // namespace starcert

#endif
