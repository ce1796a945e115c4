#ifndef STARCERT_POLY_HPP
#define STARCERT_POLY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "starcert/scalar.hpp"

namespace starcert {

/// Exponent vector; one entry per ring variable.
using Exponents = std::vector<uint32_t>;

/// Graded lexicographic order (total degree first, then lex).
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        uint64_t da = 0, db = 0;
        for (auto e : a) da += e;
        for (auto e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }
};

using TermMap = std::map<Exponents, ExactScalar, GradedLexLess>;

class PolyRing;
using PolyRingPtr = std::shared_ptr<const PolyRing>;

/// A commutative polynomial coefficient ring over the Gaussian rationals with
/// self-adjoint variables. Optionally a single quadratic rewrite rule
/// v^2 -> r(vars) (with deg_v r <= 1) turns the ring into the quotient by
/// that relation; normalization reduces every exponent of v below 2.
class PolyRing : public std::enable_shared_from_this<PolyRing> {
public:
    static PolyRingPtr make(std::vector<std::string> vars);
    /// Quotient by rel_var^2 = replacement. The replacement is given as a raw
    /// term map over the same variable list and must have degree <= 1 in
    /// rel_var.
    static PolyRingPtr make_quotient(std::vector<std::string> vars, const std::string& rel_var,
                                     TermMap replacement);

    size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& var_names() const { return vars_; }
    const std::string& var_name(size_t k) const { return vars_[k]; }
    std::optional<size_t> var_index(const std::string& name) const;

    bool has_relation() const { return rel_var_.has_value(); }
    size_t relation_var() const { return *rel_var_; }
    const TermMap& relation_replacement() const { return rel_replacement_; }

    bool same_ring(const PolyRing& other) const;

private:
    PolyRing() = default;
    std::vector<std::string> vars_;
    std::optional<size_t> rel_var_;
    TermMap rel_replacement_;
};

/// Element of a PolyRing, stored in canonical form: zero coefficients are
/// never kept and, in a quotient ring, every exponent of the relation
/// variable is < 2. Involution conjugates coefficients and fixes variables.
class StarPoly {
public:
    StarPoly() = default;
    explicit StarPoly(PolyRingPtr ring) : ring_(std::move(ring)) {}
    StarPoly(PolyRingPtr ring, const ExactScalar& c);
    StarPoly(PolyRingPtr ring, TermMap terms);

    static StarPoly variable(const PolyRingPtr& ring, size_t k, uint32_t power = 1);
    static StarPoly constant(const PolyRingPtr& ring, const ExactScalar& c) { return StarPoly(ring, c); }

    const PolyRingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero if absent).
    ExactScalar constant_term() const;

    int64_t total_degree() const;  // -1 for the zero polynomial
    int64_t degree_in(size_t var) const;

    StarPoly star() const;
    bool is_self_adjoint() const { return *this == star(); }

    StarPoly operator-() const;
    StarPoly operator+(const StarPoly& o) const;
    StarPoly operator-(const StarPoly& o) const;
    StarPoly operator*(const StarPoly& o) const;
    StarPoly operator*(const ExactScalar& c) const;
    StarPoly& operator+=(const StarPoly& o);
    StarPoly& operator-=(const StarPoly& o);
    StarPoly& operator*=(const StarPoly& o) { return *this = *this * o; }
    StarPoly pow(uint64_t e) const;

    bool operator==(const StarPoly& o) const;
    bool operator!=(const StarPoly& o) const { return !(*this == o); }

    ExactScalar eval(const std::vector<ExactScalar>& point) const;
    /// Substitute images[k] for variable k (images over any common ring).
    StarPoly substitute(const std::vector<StarPoly>& images) const;

    /// Exact division: returns q with *this == q * divisor, or nullopt.
    /// Only available in relation-free rings.
    std::optional<StarPoly> divide_exact(const StarPoly& divisor) const;

    /// Canonical text form, e.g. "(3/2+1/2i)*x^2*y - z". Parsing the result
    /// gives back an equal polynomial, bit-exact.
    std::string str() const;
    static StarPoly parse(const PolyRingPtr& ring, const std::string& text);

private:
    void insert_term(const Exponents& e, const ExactScalar& c);
    void normalize_relation();
    PolyRingPtr ring_;
    TermMap terms_;
};

inline StarPoly operator*(const ExactScalar& c, const StarPoly& p) { return p * c; }

/// Exact square root of a polynomial (relation-free rings, rational-square
/// leading coefficient), or nullopt.
std::optional<StarPoly> sqrt_exact(const StarPoly& p);

/// Naive term-by-term product of raw term maps (no relation handling).
TermMap term_mul_naive(const TermMap& a, const TermMap& b, size_t nvars);
/// Kronecker-substitution product through GMP big-integer multiplication.
/// Exact; used automatically for large operands.
TermMap term_mul_kronecker(const TermMap& a, const TermMap& b, size_t nvars);

}  // namespace starcert

#endif
