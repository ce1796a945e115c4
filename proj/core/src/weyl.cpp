#include "starcert/weyl.hpp"

#include <algorithm>

namespace starcert {

WeylElement WeylElement::constant(const ExactScalar& c) {
    WeylElement w;
    if (!c.is_zero()) w.terms_.emplace(Key{0, 0}, c);
    return w;
}

WeylElement WeylElement::annihilator() { return monomial(0, 1); }
WeylElement WeylElement::creator() { return monomial(1, 0); }

WeylElement WeylElement::monomial(uint32_t p, uint32_t q, const ExactScalar& c) {
    WeylElement w;
    if (!c.is_zero()) w.terms_.emplace(Key{p, q}, c);
    return w;
}

WeylElement WeylElement::poly_in_N(const std::vector<ExactScalar>& coeffs) {
    WeylElement acc;
    WeylElement N = number_op();
    WeylElement power = one();
    for (size_t k = 0; k < coeffs.size(); ++k) {
        acc += power * coeffs[k];
        if (k + 1 < coeffs.size()) power = power * N;
    }
    return acc;
}

int64_t WeylElement::total_degree() const {
    int64_t d = -1;
    for (const auto& [k, c] : terms_) {
        (void)c;
        d = std::max<int64_t>(d, int64_t(k.first) + k.second);
    }
    return d;
}

WeylElement WeylElement::star() const {
    WeylElement out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(Key{k.second, k.first}, c.conj());
    return out;
}

WeylElement WeylElement::operator-() const {
    WeylElement out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

void WeylElement::insert_term(const Key& k, const ExactScalar& c) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
    for (const auto& [k, c] : o.terms_) insert_term(k, c);
    return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
    for (const auto& [k, c] : o.terms_) insert_term(k, -c);
    return *this;
}

WeylElement WeylElement::operator+(const WeylElement& o) const {
    WeylElement out = *this;
    out += o;
    return out;
}

WeylElement WeylElement::operator-(const WeylElement& o) const {
    WeylElement out = *this;
    out -= o;
    return out;
}

WeylElement WeylElement::operator*(const ExactScalar& c) const {
    WeylElement out;
    if (c.is_zero()) return out;
    for (const auto& [k, t] : terms_) out.terms_.emplace(k, t * c);
    return out;
}

namespace {

// k! C(q,k) C(r,k) as an exact integer: prod_{j<k} (q-j)(r-j)/(j+1).
mpz_class reorder_coeff(uint32_t q, uint32_t r, uint32_t k) {
    mpz_class c = 1;
    for (uint32_t j = 0; j < k; ++j) {
        c *= mpz_class(q - j);
        c *= mpz_class(r - j);
        c /= mpz_class(j + 1);
    }
    return c;
}

}  // namespace

WeylElement WeylElement::operator*(const WeylElement& o) const {
    WeylElement out;
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            // (a*)^p a^q (a*)^r a^s: reorder the middle a^q (a*)^r.
            uint32_t p = ka.first, q = ka.second, r = kb.first, s = kb.second;
            ExactScalar c = ca * cb;
            uint32_t kmax = std::min(q, r);
            for (uint32_t k = 0; k <= kmax; ++k) {
                mpz_class m = reorder_coeff(q, r, k);
                out.insert_term(Key{p + r - k, q - k + s}, c * ExactScalar(mpq_class(m)));
            }
        }
    }
    return out;
}

std::string WeylElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c0] : terms_) {
        ExactScalar c = c0;
        if (first) {
            first = false;
        } else if (c.prints_negative()) {
            out += " - ";
            c = -c;
        } else {
            out += " + ";
        }
        std::string mono;
        if (k.first) mono += "a*^" + std::to_string(k.first);
        if (k.second) {
            if (!mono.empty()) mono += " ";
            mono += "a^" + std::to_string(k.second);
        }
        if (mono.empty())
            out += c.str();
        else if (c.is_one())
            out += mono;
        else
            out += "(" + c.str() + ")*" + mono;
    }
    return out;
}

}  // namespace starcert
