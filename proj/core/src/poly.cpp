#include "starcert/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace starcert {

// ---------------------------------------------------------------------------
// PolyRing

PolyRingPtr PolyRing::make(std::vector<std::string> vars) {
    for (const auto& v : vars) {
        if (v.empty() || v == "i" || !std::isalpha(static_cast<unsigned char>(v[0])))
            throw std::invalid_argument("PolyRing: bad variable name '" + v + "'");
    }
    auto r = std::shared_ptr<PolyRing>(new PolyRing());
    r->vars_ = std::move(vars);
    return r;
}

PolyRingPtr PolyRing::make_quotient(std::vector<std::string> vars, const std::string& rel_var,
                                    TermMap replacement) {
    auto base = make(std::move(vars));
    auto r = std::shared_ptr<PolyRing>(new PolyRing());
    r->vars_ = base->var_names();
    auto idx = base->var_index(rel_var);
    if (!idx) throw std::invalid_argument("PolyRing: unknown relation variable " + rel_var);
    for (const auto& [e, c] : replacement) {
        if (e.size() != r->vars_.size()) throw std::invalid_argument("PolyRing: bad replacement term");
        if (e[*idx] > 1) throw std::invalid_argument("PolyRing: replacement must have degree <= 1 in relation variable");
        (void)c;
    }
    r->rel_var_ = *idx;
    r->rel_replacement_ = std::move(replacement);
    return r;
}

std::optional<size_t> PolyRing::var_index(const std::string& name) const {
    for (size_t k = 0; k < vars_.size(); ++k)
        if (vars_[k] == name) return k;
    return std::nullopt;
}

bool PolyRing::same_ring(const PolyRing& other) const {
    if (this == &other) return true;
    if (vars_ != other.vars_) return false;
    if (rel_var_ != other.rel_var_) return false;
    if (rel_var_) {
        if (rel_replacement_.size() != other.rel_replacement_.size()) return false;
        auto it = other.rel_replacement_.begin();
        for (const auto& [e, c] : rel_replacement_) {
            if (it->first != e || !(it->second == c)) return false;
            ++it;
        }
    }
    return true;
}

namespace {

void check_same_ring(const PolyRingPtr& a, const PolyRingPtr& b) {
    if (!a || !b || !a->same_ring(*b)) throw std::invalid_argument("StarPoly: ring mismatch");
}

}  // namespace

// ---------------------------------------------------------------------------
// StarPoly basics

StarPoly::StarPoly(PolyRingPtr ring, const ExactScalar& c) : ring_(std::move(ring)) {
    if (!c.is_zero()) terms_.emplace(Exponents(ring_->nvars(), 0), c);
}

StarPoly::StarPoly(PolyRingPtr ring, TermMap terms) : ring_(std::move(ring)) {
    for (auto& [e, c] : terms) {
        if (e.size() != ring_->nvars()) throw std::invalid_argument("StarPoly: bad exponent width");
        if (!c.is_zero()) terms_.emplace(e, c);
    }
    normalize_relation();
}

StarPoly StarPoly::variable(const PolyRingPtr& ring, size_t k, uint32_t power) {
    if (k >= ring->nvars()) throw std::out_of_range("StarPoly::variable");
    Exponents e(ring->nvars(), 0);
    e[k] = power;
    TermMap t;
    t.emplace(std::move(e), ExactScalar::one());
    return StarPoly(ring, std::move(t));
}

bool StarPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](uint32_t x) { return x == 0; });
}

ExactScalar StarPoly::constant_term() const {
    if (terms_.empty()) return ExactScalar::zero();
    Exponents z(ring_->nvars(), 0);
    auto it = terms_.find(z);
    return it == terms_.end() ? ExactScalar::zero() : it->second;
}

int64_t StarPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.rbegin()->first;  // graded order: last term has max degree
    int64_t d = 0;
    for (auto x : e) d += x;
    return d;
}

int64_t StarPoly::degree_in(size_t var) const {
    int64_t d = -1;
    for (const auto& [e, c] : terms_) {
        (void)c;
        d = std::max<int64_t>(d, e[var]);
    }
    return d;
}

StarPoly StarPoly::star() const {
    StarPoly out(ring_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.conj());
    return out;
}

StarPoly StarPoly::operator-() const {
    StarPoly out(ring_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

void StarPoly::insert_term(const Exponents& e, const ExactScalar& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

StarPoly& StarPoly::operator+=(const StarPoly& o) {
    check_same_ring(ring_, o.ring_);
    for (const auto& [e, c] : o.terms_) insert_term(e, c);
    return *this;
}

StarPoly& StarPoly::operator-=(const StarPoly& o) {
    check_same_ring(ring_, o.ring_);
    for (const auto& [e, c] : o.terms_) insert_term(e, -c);
    return *this;
}

StarPoly StarPoly::operator+(const StarPoly& o) const {
    StarPoly out = *this;
    out += o;
    return out;
}

StarPoly StarPoly::operator-(const StarPoly& o) const {
    StarPoly out = *this;
    out -= o;
    return out;
}

StarPoly StarPoly::operator*(const ExactScalar& c) const {
    StarPoly out(ring_);
    if (c.is_zero()) return out;
    for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
    return out;
}

bool StarPoly::operator==(const StarPoly& o) const {
    check_same_ring(ring_, o.ring_);
    if (terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [e, c] : terms_) {
        if (it->first != e || !(it->second == c)) return false;
        ++it;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Multiplication

TermMap term_mul_naive(const TermMap& a, const TermMap& b, size_t nvars) {
    TermMap out;
    Exponents e(nvars);
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            for (size_t v = 0; v < nvars; ++v) e[v] = ea[v] + eb[v];
            ExactScalar prod = ca * cb;
            auto it = out.find(e);
            if (it == out.end()) {
                if (!prod.is_zero()) out.emplace(e, prod);
            } else {
                it->second += prod;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

namespace {

// Integer polynomial in packed slot form: dense vector of mpz coefficients.
struct IntPoly {
    std::vector<mpz_class> coeff;  // indexed by packed exponent
    bool any = false;
};

struct PackedSplit {
    mpz_class pos, neg;  // packing of positive part and of negated negative part
};

size_t bits_of(const mpz_class& z) { return mpz_sizeinbase(z.get_mpz_t(), 2); }

PackedSplit pack(const IntPoly& p, size_t slots, size_t words_per_slot) {
    std::vector<uint64_t> bp(slots * words_per_slot, 0), bn(slots * words_per_slot, 0);
    bool anyp = false, anyn = false;
    for (size_t idx = 0; idx < p.coeff.size(); ++idx) {
        const mpz_class& c = p.coeff[idx];
        int s = sgn(c);
        if (s == 0) continue;
        size_t cnt = 0;
        if (s > 0) {
            mpz_export(bp.data() + idx * words_per_slot, &cnt, -1, 8, 0, 0, c.get_mpz_t());
            anyp = true;
        } else {
            mpz_class m = -c;
            mpz_export(bn.data() + idx * words_per_slot, &cnt, -1, 8, 0, 0, m.get_mpz_t());
            anyn = true;
        }
    }
    PackedSplit out;
    if (anyp) mpz_import(out.pos.get_mpz_t(), bp.size(), -1, 8, 0, 0, bp.data());
    if (anyn) mpz_import(out.neg.get_mpz_t(), bn.size(), -1, 8, 0, 0, bn.data());
    return out;
}

std::vector<mpz_class> unpack(const mpz_class& z, size_t slots, size_t words_per_slot) {
    std::vector<uint64_t> buf(slots * words_per_slot + words_per_slot, 0);
    size_t cnt = 0;
    if (z != 0) mpz_export(buf.data(), &cnt, -1, 8, 0, 0, z.get_mpz_t());
    std::vector<mpz_class> out(slots);
    for (size_t idx = 0; idx < slots; ++idx) {
        mpz_import(out[idx].get_mpz_t(), words_per_slot, -1, 8, 0, 0, buf.data() + idx * words_per_slot);
    }
    return out;
}

// Signed integer polynomial product through big-integer multiplication.
std::vector<mpz_class> int_poly_mul(const IntPoly& a, const IntPoly& b, size_t slots,
                                    size_t words_per_slot) {
    PackedSplit pa = pack(a, slots, words_per_slot);
    PackedSplit pb = pack(b, slots, words_per_slot);
    mpz_class plus = pa.pos * pb.pos + pa.neg * pb.neg;
    mpz_class minus = pa.pos * pb.neg + pa.neg * pb.pos;
    std::vector<mpz_class> up = unpack(plus, slots, words_per_slot);
    std::vector<mpz_class> un = unpack(minus, slots, words_per_slot);
    for (size_t i = 0; i < slots; ++i) up[i] -= un[i];
    return up;
}

}  // namespace

TermMap term_mul_kronecker(const TermMap& a, const TermMap& b, size_t nvars) {
    // Radix per variable covering all result exponents.
    std::vector<uint64_t> radix(nvars, 1), stride(nvars, 1);
    {
        std::vector<uint32_t> da(nvars, 0), db(nvars, 0);
        for (const auto& [e, c] : a) {
            (void)c;
            for (size_t v = 0; v < nvars; ++v) da[v] = std::max(da[v], e[v]);
        }
        for (const auto& [e, c] : b) {
            (void)c;
            for (size_t v = 0; v < nvars; ++v) db[v] = std::max(db[v], e[v]);
        }
        for (size_t v = 0; v < nvars; ++v) radix[v] = uint64_t(da[v]) + db[v] + 1;
    }
    uint64_t slots = 1;
    for (size_t v = 0; v < nvars; ++v) {
        stride[v] = slots;
        slots *= radix[v];
        if (slots > (uint64_t(1) << 24)) return term_mul_naive(a, b, nvars);  // grid too large
    }
    auto pack_index = [&](const Exponents& e) {
        uint64_t idx = 0;
        for (size_t v = 0; v < nvars; ++v) idx += stride[v] * e[v];
        return idx;
    };

    // Clear denominators; split into real/imaginary integer polynomials.
    struct Scaled {
        IntPoly re, im;
        mpz_class den{1};
        mpz_class maxabs{0};
    };
    auto scale = [&](const TermMap& t) {
        Scaled s;
        s.re.coeff.resize(slots);
        s.im.coeff.resize(slots);
        for (const auto& [e, c] : t) {
            (void)e;
            mpz_class dr = c.re().get_den(), di = c.im().get_den();
            mpz_class l;
            mpz_lcm(l.get_mpz_t(), dr.get_mpz_t(), di.get_mpz_t());
            mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), l.get_mpz_t());
        }
        for (const auto& [e, c] : t) {
            uint64_t idx = pack_index(e);
            mpq_class re = c.re() * s.den, im = c.im() * s.den;
            s.re.coeff[idx] = re.get_num();
            s.im.coeff[idx] = im.get_num();
            if (s.re.coeff[idx] != 0) s.re.any = true;
            if (s.im.coeff[idx] != 0) s.im.any = true;
            mpz_class ar = abs(s.re.coeff[idx]), ai = abs(s.im.coeff[idx]);
            if (ar > s.maxabs) s.maxabs = ar;
            if (ai > s.maxabs) s.maxabs = ai;
        }
        return s;
    };
    Scaled sa = scale(a), sb = scale(b);

    size_t minterms = std::min(a.size(), b.size());
    size_t bits = bits_of(sa.maxabs) + bits_of(sb.maxabs) + 64 - __builtin_clzll(minterms | 1) + 3;
    size_t words_per_slot = (bits + 63) / 64;

    // (ar + i ai)(br + i bi): up to four signed integer products; skip absent parts.
    std::vector<mpz_class> rr, ii, ri, ir;
    bool a_re = sa.re.any, a_im = sa.im.any, b_re = sb.re.any, b_im = sb.im.any;
    if (a_re && b_re) rr = int_poly_mul(sa.re, sb.re, slots, words_per_slot);
    if (a_im && b_im) ii = int_poly_mul(sa.im, sb.im, slots, words_per_slot);
    if (a_re && b_im) ri = int_poly_mul(sa.re, sb.im, slots, words_per_slot);
    if (a_im && b_re) ir = int_poly_mul(sa.im, sb.re, slots, words_per_slot);

    mpz_class den = sa.den * sb.den;
    TermMap out;
    Exponents e(nvars);
    for (uint64_t idx = 0; idx < slots; ++idx) {
        mpz_class cre = 0, cim = 0;
        if (!rr.empty()) cre += rr[idx];
        if (!ii.empty()) cre -= ii[idx];
        if (!ri.empty()) cim += ri[idx];
        if (!ir.empty()) cim += ir[idx];
        if (cre == 0 && cim == 0) continue;
        uint64_t rem = idx;
        for (size_t v = 0; v < nvars; ++v) {
            e[v] = static_cast<uint32_t>(rem % radix[v]);
            rem /= radix[v];
        }
        out.emplace(e, ExactScalar(mpq_class(cre, den), mpq_class(cim, den)));
    }
    return out;
}

StarPoly StarPoly::operator*(const StarPoly& o) const {
    check_same_ring(ring_, o.ring_);
    StarPoly out(ring_);
    if (terms_.empty() || o.terms_.empty()) return out;
    // Kronecker pays off once the term-pair count is large.
    bool big = terms_.size() * o.terms_.size() > 4096 && std::min(terms_.size(), o.terms_.size()) > 8;
    out.terms_ = big ? term_mul_kronecker(terms_, o.terms_, ring_->nvars())
                     : term_mul_naive(terms_, o.terms_, ring_->nvars());
    out.normalize_relation();
    return out;
}

StarPoly StarPoly::pow(uint64_t e) const {
    StarPoly acc(ring_, ExactScalar::one());
    StarPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = (e >>= 1) ? base * base : base;
    }
    return acc;
}

void StarPoly::normalize_relation() {
    if (!ring_ || !ring_->has_relation()) return;
    size_t rv = ring_->relation_var();
    const TermMap& rep = ring_->relation_replacement();
    for (;;) {
        TermMap pending;
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->first[rv] >= 2) {
                pending.emplace(it->first, it->second);
                it = terms_.erase(it);
            } else {
                ++it;
            }
        }
        if (pending.empty()) return;
        for (const auto& [e, c] : pending) {
            Exponents base = e;
            base[rv] -= 2;
            for (const auto& [re, rc] : rep) {
                Exponents ne = base;
                for (size_t v = 0; v < ne.size(); ++v) ne[v] += re[v];
                insert_term(ne, c * rc);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Evaluation and substitution

ExactScalar StarPoly::eval(const std::vector<ExactScalar>& point) const {
    if (point.size() != ring_->nvars()) throw std::invalid_argument("StarPoly::eval: wrong point size");
    ExactScalar acc;
    for (const auto& [e, c] : terms_) {
        ExactScalar term = c;
        for (size_t v = 0; v < e.size(); ++v) {
            ExactScalar p = point[v];
            uint32_t k = e[v];
            while (k) {
                if (k & 1) term *= p;
                k >>= 1;
                if (k) p *= p;
            }
        }
        acc += term;
    }
    return acc;
}

StarPoly StarPoly::substitute(const std::vector<StarPoly>& images) const {
    if (images.size() != ring_->nvars()) throw std::invalid_argument("StarPoly::substitute: wrong image count");
    PolyRingPtr target = images.empty() ? ring_ : images[0].ring();
    StarPoly acc(target);
    for (const auto& [e, c] : terms_) {
        StarPoly term(target, c);
        for (size_t v = 0; v < e.size(); ++v)
            if (e[v] > 0) term = term * images[v].pow(e[v]);
        acc += term;
    }
    return acc;
}

std::optional<StarPoly> StarPoly::divide_exact(const StarPoly& divisor) const {
    check_same_ring(ring_, divisor.ring_);
    if (ring_->has_relation()) return std::nullopt;
    if (divisor.is_zero()) return std::nullopt;
    StarPoly rem = *this;
    StarPoly quot(ring_);
    const auto& [eg, cg] = *divisor.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& [ef, cf] = *rem.terms_.rbegin();
        Exponents q(ef.size());
        for (size_t v = 0; v < ef.size(); ++v) {
            if (ef[v] < eg[v]) return std::nullopt;
            q[v] = ef[v] - eg[v];
        }
        TermMap qt;
        qt.emplace(q, cf / cg);
        StarPoly qterm(ring_, std::move(qt));
        quot += qterm;
        rem -= qterm * divisor;
    }
    return quot;
}

std::optional<StarPoly> sqrt_exact(const StarPoly& p) {
    if (p.is_zero()) return p;
    const PolyRingPtr& R = p.ring();
    if (R->has_relation()) return std::nullopt;

    auto lt_of = [](const StarPoly& q) { return *q.terms().rbegin(); };
    auto [le, lc] = lt_of(p);
    if (!lc.is_real() || lc.re() <= 0) return std::nullopt;
    for (auto e : le)
        if (e % 2) return std::nullopt;
    mpq_class c = lc.re();
    if (!mpz_perfect_square_p(c.get_num().get_mpz_t()) || !mpz_perfect_square_p(c.get_den().get_mpz_t()))
        return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), c.get_den().get_mpz_t());

    Exponents half = le;
    for (auto& e : half) e /= 2;
    TermMap t0;
    t0.emplace(half, ExactScalar(mpq_class(sn, sd)));
    StarPoly s(R, std::move(t0));

    GradedLexLess less;
    Exponents prev_lt = le;
    for (size_t guard = 0; guard < 4 * p.term_count() * p.term_count() + 64; ++guard) {
        StarPoly r = p - s * s;
        if (r.is_zero()) return s;
        auto [re, rc] = lt_of(r);
        if (guard > 0 && !less(re, prev_lt)) return std::nullopt;
        if (guard == 0 && !less(re, prev_lt)) return std::nullopt;  // leading square must cancel
        prev_lt = re;
        auto [se, sc] = lt_of(s);
        Exponents qe(re.size());
        for (size_t v = 0; v < re.size(); ++v) {
            if (re[v] < se[v]) return std::nullopt;
            qe[v] = re[v] - se[v];
        }
        TermMap qt;
        qt.emplace(std::move(qe), rc / (ExactScalar(2) * sc));
        s += StarPoly(R, std::move(qt));
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

std::string monomial_str(const Exponents& e, const PolyRing& ring) {
    std::string out;
    for (size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += ring.var_name(v);
        if (e[v] > 1) out += "^" + std::to_string(e[v]);
    }
    return out;
}

std::string coeff_str(const ExactScalar& c, bool has_mono) {
    if (!has_mono) return c.str();
    if (c.is_one()) return "";
    if (c == -ExactScalar::one()) return "-";
    std::string s = c.str();
    bool complex_both = c.re() != 0 && c.im() != 0;
    if (complex_both) return "(" + s + ")*";
    return s + "*";
}

}  // namespace

std::string StarPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    // Print highest-degree terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono = monomial_str(e, *ring_);
        ExactScalar cc = c;
        if (first) {
            first = false;
        } else if (cc.prints_negative()) {
            out += " - ";
            cc = -cc;
        } else {
            out += " + ";
        }
        if (mono.empty())
            out += cc.str();
        else
            out += coeff_str(cc, true) + mono;
    }
    return out;
}

namespace {

struct Parser {
    const PolyRingPtr& ring;
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    StarPoly parse_expr() {
        skip_ws();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        StarPoly acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            if (eat('+')) {
                acc += parse_term();
            } else if (eat('-')) {
                acc -= parse_term();
            } else {
                break;
            }
        }
        return acc;
    }

    StarPoly parse_term() {
        StarPoly acc = parse_factor();
        for (;;) {
            skip_ws();
            if (eat('*'))
                acc = acc * parse_factor();
            else
                break;
        }
        return acc;
    }

    StarPoly parse_factor() {
        skip_ws();
        if (pos >= s.size()) throw std::invalid_argument("StarPoly::parse: unexpected end");
        if (eat('(')) {
            StarPoly inner = parse_expr();
            if (!eat(')')) throw std::invalid_argument("StarPoly::parse: missing ')'");
            return maybe_power(inner);
        }
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
            bool imag = pos < s.size() && s[pos] == 'i';
            mpq_class q(s.substr(start, pos - start));
            q.canonicalize();
            if (imag) {
                ++pos;
                return maybe_power(StarPoly(ring, ExactScalar(mpq_class(0), q)));
            }
            return maybe_power(StarPoly(ring, ExactScalar(q)));
        }
        if (c == 'i' && !is_name_char_at(pos + 1)) {
            ++pos;
            return maybe_power(StarPoly(ring, ExactScalar::i()));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (is_name_char_at(pos)) ++pos;
            std::string name = s.substr(start, pos - start);
            auto idx = ring->var_index(name);
            if (!idx) throw std::invalid_argument("StarPoly::parse: unknown variable '" + name + "'");
            return maybe_power(StarPoly::variable(ring, *idx));
        }
        throw std::invalid_argument("StarPoly::parse: unexpected character '" + std::string(1, c) + "'");
    }

    bool is_name_char_at(size_t p) const {
        return p < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[p])) || s[p] == '_');
    }

    StarPoly maybe_power(StarPoly base) {
        skip_ws();
        if (eat('^')) {
            skip_ws();
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) throw std::invalid_argument("StarPoly::parse: missing exponent");
            return base.pow(std::stoull(s.substr(start, pos - start)));
        }
        return base;
    }
};

}  // namespace

StarPoly StarPoly::parse(const PolyRingPtr& ring, const std::string& text) {
    Parser p{ring, text};
    StarPoly out = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw std::invalid_argument("StarPoly::parse: trailing input in '" + text + "'");
    return out;
}

}  // namespace starcert
