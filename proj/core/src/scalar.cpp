#include "starcert/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace starcert {

ExactScalar ExactScalar::rational(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return ExactScalar(q);
}

ExactScalar ExactScalar::inverse() const {
    if (is_zero()) throw std::domain_error("ExactScalar: division by zero");
    mpq_class n = norm();
    return ExactScalar(re_ / n, -im_ / n);
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const { return *this * o.inverse(); }

namespace {

std::string rat_str(const mpq_class& q) { return q.get_str(); }

// Parses an optionally signed rational "a" or "a/b" starting at pos.
bool parse_rat(const std::string& s, size_t& pos, mpq_class& out) {
    size_t start = pos;
    bool negative = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        negative = s[pos] == '-';
        ++pos;
    }
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) {
        pos = start;
        return false;
    }
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t den = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == den) {
            pos = start;
            return false;
        }
    }
    out = mpq_class(s.substr(digits, pos - digits));
    out.canonicalize();
    if (negative) out = -out;
    return true;
}

}  // namespace

std::string ExactScalar::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (re_ != 0) out += rat_str(re_);
    if (im_ != 0) {
        if (re_ != 0 && im_ > 0) out += "+";
        if (im_ == 1)
            out += "i";
        else if (im_ == -1)
            out += "-i";
        else
            out += rat_str(im_) + "i";
    }
    return out;
}

std::optional<ExactScalar> ExactScalar::parse(const std::string& text) {
    size_t pos = 0;
    mpq_class re(0), im(0);
    bool any = false;
    while (pos < text.size()) {
        size_t save = pos;
        mpq_class q;
        if (parse_rat(text, pos, q)) {
            if (pos < text.size() && text[pos] == 'i') {
                ++pos;
                im += q;
            } else {
                re += q;
            }
            any = true;
        } else {
            // bare "i", "+i", "-i"
            int sign = 1;
            if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
                if (text[pos] == '-') sign = -1;
                ++pos;
            }
            if (pos < text.size() && text[pos] == 'i') {
                ++pos;
                im += sign;
                any = true;
            } else {
                return std::nullopt;
            }
        }
        (void)save;
    }
    if (!any) return std::nullopt;
    return ExactScalar(re, im);
}

}  // namespace starcert
