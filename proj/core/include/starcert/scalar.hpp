#ifndef STARCERT_SCALAR_HPP
#define STARCERT_SCALAR_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace starcert {

/// Gaussian rational q1 + i*q2, the coefficient field of every exact ring in
/// this library. Conjugation flips the sign of the imaginary part; complex
/// absolute values never appear, only z*conj(z).
class ExactScalar {
public:
    ExactScalar() : re_(0), im_(0) {}
    ExactScalar(long n) : re_(n), im_(0) {}
    ExactScalar(const mpq_class& re) : re_(re), im_(0) { canon(); }
    ExactScalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) { canon(); }

    static ExactScalar zero() { return ExactScalar(); }
    static ExactScalar one() { return ExactScalar(1); }
    static ExactScalar i() { return ExactScalar(mpq_class(0), mpq_class(1)); }
    static ExactScalar rational(long num, long den);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    ExactScalar conj() const { return ExactScalar(re_, -im_); }
    ExactScalar star() const { return conj(); }
    /// z * conj(z); real and nonnegative.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    ExactScalar operator-() const { return ExactScalar(-re_, -im_); }
    ExactScalar operator+(const ExactScalar& o) const { return ExactScalar(re_ + o.re_, im_ + o.im_); }
    ExactScalar operator-(const ExactScalar& o) const { return ExactScalar(re_ - o.re_, im_ - o.im_); }
    ExactScalar operator*(const ExactScalar& o) const {
        return ExactScalar(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    ExactScalar operator/(const ExactScalar& o) const;
    ExactScalar inverse() const;

    ExactScalar& operator+=(const ExactScalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    ExactScalar& operator-=(const ExactScalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }

    bool operator==(const ExactScalar& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const ExactScalar& o) const { return !(*this == o); }

    /// Sign convention used when pretty-printing sums: a scalar leads with '-'
    /// iff its real part is negative, or it is purely imaginary with negative
    /// imaginary part.
    bool prints_negative() const { return re_ < 0 || (re_ == 0 && im_ < 0); }

    /// Canonical text form: "3", "-3/2", "i", "-2i", "3/2+1/2i", "1-i".
    std::string str() const;
    static std::optional<ExactScalar> parse(const std::string& text);

    double to_double_re() const { return re_.get_d(); }
    double to_double_im() const { return im_.get_d(); }

private:
    void canon() {
        re_.canonicalize();
        im_.canonicalize();
    }
    mpq_class re_, im_;
};

inline ExactScalar operator*(long n, const ExactScalar& z) { return ExactScalar(n) * z; }

}  // namespace starcert

#endif
