#pragma once

#include <complex>
#include <compare>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace nctorus {

/// Exact complex number a + b*i with a, b rational.
///
/// mpq_class keeps both parts canonical (lowest terms, positive denominator),
/// so structural equality is value equality.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}
    GaussianRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im))
    {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return {0, 1}; }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o)
    {
        mpq_class re = re_ * o.re_ - im_ * o.im_;
        mpq_class im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    /// "3", "-1/2", "i", "-2/3i", "(1/2-i)". Complex values with both parts
    /// nonzero are parenthesized so they can be juxtaposed with other factors.
    std::string str() const
    {
        if (sgn(im_) == 0)
            return re_.get_str();
        std::string im_part;
        if (im_ == 1)
            im_part = "i";
        else if (im_ == -1)
            im_part = "-i";
        else
            im_part = im_.get_str() + "i";
        if (sgn(re_) == 0)
            return im_part;
        return "(" + re_.get_str() + (sgn(im_) > 0 ? "+" : "") + im_part + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.str(); }

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

}  // namespace nctorus
