#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace cds {

// Exact element of Q(i). Plain rationals embed with im = 0; mpq_class keeps
// numerator/denominator canonical (coprime, positive denominator).
struct GaussRat {
    mpq_class re;
    mpq_class im;

    GaussRat() = default;
    GaussRat(long v) : re(v) {}
    GaussRat(const mpq_class& r) : re(r) { re.canonicalize(); }
    GaussRat(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {
        re.canonicalize();
        im.canonicalize();
    }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    GaussRat conj() const { return {re, -im}; }
    // |v|^2, a non-negative rational; zero only for v = 0.
    mpq_class norm() const { return re * re + im * im; }

    GaussRat operator-() const { return {-re, -im}; }
    GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
    GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
    GaussRat operator*(const GaussRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRat operator/(const GaussRat& o) const {
        mpq_class n = o.norm();
        if (sgn(n) == 0) throw std::domain_error("GaussRat: division by zero");
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
    GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }
    GaussRat& operator/=(const GaussRat& o) { return *this = *this / o; }

    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }

    GaussRat inv() const { return GaussRat(1) / *this; }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        if (sgn(re) != 0) s = re.get_str();
        if (sgn(im) != 0) {
            if (!s.empty() && sgn(im) > 0) s += "+";
            if (im == 1) s += "i";
            else if (im == -1) s += "-i";
            else s += im.get_str() + "i";
        }
        return s;
    }

    static GaussRat i() { return {mpq_class(0), mpq_class(1)}; }
};

// Total order used only for canonical sorting/printing, not field structure.
inline int cmp_gauss(const GaussRat& a, const GaussRat& b) {
    int c = cmp(a.re, b.re);
    if (c != 0) return c;
    return cmp(a.im, b.im);
}

}  // namespace cds
