#pragma once

#include <slporbit/rational.hpp>

#include <string>

namespace slporbit {

// Element of Q(i).
struct Gaussian {
    Rational re, im;

    Gaussian() : re(0), im(0) {}
    Gaussian(long v) : re(make_rational(v)), im(0) {}  // NOLINT(google-explicit-constructor)
    Gaussian(Rational r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Gaussian unit_i() { return Gaussian(Rational(0), Rational(1)); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    Gaussian operator-() const { return Gaussian(-re, -im); }
    Gaussian& operator+=(const Gaussian& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Gaussian& operator-=(const Gaussian& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        return Gaussian(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }

    Gaussian conj() const { return Gaussian(re, -im); }

    Gaussian inverse() const {
        Rational n = re * re + im * im;
        if (sgn(n) == 0) throw std::domain_error("inverse of zero Gaussian rational");
        return Gaussian(re / n, -im / n);
    }
    friend Gaussian operator/(const Gaussian& a, const Gaussian& b) { return a * b.inverse(); }

    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

    // "0", "3/2", "i", "-i", "2*i", "1+2*i", "1-1/2*i"
    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        if (sgn(re) != 0) s = to_string(re);
        if (sgn(im) != 0) {
            std::string is;
            if (im == 1)
                is = "i";
            else if (im == -1)
                is = "-i";
            else
                is = to_string(im) + "*i";
            if (!s.empty() && is[0] != '-') s += "+";
            s += is;
        }
        return s;
    }
};

}  // namespace slporbit
