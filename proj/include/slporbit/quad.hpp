#pragma once

#include <slporbit/rational.hpp>

#include <optional>
#include <string>

namespace slporbit {

// Element a + b*sqrt(d) of Q(sqrt(d)); d a squarefree integer, possibly negative.
// Values with b == 0 are compatible with any d; mixing two genuinely different
// extensions is an error.
class Quad {
  public:
    Quad() : a_(0), b_(0), d_(0) {}
    Quad(long v) : a_(make_rational(v)), b_(0), d_(0) {}     // NOLINT(google-explicit-constructor)
    Quad(Rational r) : a_(std::move(r)), b_(0), d_(0) {}     // NOLINT(google-explicit-constructor)
    Quad(Rational a, Rational b, Integer d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
        normalize();
    }

    static Quad sqrt_of(const Integer& d) { return Quad(Rational(0), Rational(1), d); }

    const Rational& rat_part() const { return a_; }
    const Rational& irr_part() const { return b_; }
    const Integer& disc() const { return d_; }
    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    Quad operator-() const { return Quad(-a_, -b_, d_); }
    friend Quad operator+(const Quad& x, const Quad& y) {
        Integer d = join(x, y);
        return Quad(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend Quad operator-(const Quad& x, const Quad& y) { return x + (-y); }
    friend Quad operator*(const Quad& x, const Quad& y) {
        Integer d = join(x, y);
        return Quad(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d), x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    Quad& operator+=(const Quad& o) { return *this = *this + o; }
    Quad& operator-=(const Quad& o) { return *this = *this - o; }
    Quad& operator*=(const Quad& o) { return *this = *this * o; }

    Quad inverse() const {
        Rational n = a_ * a_ - b_ * b_ * Rational(d_);
        if (sgn(n) == 0) throw std::domain_error("inverse of zero in Q(sqrt d)");
        return Quad(a_ / n, -b_ / n, d_);
    }
    friend Quad operator/(const Quad& x, const Quad& y) { return x * y.inverse(); }

    friend bool operator==(const Quad& x, const Quad& y) {
        if (x.a_ != y.a_ || x.b_ != y.b_) return false;
        return sgn(x.b_) == 0 || x.d_ == y.d_;
    }
    friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }

    // Square root within the same field, when it exists.
    std::optional<Quad> sqrt_in_field() const {
        if (is_zero()) return Quad();
        if (is_rational()) {
            if (auto r = rational_sqrt(a_)) return Quad(*r);
            if (d_ != 0) {
                // a = d*s^2  =>  sqrt(a) = s*sqrt(d)
                if (auto s = rational_sqrt(a_ / Rational(d_))) return Quad(Rational(0), *s, d_);
            }
            return std::nullopt;
        }
        // (p + q sqrt(d))^2 = a + b sqrt(d):  p^2 + q^2 d = a, 2pq = b.
        // p^2 is a root of z^2 - a z + b^2 d / 4 = 0.
        Rational disc = a_ * a_ - b_ * b_ * Rational(d_);
        auto sd = rational_sqrt(disc);
        if (!sd) return std::nullopt;
        for (int sign : {+1, -1}) {
            Rational z = (a_ + Rational(sign) * (*sd)) / 2;
            if (auto p = rational_sqrt(z)) {
                if (sgn(*p) == 0) continue;
                Rational q = b_ / (2 * (*p));
                Quad cand(*p, q, d_);
                if (cand * cand == *this) return cand;
            }
        }
        return std::nullopt;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        if (sgn(a_) != 0) s = to_string(a_);
        if (sgn(b_) != 0) {
            std::string root = "sqrt(" + d_.get_str() + ")";
            std::string bs;
            if (b_ == 1)
                bs = root;
            else if (b_ == -1)
                bs = "-" + root;
            else
                bs = to_string(b_) + "*" + root;
            if (!s.empty() && bs[0] != '-') s += "+";
            s += bs;
        }
        return s;
    }

  private:
    void normalize() {
        if (sgn(b_) == 0) d_ = 0;
    }
    static Integer join(const Quad& x, const Quad& y) {
        if (sgn(x.b_) == 0) return y.d_;
        if (sgn(y.b_) == 0) return x.d_;
        if (x.d_ != y.d_) throw std::domain_error("mixing distinct quadratic extensions");
        return x.d_;
    }

    Rational a_, b_;
    Integer d_;
};

}  // namespace slporbit
