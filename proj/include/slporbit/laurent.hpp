#pragma once

#include <slporbit/gaussian.hpp>

#include <map>
#include <string>

namespace slporbit {

// Laurent polynomial in one formal parameter m, coefficients in Q(i).
class Laurent {
  public:
    Laurent() = default;
    Laurent(long v) { set(0, Gaussian(v)); }              // NOLINT(google-explicit-constructor)
    Laurent(const Gaussian& c) { set(0, c); }             // NOLINT(google-explicit-constructor)
    Laurent(const Rational& c) { set(0, Gaussian(c)); }   // NOLINT(google-explicit-constructor)

    static Laurent monomial(Gaussian c, int exp) {
        Laurent p;
        p.set(exp, std::move(c));
        return p;
    }
    static Laurent var() { return monomial(Gaussian(1), 1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }

    const std::map<int, Gaussian>& terms() const { return terms_; }
    Gaussian coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Gaussian() : it->second;
    }
    Gaussian constant_term() const { return coeff(0); }
    int max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
    bool has_positive_exp() const { return !terms_.empty() && terms_.rbegin()->first > 0; }

    Laurent operator-() const {
        Laurent r;
        for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    Laurent& operator+=(const Laurent& o) {
        for (auto& [e, c] : o.terms_) set(e, coeff(e) + c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (auto& [e, c] : o.terms_) set(e, coeff(e) - c);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) r.set(ea + eb, r.coeff(ea + eb) + ca * cb);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    // Only monomials are invertible in the Laurent ring.
    Laurent inverse_monomial() const {
        if (!is_monomial()) throw std::domain_error("Laurent inverse of non-monomial");
        auto& [e, c] = *terms_.begin();
        return monomial(c.inverse(), -e);
    }
    friend Laurent operator/(const Laurent& a, const Laurent& b) {
        return a * b.inverse_monomial();
    }

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    // "m", "m^-1", "-i*m", "1/2", "m^2+1"
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string t = term_str(it->first, it->second);
            if (!s.empty() && t[0] != '-') s += "+";
            s += t;
        }
        return s;
    }

  private:
    void set(int exp, Gaussian c) {
        if (c.is_zero())
            terms_.erase(exp);
        else
            terms_[exp] = std::move(c);
    }

    static std::string term_str(int exp, const Gaussian& c) {
        std::string pow;
        if (exp == 1)
            pow = "m";
        else if (exp != 0)
            pow = "m^" + std::to_string(exp);
        if (pow.empty()) return c.str();
        if (c == Gaussian(1)) return pow;
        if (c == Gaussian(-1)) return "-" + pow;
        std::string cs = c.str();
        if (!c.is_real() && sgn(c.re) != 0) cs = "(" + cs + ")";
        return cs + "*" + pow;
    }

    std::map<int, Gaussian> terms_;
};

}  // namespace slporbit
