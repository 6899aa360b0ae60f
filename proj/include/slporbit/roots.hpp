#pragma once

#include <slporbit/matrix.hpp>
#include <slporbit/rational.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace slporbit {

enum class RootKind {
    EMinusE,  // e_j - e_i, 1 <= i < j <= n  (long negative variant: sign)
    EPlusE,   // e_j + e_i, 1 <= i < j <= n
    TwoE,     // 2 e_i,     1 <= i <= n
};

struct RootId {
    RootKind kind;
    int i = 0, j = 0;    // TwoE uses i only
    bool negative = false;

    static RootId e_minus_e(int i, int j) { return {RootKind::EMinusE, i, j, false}; }
    static RootId e_plus_e(int i, int j) { return {RootKind::EPlusE, i, j, false}; }
    static RootId two_e(int i) { return {RootKind::TwoE, i, i, false}; }
    RootId negated() const { return {kind, i, j, !negative}; }

    friend bool operator==(const RootId& a, const RootId& b) {
        return a.kind == b.kind && a.i == b.i && a.j == b.j && a.negative == b.negative;
    }
    friend bool operator<(const RootId& a, const RootId& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.i != b.i) return a.i < b.i;
        if (a.j != b.j) return a.j < b.j;
        return a.negative < b.negative;
    }
    std::string str() const;
};

std::vector<RootId> positive_roots(int n);

void check_root(const RootId& r, int n);

// Root vectors in the 2n x 2n matrix realization:
//   X_{e_j-e_i}  = E_{n+1-j,n+1-i} - E_{2n+1-i,2n+1-j}
//   X_{e_j+e_i}  = E_{n+1-i,2n+1-j} + E_{n+1-j,2n+1-i}
//   X_{-e_j-e_i} = E_{2n+1-j,n+1-i} + E_{2n+1-i,n+1-j}
//   X_{2e_i}     = E_{n+1-i,2n+1-i}
//   X_{-2e_i}    = E_{2n+1-i,n+1-i}
// The negative of e_j - e_i is realized as the transpose-style swap
// E_{n+1-i,n+1-j} - E_{2n+1-j,2n+1-i}.
template <class F>
Matrix<F> root_vector(const RootId& r, int n) {
    check_root(r, n);
    Matrix<F> m(2 * n, 2 * n);
    auto E = [&](int a, int b, F v) { m.at(a - 1, b - 1) = v; };
    const int i = r.i, j = r.j;
    switch (r.kind) {
        case RootKind::EMinusE:
            if (!r.negative) {
                E(n + 1 - j, n + 1 - i, F(1));
                E(2 * n + 1 - i, 2 * n + 1 - j, F(-1));
            } else {
                E(n + 1 - i, n + 1 - j, F(1));
                E(2 * n + 1 - j, 2 * n + 1 - i, F(-1));
            }
            break;
        case RootKind::EPlusE:
            if (!r.negative) {
                E(n + 1 - i, 2 * n + 1 - j, F(1));
                E(n + 1 - j, 2 * n + 1 - i, F(1));
            } else {
                E(2 * n + 1 - j, n + 1 - i, F(1));
                E(2 * n + 1 - i, n + 1 - j, F(1));
            }
            break;
        case RootKind::TwoE:
            if (!r.negative)
                E(n + 1 - i, 2 * n + 1 - i, F(1));
            else
                E(2 * n + 1 - i, n + 1 - i, F(1));
            break;
    }
    return m;
}

// T_i(a): diagonal, a at slot n+1-i, a^{-1} at slot 2n+1-i.
template <class F>
Matrix<F> torus_gen(int i, const F& a, int n) {
    if (i < 1 || i > n) throw std::invalid_argument("torus index out of range");
    if (a == F(0)) throw std::invalid_argument("torus parameter must be nonzero");
    Matrix<F> m = Matrix<F>::identity(2 * n);
    m.at(n - i, n - i) = a;                      // slot n+1-i, 0-based
    m.at(2 * n - i, 2 * n - i) = F(1) / a;       // slot 2n+1-i
    return m;
}

// U_alpha(a) = I + a X_alpha, alpha a positive root.
template <class F>
Matrix<F> unipotent_gen(const RootId& r, const F& a, int n) {
    if (r.negative) throw std::invalid_argument("unipotent generator needs a positive root");
    Matrix<F> m = Matrix<F>::identity(2 * n);
    return m + a * root_vector<F>(r, n);
}

// All our root vectors square to zero, so U_alpha(a)^{-1} = I - a X_alpha.
template <class F>
Matrix<F> unipotent_gen_inverse(const RootId& r, const F& a, int n) {
    Matrix<F> m = Matrix<F>::identity(2 * n);
    return m - a * root_vector<F>(r, n);
}

// The symplectic form under which all root vectors above land in sp_2n:
// J = [[0, I_n], [-I_n, 0]] in this slot convention (pinned by a test).
Matrix<Rational> symplectic_form(int n);

// Nilradical = { [[A, B], [0, -A^T]] : A strictly upper triangular, B = B^T }.
bool in_nilradical(const Matrix<Rational>& x, int n);

// Order-reversing slot permutation that makes every nilradical element
// strictly upper triangular and every Borel element upper triangular:
// abstract position p in 1..2n  ->  matrix slot p (p <= n) or 3n+1-p (p > n).
int abstract_to_slot(int p, int n);

template <class F>
Matrix<F> to_flag_basis(const Matrix<F>& x, int n) {
    Matrix<F> r(2 * n, 2 * n);
    for (int p = 1; p <= 2 * n; ++p)
        for (int q = 1; q <= 2 * n; ++q)
            r.at(p - 1, q - 1) = x.at(abstract_to_slot(p, n) - 1, abstract_to_slot(q, n) - 1);
    return r;
}

}  // namespace slporbit
