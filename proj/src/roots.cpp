#include <slporbit/roots.hpp>

#include <sstream>

namespace slporbit {

std::string RootId::str() const {
    std::ostringstream os;
    if (negative) os << "-(";
    switch (kind) {
        case RootKind::EMinusE:
            os << "e" << j << "-e" << i;
            break;
        case RootKind::EPlusE:
            os << "e" << j << "+e" << i;
            break;
        case RootKind::TwoE:
            os << "2e" << i;
            break;
    }
    if (negative) os << ")";
    return os.str();
}

std::vector<RootId> positive_roots(int n) {
    std::vector<RootId> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            out.push_back(RootId::e_minus_e(i, j));
            out.push_back(RootId::e_plus_e(i, j));
        }
    for (int i = 1; i <= n; ++i) out.push_back(RootId::two_e(i));
    return out;
}

void check_root(const RootId& r, int n) {
    switch (r.kind) {
        case RootKind::EMinusE:
        case RootKind::EPlusE:
            if (!(1 <= r.i && r.i < r.j && r.j <= n))
                throw std::invalid_argument("root indices need 1 <= i < j <= n");
            break;
        case RootKind::TwoE:
            if (!(1 <= r.i && r.i <= n))
                throw std::invalid_argument("root index needs 1 <= i <= n");
            break;
    }
}

Matrix<Rational> symplectic_form(int n) {
    Matrix<Rational> j(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        j.at(i, n + i) = Rational(1);
        j.at(n + i, i) = Rational(-1);
    }
    return j;
}

bool in_nilradical(const Matrix<Rational>& x, int n) {
    if (x.rows() != static_cast<std::size_t>(2 * n) || x.cols() != static_cast<std::size_t>(2 * n))
        return false;
    // lower-left block zero
    for (int r = n; r < 2 * n; ++r)
        for (int c = 0; c < n; ++c)
            if (!(x.at(r, c) == Rational(0))) return false;
    // A strictly upper triangular
    for (int r = 0; r < n; ++r)
        for (int c = 0; c <= r; ++c)
            if (!(x.at(r, c) == Rational(0))) return false;
    // D = -A^T
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (!(x.at(n + r, n + c) == -x.at(c, r))) return false;
    // B symmetric
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (!(x.at(r, n + c) == x.at(c, n + r))) return false;
    return true;
}

int abstract_to_slot(int p, int n) {
    if (p < 1 || p > 2 * n) throw std::invalid_argument("abstract index out of range");
    return p <= n ? p : 3 * n + 1 - p;
}

}  // namespace slporbit
