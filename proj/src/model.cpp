#include <slporbit/model.hpp>

#include <slporbit/rank_order.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace slporbit {

Matrix<Rational> y_embedding(const SymmetricLinkPattern& l) {
    return to_flag_basis(x_of(l), l.half_size());
}

namespace {

void check_square_zero_nilradical(const Matrix<Rational>& x, int n) {
    if (!in_nilradical(x, n))
        throw std::domain_error("matrix is not in the nilradical of sp_2n");
    if (!(x * x).is_zero()) throw std::domain_error("matrix does not square to zero");
}

int half_size_of(const Matrix<Rational>& x) {
    if (x.rows() != x.cols() || x.rows() == 0 || x.rows() % 2 != 0)
        throw std::domain_error("expected a 2n x 2n matrix");
    return static_cast<int>(x.rows() / 2);
}

}  // namespace

SymmetricLinkPattern classify(const Matrix<Rational>& x) {
    int n = half_size_of(x);
    check_square_zero_nilradical(x, n);
    Matrix<Rational> flag = to_flag_basis(x, n);

    // Interval ranks are Borel-conjugation invariants and reproduce R_L.
    std::vector<std::vector<int>> r(2 * n + 2, std::vector<int>(2 * n + 2, 0));
    for (int a = 1; a <= 2 * n; ++a)
        for (int b = a + 1; b <= 2 * n; ++b)
            r[a][b] = static_cast<int>(rank(flag.block(a - 1, b, a - 1, b)));

    std::vector<Arc> arcs;
    for (int a = 1; a <= 2 * n; ++a)
        for (int b = a + 1; b <= 2 * n; ++b) {
            int m = r[a][b] - r[a + 1][b] - r[a][b - 1] + r[a + 1][b - 1];
            if (m == 1)
                arcs.emplace_back(from_matrix_index(a, n), from_matrix_index(b, n));
            else if (m != 0)
                throw std::logic_error("interval rank table is not a valid rank matrix");
        }
    SymmetricLinkPattern l(n, std::move(arcs));
    // The rank table of the reconstruction must reproduce the input's table.
    RankMatrix rm = rank_matrix(l);
    for (int a = 1; a <= 2 * n; ++a)
        for (int b = a + 1; b <= 2 * n; ++b)
            if (rm.at(a, b) != r[a][b])
                throw std::logic_error("rank table reconstruction mismatch");
    return l;
}

namespace {

struct RationalSqrt {
    std::optional<Rational> operator()(const Rational& v) const {
        if (auto r = rational_sqrt(v)) return *r;
        throw NeedsIrrationalSqrt(v);
    }
};

// Square roots inside a fixed Q(sqrt(d)); rational values may pull in sqrt(d).
struct QuadSqrt {
    Integer d;
    std::optional<Quad> operator()(const Quad& v) const {
        if (v.is_rational()) {
            if (auto r = rational_sqrt(v.rat_part())) return Quad(*r);
            if (auto s = rational_sqrt(v.rat_part() / Rational(d)))
                return Quad(Rational(0), *s, d);
            throw std::domain_error("normalization requires a second quadratic extension");
        }
        auto r = v.sqrt_in_field();
        if (!r) throw std::domain_error("normalization requires a second quadratic extension");
        return r;
    }
};

// Coefficients of X_{(i,n)}, X_{(-i,n)}, X_{(-n,n)} read off the first row.
template <class F>
F read_f(const Matrix<F>& y, int n, int i) {
    return y.at(0, n - i);
}
template <class F>
F read_g(const Matrix<F>& y, int n, int i) {
    return y.at(0, 2 * n - i);
}
template <class F>
F read_h(const Matrix<F>& y, int n) {
    return y.at(0, n);
}

template <class F>
struct Reduction {
    Matrix<F> x, witness;
    int n;

    void apply(const Matrix<F>& g, const Matrix<F>& ginv) {
        x = g * x * ginv;
        witness = g * witness;
    }
    void apply_unipotent(const RootId& root, const F& coeff) {
        if (coeff == F(0)) return;
        apply(unipotent_gen<F>(root, coeff, n), unipotent_gen_inverse<F>(root, coeff, n));
    }
    void apply_torus(int i, const F& a) {
        Matrix<F> t = torus_gen<F>(i, a, n);
        apply(t, torus_gen<F>(i, F(1) / a, n));
    }
};

// Projection: drop the +-e_n weight slots (matrix slots 1 and n+1, 1-based).
template <class F>
Matrix<F> project_matrix(const Matrix<F>& x, int n) {
    auto keep = [&](int slot) { return slot != 0 && slot != n; };  // 0-based
    Matrix<F> out(2 * n - 2, 2 * n - 2);
    int ri = 0;
    for (int r = 0; r < 2 * n; ++r) {
        if (!keep(r)) continue;
        int ci = 0;
        for (int c = 0; c < 2 * n; ++c) {
            if (!keep(c)) continue;
            out.at(ri, ci) = x.at(r, c);
            ++ci;
        }
        ++ri;
    }
    return out;
}

// Inverse of the projection's slot map on group elements.
template <class F>
Matrix<F> lift_matrix(const Matrix<F>& m, int n) {
    auto big = [&](int small) { return small < n - 1 ? small + 1 : small + 2; };  // 0-based
    Matrix<F> out = Matrix<F>::identity(2 * n);
    for (int r = 0; r < 2 * n - 2; ++r)
        for (int c = 0; c < 2 * n - 2; ++c) out.at(big(r), big(c)) = m.at(r, c);
    return out;
}

template <class F, class SqrtFn>
std::pair<std::vector<Arc>, Matrix<F>> normalize_rec(const Matrix<F>& x0, int n,
                                                     const SqrtFn& try_sqrt) {
    if (n == 1) {
        F c = x0.at(0, 1);
        if (c == F(0)) return {{}, Matrix<F>::identity(2)};
        F s = *try_sqrt(c);
        return {{Arc(-1, 1)}, torus_gen<F>(1, F(1) / s, 1)};
    }

    auto [arcs_hat, m_hat] = normalize_rec<F>(project_matrix(x0, n), n - 1, try_sqrt);
    SymmetricLinkPattern hat(n - 1, arcs_hat);

    Reduction<F> red{x0, Matrix<F>::identity(2 * n), n};
    {
        Matrix<F> m = lift_matrix(m_hat, n);
        red.apply(m, inverse(m));
    }

    // Clear the coefficients indexed by end points of the projected pattern.
    // Square zero forces f at pair right ends, g at pair left ends, f at both
    // mixed ends and f at central ends to vanish; the rest is conjugated away.
    for (const ArcClass& c : hat.classes()) {
        switch (c.kind) {
            case ArcClassKind::PositivePair:
                red.apply_unipotent(RootId::e_minus_e(c.j, n), -read_f(red.x, n, c.i));
                red.apply_unipotent(RootId::e_plus_e(c.i, n), read_g(red.x, n, c.j));
                break;
            case ArcClassKind::MixedPair:
                red.apply_unipotent(RootId::e_minus_e(c.j, n), -read_g(red.x, n, c.i));
                red.apply_unipotent(RootId::e_minus_e(c.i, n), -read_g(red.x, n, c.j));
                break;
            case ArcClassKind::Central:
                red.apply_unipotent(RootId::e_minus_e(c.i, n), -read_g(red.x, n, c.i));
                break;
        }
    }
    for (Point p : positive_endpoints(hat)) {
        if (!(read_f(red.x, n, p) == F(0)) || !(read_g(red.x, n, p) == F(0)))
            throw std::logic_error("endpoint coefficients survived the clearing step");
    }

    const std::set<Point> hat_fixed = positive_fixed_points(hat);
    const std::vector<Point> fixed(hat_fixed.begin(), hat_fixed.end());
    auto first_nonzero = [&](auto reader) -> std::optional<Point> {
        for (Point p : fixed)
            if (!(reader(red.x, n, p) == F(0))) return p;
        return std::nullopt;
    };
    auto last_nonzero = [&](auto reader) -> std::optional<Point> {
        std::optional<Point> out;
        for (Point p : fixed)
            if (!(reader(red.x, n, p) == F(0))) out = p;
        return out;
    };

    std::optional<Point> fmax = last_nonzero([](auto& y, int nn, int i) { return read_f(y, nn, i); });
    std::optional<Point> gmin =
        first_nonzero([](auto& y, int nn, int i) { return read_g(y, nn, i); });
    F h = read_h(red.x, n);

    std::vector<Arc> arcs = arcs_hat;
    if (!fmax && !gmin && h == F(0)) {
        // case (i): nothing new at +-n
    } else if (!fmax && !gmin) {
        // case (ii): a central arc with coefficient h
        F s = *try_sqrt(h);
        red.apply_torus(n, F(1) / s);
        arcs.emplace_back(-n, n);
    } else if (!fmax) {
        // case (iii): mixed pair (i, -n)(-i, n) with i the minimal g-support
        int i = *gmin;
        red.apply_torus(i, F(1) / read_g(red.x, n, i));
        for (Point j : fixed)
            if (j > i) red.apply_unipotent(RootId::e_minus_e(i, j), -read_g(red.x, n, j));
        red.apply_unipotent(RootId::e_minus_e(i, n), -read_h(red.x, n) / F(2));
        arcs.emplace_back(-i, n);
        arcs.emplace_back(-n, i);
    } else {
        // case (iv): positive pair (j, n)(-n, -j) with j the maximal f-support
        int j = *fmax;
        red.apply_torus(j, read_f(red.x, n, j));
        red.apply_unipotent(RootId::e_plus_e(j, n), read_h(red.x, n) / F(2));
        for (Point i : fixed)
            if (i < j) red.apply_unipotent(RootId::e_minus_e(i, j), read_f(red.x, n, i));
        // One central-root factor clears the X_{(-j,n)} coefficient; the
        // clearing factors above feed it, so it need not vanish on its own.
        red.apply_unipotent(RootId::two_e(j), read_g(red.x, n, j));
        if (!(read_g(red.x, n, j) == F(0)))
            throw std::logic_error("X_{(-j,n)} coefficient survived its clearing factor");
        for (Point i : fixed) {
            if (i == j) continue;
            RootId root = i < j ? RootId::e_plus_e(i, j) : RootId::e_plus_e(j, i);
            red.apply_unipotent(root, read_g(red.x, n, i));
        }
        arcs.emplace_back(j, n);
        arcs.emplace_back(-n, -j);
    }

    if (!(red.x == x_of_in<F>(SymmetricLinkPattern(n, arcs))))
        throw std::logic_error("normalization did not reach the orbit representative");
    return {std::move(arcs), std::move(red.witness)};
}

template <class F, class SqrtFn>
NormalizationResultT<F> normalize_checked(const Matrix<F>& x, int n, const SqrtFn& try_sqrt) {
    auto [arcs, witness] = normalize_rec<F>(x, n, try_sqrt);
    SymmetricLinkPattern pattern(n, std::move(arcs));
    if (!(witness * x * inverse(witness) == x_of_in<F>(pattern)))
        throw std::logic_error("witness equation failed");
    return {std::move(pattern), std::move(witness)};
}

}  // namespace

Matrix<Rational> project_nilradical(const Matrix<Rational>& x) {
    int n = half_size_of(x);
    if (n < 2) throw std::invalid_argument("projection needs n >= 2");
    return project_matrix(x, n);
}

NormalizationResult normalize(const Matrix<Rational>& x) {
    int n = half_size_of(x);
    check_square_zero_nilradical(x, n);
    return normalize_checked<Rational>(x, n, RationalSqrt{});
}

QuadNormalizationResult normalize_adjoining_sqrt(const Matrix<Rational>& x) {
    int n = half_size_of(x);
    check_square_zero_nilradical(x, n);
    try {
        NormalizationResult r = normalize_checked<Rational>(x, n, RationalSqrt{});
        Matrix<Quad> w(x.rows(), x.cols());
        for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t j = 0; j < x.cols(); ++j) w.at(i, j) = Quad(r.witness.at(i, j));
        return {std::move(r.pattern), std::move(w), Integer(0)};
    } catch (const NeedsIrrationalSqrt& e) {
        Integer d = squarefree_kernel(e.value);
        Matrix<Quad> xq(x.rows(), x.cols());
        for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t j = 0; j < x.cols(); ++j) xq.at(i, j) = Quad(x.at(i, j));
        NormalizationResultT<Quad> r = normalize_checked<Quad>(xq, n, QuadSqrt{d});
        return {std::move(r.pattern), std::move(r.witness), std::move(d)};
    }
}

int half_dim(int k, int n) {
    if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
    return n * k - k * (k - 1) / 2;
}

int spherical_orbit_dim(int k, int l) {
    if (k < 0 || l < 0) throw std::invalid_argument("need k, l >= 0");
    return k * (k + 2 * l + 1);
}

int orbit_dim_formula(const SymmetricLinkPattern& l) {
    return half_dim(arc_count(l), l.half_size()) - total_crossings(l) - total_bridges(l);
}

int orbit_dim_oracle(const SymmetricLinkPattern& l) {
    int n = l.half_size();
    Matrix<Rational> xl = x_of(l);
    int torus_dim = static_cast<int>(l.classes().size());

    std::vector<RootId> basis = positive_roots(n);
    Matrix<Rational> system(4 * n * n, basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b) {
        Matrix<Rational> nb = root_vector<Rational>(basis[b], n);
        Matrix<Rational> comm = xl * nb - nb * xl;
        for (int r = 0; r < 2 * n; ++r)
            for (int c = 0; c < 2 * n; ++c)
                system.at(r * 2 * n + c, b) = comm.at(r, c);
    }
    return torus_dim + static_cast<int>(rank(system));
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::total() const {
    int t = 0;
    for (int p : parts_) t += p;
    return t;
}

bool Partition::in_p1(int two_n) const {
    if (total() != two_n) return false;
    std::map<int, int> mult;
    for (int p : parts_) ++mult[p];
    for (auto& [part, m] : mult)
        if (part % 2 == 1 && m % 2 == 1) return false;
    return true;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
}

int nilpotent_orbit_dim(const Partition& lambda, int n) {
    if (!lambda.in_p1(2 * n)) throw std::domain_error("partition is not in P1(2n)");
    int lambda1 = lambda.parts().empty() ? 0 : lambda.parts()[0];
    long sum_s2 = 0, sum_r_odd = 0;
    for (int i = 1; i <= lambda1; ++i) {
        long s = 0, r = 0;
        for (int p : lambda.parts()) {
            if (p >= i) ++s;
            if (p == i) ++r;
        }
        sum_s2 += s * s;
        if (i % 2 == 1) sum_r_odd += r;
    }
    long twice = 2L * (2L * n * n + n) - sum_s2 - sum_r_odd;
    if (twice % 2 != 0) throw std::logic_error("odd orbit dimension");
    return static_cast<int>(twice / 2);
}

bool partition_dominance(const Partition& lambda, const Partition& mu) {
    if (lambda.total() != mu.total())
        throw std::invalid_argument("dominance needs equal totals");
    long a = 0, b = 0;
    std::size_t m = std::min(lambda.parts().size(), mu.parts().size());
    for (std::size_t i = 0; i < m; ++i) {
        a += lambda.parts()[i];
        b += mu.parts()[i];
        if (a < b) return false;
    }
    return true;
}

namespace {
void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(remaining - p, p, acc, out);
        acc.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_p1(int two_n) {
    std::vector<Partition> all;
    std::vector<int> acc;
    partitions_rec(two_n, two_n, acc, all);
    std::vector<Partition> out;
    for (auto& p : all)
        if (p.in_p1(two_n)) out.push_back(p);
    return out;
}

std::vector<Partition> orbit_closure_partitions(const Partition& lambda) {
    std::vector<Partition> out;
    for (const Partition& mu : partitions_p1(lambda.total()))
        if (partition_dominance(lambda, mu)) out.push_back(mu);
    return out;
}

}  // namespace slporbit
