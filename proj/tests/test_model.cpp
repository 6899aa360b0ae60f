#include <doctest.h>

#include <slporbit/model.hpp>
#include <slporbit/rank_order.hpp>

#include "action_table_oracle.hpp"
#include "random_conjugate.hpp"

#include <random>

using namespace slporbit;

TEST_CASE("root vectors at small rank") {
    CHECK(root_vector<Rational>(RootId::two_e(1), 1) ==
          [] {
              Matrix<Rational> e(2, 2);
              e.at(0, 1) = 1;
              return e;
          }());
    // e_2 - e_1 at n=2: E_{1,2} - E_{4,3}
    Matrix<Rational> expect(4, 4);
    expect.at(0, 1) = 1;
    expect.at(3, 2) = -1;
    CHECK(root_vector<Rational>(RootId::e_minus_e(1, 2), 2) == expect);
    // e_2 + e_1 at n=2: E_{2,3} + E_{1,4}
    Matrix<Rational> expect2(4, 4);
    expect2.at(1, 2) = 1;
    expect2.at(0, 3) = 1;
    CHECK(root_vector<Rational>(RootId::e_plus_e(1, 2), 2) == expect2);
}

TEST_CASE("every root vector lies in sp and the form is unique") {
    for (int n = 1; n <= 4; ++n) {
        Matrix<Rational> j = symplectic_form(n);
        for (const RootId& r : positive_roots(n)) {
            for (const RootId& rr : {r, r.negated()}) {
                Matrix<Rational> x = root_vector<Rational>(rr, n);
                CHECK((x.transpose() * j + j * x).is_zero());
            }
        }
    }
    // uniqueness up to scalar: the space of skew forms j with X^T j + j X = 0
    // for all root vectors is one-dimensional (n = 2,3)
    for (int n = 2; n <= 3; ++n) {
        const int dim = 2 * n;
        std::vector<Matrix<Rational>> constraints;  // each row: linear functional on j-entries
        std::vector<std::vector<Rational>> rows;
        auto add_row = [&](const std::vector<Rational>& row) { rows.push_back(row); };
        // skew symmetry
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b <= a; ++b) {
                std::vector<Rational> row(dim * dim, Rational(0));
                row[a * dim + b] += 1;
                row[b * dim + a] += 1;
                add_row(row);
            }
        for (const RootId& r : positive_roots(n))
            for (const RootId& rr : {r, r.negated()}) {
                Matrix<Rational> x = root_vector<Rational>(rr, n);
                // (X^T J + J X)_{a,b} = sum_c X_{c,a} J_{c,b} + J_{a,c} X_{c,b}
                for (int a = 0; a < dim; ++a)
                    for (int b = 0; b < dim; ++b) {
                        std::vector<Rational> row(dim * dim, Rational(0));
                        for (int c = 0; c < dim; ++c) {
                            row[c * dim + b] += x.at(c, a);
                            row[a * dim + c] += x.at(c, b);
                        }
                        add_row(row);
                    }
            }
        Matrix<Rational> system(rows.size(), dim * dim);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (int c = 0; c < dim * dim; ++c) system.at(r, c) = rows[r][c];
        CHECK(static_cast<int>(dim * dim - rank(system)) == 1);
    }
}

TEST_CASE("generators are symplectic, also with a symbolic parameter") {
    for (int n = 1; n <= 3; ++n) {
        Matrix<Laurent> j(2 * n, 2 * n);
        Matrix<Rational> jr = symplectic_form(n);
        for (int a = 0; a < 2 * n; ++a)
            for (int b = 0; b < 2 * n; ++b) j.at(a, b) = Laurent(jr.at(a, b));
        Laurent m = Laurent::var();
        for (int i = 1; i <= n; ++i) {
            Matrix<Laurent> t = torus_gen<Laurent>(i, m, n);
            CHECK(t.transpose() * j * t == j);
        }
        for (const RootId& r : positive_roots(n)) {
            Matrix<Laurent> u = unipotent_gen<Laurent>(r, m, n);
            CHECK(u.transpose() * j * u == j);
            CHECK(u * unipotent_gen_inverse<Laurent>(r, m, n) ==
                  Matrix<Laurent>::identity(2 * n));
        }
    }
}

TEST_CASE("action tables hold symbolically for n <= 4") {
    Laurent m = Laurent::var();
    for (int n = 1; n <= 4; ++n) {
        for (const RootId& target : positive_roots(n)) {
            Matrix<Laurent> x = root_vector<Laurent>(target, n);
            for (int i = 1; i <= n; ++i) {
                Matrix<Laurent> t = torus_gen<Laurent>(i, m, n);
                Matrix<Laurent> tinv = torus_gen<Laurent>(i, m.inverse_monomial(), n);
                CHECK(t * x * tinv == testing::expected_torus_action(i, target, n));
            }
            for (const RootId& gen : positive_roots(n)) {
                Matrix<Laurent> u = unipotent_gen<Laurent>(gen, m, n);
                Matrix<Laurent> uinv = unipotent_gen_inverse<Laurent>(gen, m, n);
                CHECK(u * x * uinv == testing::expected_unipotent_action(gen, target, n));
            }
        }
    }
}

TEST_CASE("x_of on the worked example") {
    SymmetricLinkPattern l = parse_slp("n=6; (1,2)(-1,-2)(3,-6)(-3,6)(-4,4)");
    Matrix<Rational> expect = root_vector<Rational>(RootId::e_minus_e(1, 2), 6) +
                              root_vector<Rational>(RootId::e_plus_e(3, 6), 6) +
                              root_vector<Rational>(RootId::two_e(4), 6);
    CHECK(x_of(l) == expect);
    CHECK(x_of(SymmetricLinkPattern(2, {})).is_zero());
    Matrix<Rational> e12(2, 2);
    e12.at(0, 1) = 1;
    CHECK(x_of(SymmetricLinkPattern(1, {Arc(-1, 1)})) == e12);
}

TEST_CASE("x_of squares to zero with rank = arc count") {
    for (int n = 1; n <= 4; ++n)
        for (const SymmetricLinkPattern& l : enumerate_slp(n)) {
            Matrix<Rational> x = x_of(l);
            CHECK((x * x).is_zero());
            CHECK(in_nilradical(x, n));
            CHECK(static_cast<int>(rank(x)) == arc_count(l));
        }
}

TEST_CASE("flag-basis embedding puts one entry per arc") {
    for (const SymmetricLinkPattern& l : enumerate_slp(3)) {
        Matrix<Rational> y = y_embedding(l);
        int nonzero = 0;
        for (std::size_t r = 0; r < y.rows(); ++r)
            for (std::size_t c = 0; c < y.cols(); ++c) {
                if (y.at(r, c) == Rational(0)) continue;
                ++nonzero;
                CHECK(r < c);  // strictly upper triangular in the flag order
                Arc a(from_matrix_index(static_cast<int>(r) + 1, 3),
                      from_matrix_index(static_cast<int>(c) + 1, 3));
                CHECK(l.contains(a));
                CHECK((y.at(r, c) == Rational(1) || y.at(r, c) == Rational(-1)));
            }
        CHECK(nonzero == arc_count(l));
    }
    // the paper's sign dictionary: a central arc maps to +1, a positive pair
    // to +1 on the negative side and -1 on the positive side
    SymmetricLinkPattern c2(2, {Arc(-2, 2)});
    Matrix<Rational> y = y_embedding(c2);
    CHECK(y.at(to_matrix_index(-2, 2) - 1, to_matrix_index(2, 2) - 1) == 1);
    SymmetricLinkPattern p2(2, {Arc(1, 2), Arc(-2, -1)});
    Matrix<Rational> y2 = y_embedding(p2);
    CHECK(y2.at(to_matrix_index(-2, 2) - 1, to_matrix_index(-1, 2) - 1) == 1);
    CHECK(y2.at(to_matrix_index(1, 2) - 1, to_matrix_index(2, 2) - 1) == -1);
}

TEST_CASE("classify recovers every representative, n <= 4") {
    for (int n = 1; n <= 4; ++n)
        for (const SymmetricLinkPattern& l : enumerate_slp(n)) CHECK(classify(x_of(l)) == l);
    CHECK(classify(Matrix<Rational>(4, 4)) == SymmetricLinkPattern(2, {}));
    Matrix<Rational> bad(2, 2);
    bad.at(1, 0) = 1;
    CHECK_THROWS_AS(classify(bad), std::domain_error);
}

TEST_CASE("classify and normalize on random conjugates, n <= 3") {
    std::mt19937 rng(12345);
    for (int n = 1; n <= 3; ++n)
        for (const SymmetricLinkPattern& l : enumerate_slp(n))
            for (int trial = 0; trial < 5; ++trial) {
                Matrix<Rational> b = testing::random_borel(n, rng);
                Matrix<Rational> x = b * x_of(l) * inverse(b);
                CHECK(classify(x) == l);
                QuadNormalizationResult r = normalize_adjoining_sqrt(x);
                CHECK(r.pattern == l);
                // witness equation over the (possibly extended) field
                Matrix<Quad> xq(x.rows(), x.cols());
                for (std::size_t a = 0; a < x.rows(); ++a)
                    for (std::size_t c = 0; c < x.cols(); ++c) xq.at(a, c) = Quad(x.at(a, c));
                Matrix<Quad> lhs = r.witness * xq * inverse(r.witness);
                Matrix<Rational> xl = x_of(l);
                for (std::size_t a = 0; a < x.rows(); ++a)
                    for (std::size_t c = 0; c < x.cols(); ++c)
                        CHECK(lhs.at(a, c) == Quad(xl.at(a, c)));
            }
}

TEST_CASE("normalize base cases") {
    Matrix<Rational> x(2, 2);
    x.at(0, 1) = 4;
    NormalizationResult r = normalize(x);
    CHECK(r.pattern == SymmetricLinkPattern(1, {Arc(-1, 1)}));
    CHECK(r.witness == torus_gen<Rational>(1, make_rational(1, 2), 1));

    Matrix<Rational> y(2, 2);
    y.at(0, 1) = 2;
    CHECK_THROWS_AS(normalize(y), NeedsIrrationalSqrt);
    QuadNormalizationResult q = normalize_adjoining_sqrt(y);
    CHECK(q.adjoined == 2);
    CHECK(q.pattern == SymmetricLinkPattern(1, {Arc(-1, 1)}));

    Matrix<Rational> z(2, 2);
    z.at(0, 1) = -4;
    QuadNormalizationResult qi = normalize_adjoining_sqrt(z);
    CHECK(qi.adjoined == -1);
}

TEST_CASE("projection compatibility on samples") {
    std::mt19937 rng(777);
    for (const SymmetricLinkPattern& l : enumerate_slp(3)) {
        Matrix<Rational> b = testing::random_borel(3, rng);
        Matrix<Rational> x = b * x_of(l) * inverse(b);
        CHECK(classify(project_nilradical(x)) == project(classify(x)));
    }
}

TEST_CASE("orbit dimensions: formula vs rank oracle") {
    CHECK(orbit_dim_formula(SymmetricLinkPattern(2, {})) == 0);
    CHECK(orbit_dim_oracle(SymmetricLinkPattern(2, {})) == 0);
    CHECK(orbit_dim_formula(SymmetricLinkPattern(1, {Arc(-1, 1)})) == 1);
    CHECK(orbit_dim_oracle(SymmetricLinkPattern(1, {Arc(-1, 1)})) == 1);
    SymmetricLinkPattern big = parse_slp("n=6; (1,2)(-1,-2)(3,-6)(-3,6)(-4,4)");
    CHECK(orbit_dim_formula(big) == 17);
    CHECK(orbit_dim_oracle(big) == 17);
    CHECK(orbit_dim_formula(SymmetricLinkPattern(2, {Arc(-2, 2)})) == 1);
    for (int n = 1; n <= 3; ++n)
        for (const SymmetricLinkPattern& l : enumerate_slp(n))
            CHECK(orbit_dim_formula(l) == orbit_dim_oracle(l));
}

TEST_CASE("partition formulas") {
    CHECK(nilpotent_orbit_dim(Partition({2}), 1) == 2);
    CHECK(spherical_orbit_dim(1, 0) == 2);
    CHECK(nilpotent_orbit_dim(Partition({1, 1}), 1) == 0);
    CHECK(nilpotent_orbit_dim(Partition({2, 2, 1, 1}), 3) == 10);
    CHECK(spherical_orbit_dim(2, 1) == 10);
    CHECK(2 * half_dim(2, 3) == 10);
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) {
            std::vector<int> parts(k, 2);
            for (int i = 0; i < 2 * (n - k); ++i) parts.push_back(1);
            if (parts.empty()) continue;
            Partition lam(parts);
            CHECK(lam.in_p1(2 * n));
            CHECK(nilpotent_orbit_dim(lam, n) == spherical_orbit_dim(k, n - k));
            CHECK(nilpotent_orbit_dim(lam, n) == 2 * half_dim(k, n));
        }
    CHECK_THROWS_AS(nilpotent_orbit_dim(Partition({3, 1}), 2), std::domain_error);
}

TEST_CASE("partition dominance and closures") {
    CHECK(partition_dominance(Partition({4, 2}), Partition({3, 3})));
    CHECK(!partition_dominance(Partition({3, 3}), Partition({4, 2})));
    CHECK(partition_dominance(Partition({3, 3}), Partition({3, 3})));
    CHECK_THROWS_AS(partition_dominance(Partition({2}), Partition({1})),
                    std::invalid_argument);
    // the two-column chain is linear: (2^3) > (2^2,1^2) > (2,1^4) > (1^6)
    std::vector<Partition> chain = {Partition({2, 2, 2}), Partition({2, 2, 1, 1}),
                                    Partition({2, 1, 1, 1, 1}), Partition({1, 1, 1, 1, 1, 1})};
    for (std::size_t i = 0; i < chain.size(); ++i)
        for (std::size_t j = i; j < chain.size(); ++j)
            CHECK(partition_dominance(chain[i], chain[j]));
    auto closure = orbit_closure_partitions(Partition({2, 2, 2}));
    CHECK(closure.size() == 4);
}
