#pragma once

#include <slporbit/matrix.hpp>
#include <slporbit/quad.hpp>
#include <slporbit/rational.hpp>
#include <slporbit/roots.hpp>
#include <slporbit/slp.hpp>

#include <vector>

namespace slporbit {

// X_L: one root vector per arc class.
template <class F>
Matrix<F> x_of_in(const SymmetricLinkPattern& l) {
    int n = l.half_size();
    Matrix<F> x(2 * n, 2 * n);
    for (const ArcClass& c : l.classes()) {
        switch (c.kind) {
            case ArcClassKind::PositivePair:
                x += root_vector<F>(RootId::e_minus_e(c.i, c.j), n);
                break;
            case ArcClassKind::MixedPair:
                x += root_vector<F>(RootId::e_plus_e(c.i, c.j), n);
                break;
            case ArcClassKind::Central:
                x += root_vector<F>(RootId::two_e(c.i), n);
                break;
        }
    }
    return x;
}
inline Matrix<Rational> x_of(const SymmetricLinkPattern& l) { return x_of_in<Rational>(l); }

// X_L rewritten over the type-A flag basis: one +-1 entry per arc, at the
// rank-matrix index pair of its ends.  Signs are inherited from the root
// vector realization.
Matrix<Rational> y_embedding(const SymmetricLinkPattern& l);

// The unique L with x in the Borel orbit of X_L, read off from the interval
// ranks of the flag-basis form.  x must be square zero and in the nilradical.
SymmetricLinkPattern classify(const Matrix<Rational>& x);

class NeedsIrrationalSqrt : public std::domain_error {
  public:
    explicit NeedsIrrationalSqrt(Rational v)
        : std::domain_error("normalization requires an irrational square root of " +
                            to_string(v)),
          value(std::move(v)) {}
    Rational value;
};

template <class F>
struct NormalizationResultT {
    SymmetricLinkPattern pattern;
    Matrix<F> witness;  // upper-triangular-flag Borel element, witness*x*witness^{-1} = X_L
};
using NormalizationResult = NormalizationResultT<Rational>;

// Constructive form of the classification: inductive reduction to X_L with an
// explicit Borel witness.  Throws NeedsIrrationalSqrt when the central-arc
// case would leave Q.
NormalizationResult normalize(const Matrix<Rational>& x);

struct QuadNormalizationResult {
    SymmetricLinkPattern pattern;
    Matrix<Quad> witness;
    Integer adjoined;  // witness lives in Q(sqrt(adjoined)); 0 if none needed
};

// Escape hatch: adjoins the single square root the reduction asks for.
QuadNormalizationResult normalize_adjoining_sqrt(const Matrix<Rational>& x);

// Drop the +-e_n weight rows and columns; maps the nilradical of sp_2n onto
// the nilradical of sp_{2n-2} and intertwines classification with project().
Matrix<Rational> project_nilradical(const Matrix<Rational>& x);

// dim T_L + rank of N |-> [X_L, N] on the nilradical.
int orbit_dim_oracle(const SymmetricLinkPattern& l);
// d(k,n) - c(L) - b(L).
int orbit_dim_formula(const SymmetricLinkPattern& l);
// d(k,n) = nk - k(k-1)/2, half the dimension of the ambient nilpotent orbit.
int half_dim(int k, int n);
// k(k + 2l + 1).
int spherical_orbit_dim(int k, int l);

class Partition {
  public:
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int total() const;
    // Odd parts with even multiplicity; total equal to two_n.
    bool in_p1(int two_n) const;
    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.parts_ < b.parts_;
    }
    std::string str() const;

  private:
    std::vector<int> parts_;
};

// dim O_lambda for lambda in P1(2n).
int nilpotent_orbit_dim(const Partition& lambda, int n);
// lambda >= mu in the dominance order (equal totals required).
bool partition_dominance(const Partition& lambda, const Partition& mu);
// All mu in P1(2n) with mu <= lambda.
std::vector<Partition> orbit_closure_partitions(const Partition& lambda);
std::vector<Partition> partitions_p1(int two_n);

}  // namespace slporbit
