#pragma once

#include <slporbit/model.hpp>
#include <slporbit/roots.hpp>
#include <slporbit/slp.hpp>

#include <optional>
#include <string>
#include <vector>

namespace slporbit {

enum class Placement { Col1Vertical, Col2Vertical, Horizontal };

// Standard domino tableau of shape (2^k, 1^{2n-2k}), encoded by the placement
// of each domino [label:label].  Standardness is enforced by replaying the
// insertions in label order.
class TwoColumnSDT {
  public:
    TwoColumnSDT(int n, std::vector<Placement> placements);

    int n() const { return n_; }
    Placement placement(int label) const { return placements_.at(label - 1); }
    const std::vector<Placement>& placements() const { return placements_; }

    // T_2: labels whose domino meets the second column, ascending.
    std::vector<int> col2_labels() const;
    // T_1: vertical dominoes of the first column, ascending.
    std::vector<int> col1_labels() const;
    std::vector<int> horizontal_labels() const;
    // Largest horizontal label, or 0 if there is none.
    int top_horizontal() const;
    // k with shape (2^k, 1^{2n-2k}).
    int shape_k() const;
    Partition shape() const;

    friend bool operator==(const TwoColumnSDT& a, const TwoColumnSDT& b) {
        return a.n_ == b.n_ && a.placements_ == b.placements_;
    }
    friend bool operator!=(const TwoColumnSDT& a, const TwoColumnSDT& b) { return !(a == b); }
    friend bool operator<(const TwoColumnSDT& a, const TwoColumnSDT& b) {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.placements_ < b.placements_;
    }

  private:
    int n_;
    std::vector<Placement> placements_;
};

// w_T = [b_k,...,b_1, -a_1,...,-a_s], a decreasing signed permutation word.
std::vector<int> w_of(const TwoColumnSDT& t);

// Positive root vectors spanning n cap w_T(n).
std::vector<RootId> steinberg_subspace(const TwoColumnSDT& t);

// The maximal link pattern of T: each T_2 label is joined to the closest free
// vertex on its left (horizontal dominoes give central arcs), mirrors added.
SymmetricLinkPattern lp_of(const TwoColumnSDT& t);

// Inverse of lp_of; the pattern must be maximal (no crossings, no bridges).
TwoColumnSDT sdt_of(const SymmetricLinkPattern& l);

// X_{L_T}, the representative of the dense orbit of the orbital variety V_T.
Matrix<Rational> dense_orbit_rep(const TwoColumnSDT& t);

// Closure move: a vertical domino of the second column (above every
// horizontal) moves to the first column, or the top horizontal domino turns
// vertical in the first column.
TwoColumnSDT closure_move(const TwoColumnSDT& t, int label);
// Iterated bracket notation: labels are applied largest first.
TwoColumnSDT closure_move_set(const TwoColumnSDT& t, std::vector<int> labels);

// The tableau-side characterization of E'(L_T); cross-checked in tests
// against positive_external_arcs.
std::vector<ArcClass> external_classes_from_tableau(const TwoColumnSDT& t);

struct ClosureComponent {
    enum class Kind { OrbitalVariety, OrbitClosurePart };
    Kind kind;
    std::optional<TwoColumnSDT> tableau;  // set for orbital varieties
    SymmetricLinkPattern pattern;         // dense-orbit pattern / orbit label
    Partition ambient;

    friend bool operator==(const ClosureComponent& a, const ClosureComponent& b) {
        return a.kind == b.kind && a.pattern == b.pattern && a.ambient == b.ambient;
    }
    friend bool operator<(const ClosureComponent& a, const ClosureComponent& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (!(a.pattern == b.pattern)) return a.pattern < b.pattern;
        return a.ambient < b.ambient;
    }
    std::string str() const;
};

struct IntersectionDecomposition {
    std::vector<ClosureComponent> components;
    bool irreducible;
    bool contains_orbital_variety;
    bool is_union_of_orbital_varieties;
};

// Components of cl(V_T) intersected with the orbit one or two levels down.
IntersectionDecomposition variety_closure_intersection(const TwoColumnSDT& t, int drop);

// Poset oracle: components of cl(B_L) cap O_{(2^{target_k},...)} as the
// maximal elements of { L' <= L : l(L') = target_k }.
std::vector<ClosureComponent> closure_intersection_components(const SymmetricLinkPattern& l,
                                                              int target_k);

enum class Codim1Config { CentralBridge, PairBridge, CentralCross, DoubleCross, CentralPairCross };
std::string to_string(Codim1Config c);

struct Codim1Analysis {
    Codim1Config config;
    std::vector<SymmetricLinkPattern> maximal_above;  // one or two
    bool intersection_is_orbit_closure;
};

// For L with c(L)+b(L) = 1: the maximal orbits above it and whether the
// intersection of their closures is exactly cl(B_L).
Codim1Analysis codim1_intersection_analysis(const SymmetricLinkPattern& l);

// Text form: "n=7; col2=[2,3h,4h,7];"  ('h' marks horizontal dominoes).
TwoColumnSDT parse_sdt(const std::string& text);
std::string format_sdt(const TwoColumnSDT& t);
std::string sdt_json(const TwoColumnSDT& t);

}  // namespace slporbit
