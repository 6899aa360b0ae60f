#include <slporbit/boundary.hpp>

#include <slporbit/model.hpp>
#include <slporbit/rank_order.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <optional>
#include <set>

namespace slporbit {

std::string to_string(BoundaryCase c) {
    switch (c) {
        case BoundaryCase::FC: return "FC";
        case BoundaryCase::FPa: return "FPa";
        case BoundaryCase::FPb: return "FPb";
        case BoundaryCase::FMa: return "FMa";
        case BoundaryCase::FMb: return "FMb";
        case BoundaryCase::FN: return "FN";
        case BoundaryCase::LS: return "LS";
        case BoundaryCase::LC: return "LC";
        case BoundaryCase::LP: return "LP";
        case BoundaryCase::LMa: return "LMa";
        case BoundaryCase::LMb: return "LMb";
        case BoundaryCase::LN: return "LN";
        case BoundaryCase::CS: return "CS";
        case BoundaryCase::CCP: return "CCP";
        case BoundaryCase::CCM: return "CCM";
        case BoundaryCase::CPP: return "CPP";
        case BoundaryCase::CMC: return "CMC";
        case BoundaryCase::CMPa1: return "CMPa1";
        case BoundaryCase::CMPa2: return "CMPa2";
        case BoundaryCase::CMPb: return "CMPb";
        case BoundaryCase::CMMa1: return "CMMa1";
        case BoundaryCase::CMMa2: return "CMMa2";
        case BoundaryCase::CMMb: return "CMMb";
        case BoundaryCase::M2I: return "M2I";
        case BoundaryCase::M3II: return "M3II";
        case BoundaryCase::M3III: return "M3III";
    }
    throw std::logic_error("bad boundary case");
}

Matrix<Laurent> witness_matrix(const BoundaryWitness& w, int n) {
    Matrix<Laurent> b = Matrix<Laurent>::identity(2 * n);
    for (const WitnessFactor& f : w.factors) {
        if (f.is_torus) {
            if (!f.coeff.is_monomial())
                throw std::domain_error("torus witness coefficient must be a monomial");
            b = b * torus_gen<Laurent>(f.torus_index, f.coeff, n);
        } else {
            b = b * unipotent_gen<Laurent>(f.root, f.coeff, n);
        }
    }
    return b;
}

bool verify_witness(const SymmetricLinkPattern& from, const SymmetricLinkPattern& to,
                    const BoundaryWitness& w) {
    if (from.half_size() != to.half_size())
        throw std::invalid_argument("witness endpoints differ in size");
    const int n = from.half_size();
    Matrix<Laurent> x = x_of_in<Laurent>(from);
    for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
        Matrix<Laurent> g, ginv;
        if (it->is_torus) {
            if (!it->coeff.is_monomial())
                throw std::domain_error("torus witness coefficient must be a monomial");
            g = torus_gen<Laurent>(it->torus_index, it->coeff, n);
            ginv = torus_gen<Laurent>(it->torus_index, it->coeff.inverse_monomial(), n);
        } else {
            g = unipotent_gen<Laurent>(it->root, it->coeff, n);
            ginv = unipotent_gen_inverse<Laurent>(it->root, it->coeff, n);
        }
        x = g * x * ginv;
    }
    Matrix<Laurent> target = x_of_in<Laurent>(to);
    for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t c = 0; c < x.cols(); ++c) {
            if (x.at(r, c).has_positive_exp()) return false;
            if (!(Gaussian(x.at(r, c).constant_term()) == target.at(r, c).constant_term()))
                return false;
        }
    return true;
}

namespace {

Laurent lc(long num, long den = 1) {  // constant
    return Laurent(Rational(num, den));
}
Laurent lm(long num = 1, long den = 1, int exp = 1) {  // (num/den) * m^exp
    return Laurent::monomial(Gaussian(Rational(num, den)), exp);
}
Laurent li() {  // sqrt(-1)
    return Laurent(Gaussian::unit_i());
}
Laurent lim_neg(int exp) {  // -i * m^exp
    return Laurent::monomial(-Gaussian::unit_i(), exp);
}

WitnessFactor T(int i, Laurent c) { return WitnessFactor::torus(i, std::move(c)); }
WitnessFactor U(RootId r, Laurent c) { return WitnessFactor::unipotent(r, std::move(c)); }
RootId em(int i, int j) { return RootId::e_minus_e(i, j); }
RootId ep(int i, int j) { return RootId::e_plus_e(std::min(i, j), std::max(i, j)); }
RootId e2(int i) { return RootId::two_e(i); }

std::optional<SymmetricLinkPattern> edited(const SymmetricLinkPattern& pat,
                                           const std::vector<ArcClass>& remove,
                                           const std::vector<ArcClass>& add) {
    std::set<Arc> arcs(pat.arcs().begin(), pat.arcs().end());
    for (const ArcClass& c : remove)
        for (const Arc& a : c.arcs()) arcs.erase(a);
    for (const ArcClass& c : add)
        for (const Arc& a : c.arcs()) arcs.insert(a);
    try {
        return SymmetricLinkPattern(pat.half_size(),
                                    std::vector<Arc>(arcs.begin(), arcs.end()));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

}  // namespace

std::vector<NBoundaryEntry> n_of(const SymmetricLinkPattern& pat) {
    std::vector<NBoundaryEntry> out;
    for (const ArcClass& c : positive_external_arcs(pat)) {
        switch (c.kind) {
            case ArcClassKind::Central:
                out.push_back({*edited(pat, {c}, {}), {{T(c.i, lm(1, 1, -1))}}, c});
                break;
            case ArcClassKind::PositivePair:
                out.push_back({*edited(pat, {c}, {ArcClass::central(c.j)}),
                               {{T(c.i, lm()), U(ep(c.i, c.j), lc(-1, 2))}},
                               c});
                break;
            case ArcClassKind::MixedPair:
                out.push_back({*edited(pat, {c}, {ArcClass::central(c.j)}),
                               {{T(c.i, lm(1, 1, -1)), U(em(c.i, c.j), lc(1, 2))}},
                               c});
                break;
        }
    }
    return out;
}

std::vector<NBoundaryEntry> n_codim1(const SymmetricLinkPattern& pat) {
    std::vector<NBoundaryEntry> out;
    int dim = orbit_dim_formula(pat);
    for (NBoundaryEntry& e : n_of(pat))
        if (dim - orbit_dim_formula(e.pattern) == 1) out.push_back(std::move(e));
    return out;
}

std::vector<DBoundaryEntry> d_of(const SymmetricLinkPattern& pat) {
    const std::set<Point> fixed = fixed_points(pat);
    std::vector<DBoundaryEntry> raw;

    auto emit = [&](BoundaryCase tag, std::optional<SymmetricLinkPattern> cand,
                    std::vector<WitnessFactor> factors) {
        if (!cand) return;
        raw.push_back({std::move(*cand), BoundaryWitness{std::move(factors)}, tag});
    };
    auto min_fixed_above = [&](Point p) -> Point {
        for (Point q : fixed)
            if (q > p) return q;
        return 0;
    };
    auto max_fixed_below = [&](Point p) -> Point {
        Point best = 0;
        for (Point q : fixed) {
            if (q >= p) break;
            best = q;
        }
        return best;  // 0 means "none or negative is irrelevant here"
    };
    auto any_arc = [&](auto pred) {
        for (const Arc& a : pat.arcs())
            if (pred(a.left, a.right)) return true;
        return false;
    };
    auto no_fixed_between = [&](Point a, Point b) { return fixed_in_interval(pat, a, b) == 0; };

    const std::vector<ArcClass> classes = pat.classes();

    // ---- moves of an arc end to an adjacent fixed point ----
    for (const ArcClass& c : classes) {
        const int i = c.i, j = c.j;
        switch (c.kind) {
            case ArcClassKind::Central: {
                Point r = min_fixed_above(i);
                if (r && !any_arc([&](Point s, Point t) { return s < -i && i < t && t < r; }))
                    emit(BoundaryCase::FC, edited(pat, {c}, {ArcClass::central(r)}),
                         {T(i, lm(1, 1, -1)), U(em(i, r), lc(1))});
                break;
            }
            case ArcClassKind::PositivePair: {
                Point li_ = max_fixed_below(i);
                if (li_ > 0 &&
                    !any_arc([&](Point s, Point t) { return li_ < s && s < i && j < t; }))
                    emit(BoundaryCase::FPa, edited(pat, {c}, {ArcClass::positive_pair(li_, j)}),
                         {T(i, lm()), U(em(li_, i), lc(-1))});
                Point r = min_fixed_above(j);
                if (r && !any_arc([&](Point s, Point t) { return s < i && j < t && t < r; }))
                    emit(BoundaryCase::FPb, edited(pat, {c}, {ArcClass::positive_pair(i, r)}),
                         {T(j, lm(1, 1, -1)), U(em(j, r), lc(1))});
                break;
            }
            case ArcClassKind::MixedPair: {
                Point r = min_fixed_above(j);
                if (r && !any_arc([&](Point s, Point t) { return s < -i && j < t && t < r; })) {
                    emit(BoundaryCase::FMa, edited(pat, {c}, {ArcClass::mixed_pair(i, r)}),
                         {T(j, lm(1, 1, -1)), U(em(j, r), lc(1))});
                    emit(BoundaryCase::FMa,
                         edited(pat, {c}, {ArcClass::central(j), ArcClass::central(r)}),
                         {T(j, li()), T(i, lm(1, 1, -1)), U(em(i, j), lc(-1)),
                          U(em(j, r), lc(1)), U(em(i, j), lc(1, 2))});
                }
                Point ri = min_fixed_above(i);
                if (ri && ri < j &&
                    !any_arc([&](Point s, Point t) { return s < -j && i < t && t < ri; }))
                    emit(BoundaryCase::FMb, edited(pat, {c}, {ArcClass::mixed_pair(ri, j)}),
                         {T(i, lm(1, 1, -1)), U(em(i, ri), lc(1))});
                break;
            }
        }
    }

    // ---- crossings of consecutive arcs ----
    for (const ArcClass& c : classes) {
        if (c.kind != ArcClassKind::PositivePair) continue;
        const int k = c.i, el = c.j;
        // left arc = the mirror of (k,el) itself
        if (no_fixed_between(-k, k) &&
            !any_arc([&](Point s, Point t) { return -k < s && s < k && el < t; }) &&
            !any_arc([&](Point s, Point t) { return s < -el && -k < t && t < k; }))
            emit(BoundaryCase::LS, edited(pat, {c}, {ArcClass::mixed_pair(k, el)}),
                 {T(el, lm(1, 1, -1)), U(e2(k), lm(-1))});
        for (const ArcClass& left : classes) {
            switch (left.kind) {
                case ArcClassKind::Central: {
                    const int i = left.i;
                    if (i < k && no_fixed_between(i, k) &&
                        !any_arc([&](Point s, Point t) { return s < -i && i < t && t < k; }) &&
                        !any_arc([&](Point s, Point t) { return i < s && s < k && el < t; }))
                        emit(BoundaryCase::LC,
                             edited(pat, {left, c},
                                    {ArcClass::central(k), ArcClass::positive_pair(i, el)}),
                             {T(k, lm()), T(i, lm(1, 1, -1)), U(em(i, k), lm(-1, 1, -1))});
                    break;
                }
                case ArcClassKind::PositivePair: {
                    const int i = left.i, j = left.j;
                    if (j < k && no_fixed_between(j, k) &&
                        !any_arc([&](Point s, Point t) { return s < i && j < t && t < k; }) &&
                        !any_arc([&](Point s, Point t) { return j < s && s < k && el < t; }))
                        emit(BoundaryCase::LP,
                             edited(pat, {left, c},
                                    {ArcClass::positive_pair(i, k), ArcClass::positive_pair(j, el)}),
                             {T(el, lm(-1, 1, -1)), T(i, lm()), U(em(j, k), lm())});
                    break;
                }
                case ArcClassKind::MixedPair: {
                    const int i = left.i, j = left.j;
                    if (j < k && no_fixed_between(j, k) &&
                        !any_arc([&](Point s, Point t) { return s < -i && j < t && t < k; }) &&
                        !any_arc([&](Point s, Point t) { return j < s && s < k && el < t; })) {
                        emit(BoundaryCase::LMa,
                             edited(pat, {left, c},
                                    {ArcClass::mixed_pair(i, k), ArcClass::positive_pair(j, el)}),
                             {T(k, lm()), T(j, lm(-1, 1, -1)), U(em(j, k), lm(1, 1, -1))});
                        emit(BoundaryCase::LMa,
                             edited(pat, {left, c},
                                    {ArcClass::central(j), ArcClass::central(k),
                                     ArcClass::positive_pair(i, el)}),
                             {T(el, lm(-1, 1, -1)), T(j, li()), T(i, lm(1, 1, -1)),
                              U(em(i, k), lc(1)), U(em(j, k), lc(1)), U(em(i, j), lc(-1, 2))});
                    }
                    if (i < k && no_fixed_between(i, k) &&
                        !any_arc([&](Point s, Point t) { return s < -j && i < t && t < k; }) &&
                        !any_arc([&](Point s, Point t) { return i < s && s < k && el < t; })) {
                        std::vector<ArcClass> add =
                            j < k ? std::vector<ArcClass>{ArcClass::central(j),
                                                          ArcClass::central(k),
                                                          ArcClass::positive_pair(i, el)}
                                  : std::vector<ArcClass>{ArcClass::mixed_pair(k, j),
                                                          ArcClass::positive_pair(i, el)};
                        emit(BoundaryCase::LMb, edited(pat, {left, c}, add),
                             {T(el, lm(1, 1, -1)), T(j, lm(-1, 1, -1)), U(em(i, k), lm(-1))});
                    }
                    break;
                }
            }
        }
    }

    // ---- crossings of concentric arcs ----
    for (const ArcClass& outer : classes) {
        for (const ArcClass& inner : classes) {
            if (outer == inner) continue;
            if (outer.kind == ArcClassKind::Central && inner.kind == ArcClassKind::Central) {
                const int j = inner.i, el = outer.i;
                if (j < el &&
                    !any_arc([&](Point s, Point t) { return -el < s && s < -j && j < t && t < el; }))
                    emit(BoundaryCase::CS, edited(pat, {outer, inner}, {ArcClass::mixed_pair(j, el)}),
                         {T(el, lim_neg(1)), T(j, lm(1, 1, -1)), U(em(j, el), li())});
            }
            if (outer.kind == ArcClassKind::Central && inner.kind == ArcClassKind::PositivePair) {
                const int j = inner.i, k = inner.j, el = outer.i;
                if (k < el &&
                    !any_arc([&](Point s, Point t) { return -el < s && s < j && k < t && t < el; }))
                    emit(BoundaryCase::CCP,
                         edited(pat, {outer, inner},
                                {ArcClass::central(k), ArcClass::positive_pair(j, el)}),
                         {T(el, lm()), T(j, lm()), U(ep(j, el), lc(1, 2)), U(ep(j, k), lc(-1, 2)),
                          U(em(k, el), lc(1))});
            }
            if (outer.kind == ArcClassKind::Central && inner.kind == ArcClassKind::MixedPair) {
                const int j = inner.i, k = inner.j, el = outer.i;
                if (k < el &&
                    !any_arc([&](Point s, Point t) { return -el < s && s < -j && k < t && t < el; }))
                    emit(BoundaryCase::CCM,
                         edited(pat, {outer, inner},
                                {ArcClass::central(k), ArcClass::mixed_pair(j, el)}),
                         {T(el, lm()), T(j, lm(1, 1, -1)), U(em(j, el), lc(-1, 2)),
                          U(em(j, k), lc(1, 2)), U(em(k, el), lc(1))});
            }
            if (outer.kind == ArcClassKind::PositivePair &&
                inner.kind == ArcClassKind::PositivePair) {
                const int i = outer.i, el = outer.j, j = inner.i, k = inner.j;
                if (i < j && k < el &&
                    !any_arc([&](Point s, Point t) { return i < s && s < j && k < t && t < el; }))
                    emit(BoundaryCase::CPP,
                         edited(pat, {outer, inner},
                                {ArcClass::positive_pair(i, k), ArcClass::positive_pair(j, el)}),
                         {T(el, lm(-1)), T(j, lm()), U(em(i, j), lc(-1)), U(em(k, el), lc(-1))});
            }
            if (outer.kind == ArcClassKind::MixedPair && inner.kind == ArcClassKind::Central) {
                const int i = outer.i, el = outer.j, j = inner.i;
                // The printed sandwich coefficients (1/2, -2, 1/2) leave a
                // divergent m^2 X_{2e_l} term; these solve the limit exactly.
                if (j < i &&
                    !any_arc([&](Point s, Point t) { return -i < s && s < -j && j < t && t < el; }))
                    emit(BoundaryCase::CMC,
                         edited(pat, {outer, inner},
                                {ArcClass::central(i), ArcClass::mixed_pair(j, el)}),
                         {T(el, lm(-1)), T(j, lm(1, 1, -1)), U(em(j, i), lc(-1)),
                          U(em(i, el), lc(-1, 2)), U(em(j, i), lc(2))});
            }
            if (outer.kind == ArcClassKind::MixedPair &&
                inner.kind == ArcClassKind::PositivePair) {
                const int i = outer.i, el = outer.j, j = inner.i, k = inner.j;
                if (k < el && k > i &&
                    !any_arc([&](Point s, Point t) { return -i < s && s < j && k < t && t < el; }))
                    emit(BoundaryCase::CMPa1,
                         edited(pat, {outer, inner},
                                {ArcClass::positive_pair(j, el), ArcClass::mixed_pair(i, k)}),
                         {T(k, lm(1, 1, -1)), T(i, lm(-1)), U(em(k, el), lc(1)), U(ep(i, j), lc(1))});
            }
            if (outer.kind == ArcClassKind::MixedPair && inner.kind == ArcClassKind::MixedPair) {
                const int i = outer.i, el = outer.j, j = inner.i, k = inner.j;
                if (j < i && k < el && k > i &&
                    !any_arc([&](Point s, Point t) { return -i < s && s < -j && k < t && t < el; }))
                    emit(BoundaryCase::CMMa1,
                         edited(pat, {outer, inner},
                                {ArcClass::mixed_pair(j, el), ArcClass::mixed_pair(i, k)}),
                         {T(k, lm(1, 1, -1)), T(i, lm(-1)), U(em(j, i), lc(-1)),
                          U(em(k, el), lc(1))});
                if (j < k && k < i && el > i) {
                    auto centrals = [&]() {
                        return edited(pat, {outer, inner},
                                      {ArcClass::mixed_pair(j, el), ArcClass::central(k),
                                       ArcClass::central(i)});
                    };
                    std::vector<WitnessFactor> wa2 = {
                        T(el, lm()),        T(j, lm()),          U(em(k, i), lc(1)),
                        U(em(j, el), lc(-1)), U(em(j, i), lc(-1)), U(em(k, el), lc(1)),
                        U(em(j, k), lc(1, 2)), U(em(i, el), lc(1, 2))};
                    if (!any_arc([&](Point s, Point t) {
                            return -i < s && s < -j && k < t && t < el;
                        }))
                        emit(BoundaryCase::CMMa2, centrals(), wa2);
                    if (!any_arc([&](Point s, Point t) {
                            return -el < s && s < -j && k < t && t < i;
                        })) {
                        emit(BoundaryCase::CMMb,
                             edited(pat, {outer, inner},
                                    {ArcClass::mixed_pair(j, i), ArcClass::mixed_pair(k, el)}),
                             {T(el, lm(-1)), T(k, lm(1, 1, -1)), U(em(j, el), lc(-1)),
                              U(em(k, i), lc(1))});
                        emit(BoundaryCase::CMMa2, centrals(), wa2);
                    }
                }
            }
        }
    }

    // ---- the nested pair-under-mixed configuration ----
    for (const ArcClass& pair : classes) {
        if (pair.kind != ArcClassKind::PositivePair) continue;
        for (const ArcClass& mix : classes) {
            if (mix.kind != ArcClassKind::MixedPair) continue;
            const int i = pair.i, j = pair.j, k = mix.i, el = mix.j;
            if (!(j < k && k < el)) continue;
            if (!any_arc([&](Point s, Point t) { return -k < s && s < i && j < t && t < el; })) {
                std::vector<WitnessFactor> w2 = {
                    T(k, li()),          T(el, lm()),         T(i, lm()),
                    U(em(j, el), lc(1)), U(em(j, k), lc(1)),  U(em(k, el), lc(1, 2)),
                    U(ep(i, el), lc(1, 2)), U(ep(i, k), lc(1)), U(ep(i, j), lc(-1, 2))};
                auto cand = [&]() {
                    return edited(pat, {pair, mix},
                                  {ArcClass::positive_pair(i, el), ArcClass::central(j),
                                   ArcClass::central(k)});
                };
                emit(BoundaryCase::CMPa2, cand(), w2);
                emit(BoundaryCase::M3II, cand(), w2);
            }
            if (!any_arc([&](Point s, Point t) { return -el < s && s < i && j < t && t < k; })) {
                std::vector<WitnessFactor> w3 = {T(k, lm()), T(j, lc(-1)), T(i, lm()),
                                                 U(em(j, k), lc(1)), U(ep(i, el), lc(1))};
                auto cand = [&]() {
                    return edited(pat, {pair, mix},
                                  {ArcClass::positive_pair(i, k), ArcClass::mixed_pair(j, el)});
                };
                emit(BoundaryCase::CMPb, cand(), w3);
                emit(BoundaryCase::M3III, cand(), w3);
            }
            if (no_fixed_between(-i, i) &&
                !any_arc([&](Point s, Point t) { return -i < s && s < i && j < t; }) &&
                !any_arc([&](Point s, Point t) { return s < -j && -i < t && t < i; }))
                emit(BoundaryCase::M2I, edited(pat, {pair}, {ArcClass::mixed_pair(i, j)}),
                     {T(i, lm()), U(e2(i), lm(-1, 1, -1))});
        }
    }

    // Membership: strictly below, same arc count, dimension drop exactly 1.
    const int dim = orbit_dim_formula(pat);
    const int k = arc_count(pat);
    std::vector<DBoundaryEntry> out;
    for (DBoundaryEntry& e : raw) {
        if (e.pattern == pat || arc_count(e.pattern) != k) continue;
        if (!leq(e.pattern, pat)) continue;
        if (dim - orbit_dim_formula(e.pattern) != 1) continue;
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<SymmetricLinkPattern> c_of(const SymmetricLinkPattern& pat) {
    std::set<SymmetricLinkPattern> set;
    for (const DBoundaryEntry& e : d_of(pat)) set.insert(e.pattern);
    for (const NBoundaryEntry& e : n_codim1(pat)) set.insert(e.pattern);
    return {set.begin(), set.end()};
}

namespace {

nlohmann::json factor_json(const WitnessFactor& f) {
    nlohmann::json j;
    if (f.is_torus) {
        j["type"] = "torus";
        j["i"] = f.torus_index;
    } else {
        j["type"] = "unipotent";
        j["root"] = f.root.str();
    }
    j["coeff"] = f.coeff.str();
    return j;
}

nlohmann::json witness_json(const BoundaryWitness& w) {
    nlohmann::json arr = nlohmann::json::array();
    for (const WitnessFactor& f : w.factors) arr.push_back(factor_json(f));
    return arr;
}

}  // namespace

std::string boundary_report_json(const SymmetricLinkPattern& pat) {
    nlohmann::json j;
    j["pattern"] = format_slp(pat);
    j["dim"] = orbit_dim_formula(pat);
    int dim = orbit_dim_formula(pat);
    j["D"] = nlohmann::json::array();
    for (const DBoundaryEntry& e : d_of(pat)) {
        nlohmann::json entry;
        entry["pattern"] = format_slp(e.pattern);
        entry["case"] = to_string(e.tag);
        entry["dim_drop"] = dim - orbit_dim_formula(e.pattern);
        entry["witness"] = witness_json(e.witness);
        entry["verified"] = verify_witness(pat, e.pattern, e.witness);
        j["D"].push_back(entry);
    }
    j["N"] = nlohmann::json::array();
    for (const NBoundaryEntry& e : n_of(pat)) {
        nlohmann::json entry;
        entry["pattern"] = format_slp(e.pattern);
        entry["source"] = e.source.str();
        entry["dim_drop"] = dim - orbit_dim_formula(e.pattern);
        entry["codim1"] = dim - orbit_dim_formula(e.pattern) == 1;
        entry["witness"] = witness_json(e.witness);
        entry["verified"] = verify_witness(pat, e.pattern, e.witness);
        j["N"].push_back(entry);
    }
    j["C"] = nlohmann::json::array();
    for (const SymmetricLinkPattern& c : c_of(pat)) j["C"].push_back(format_slp(c));
    return j.dump(2);
}

}  // namespace slporbit
