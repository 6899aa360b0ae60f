#include <slporbit/tableau.hpp>

#include <slporbit/rank_order.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace slporbit {

TwoColumnSDT::TwoColumnSDT(int n, std::vector<Placement> placements)
    : n_(n), placements_(std::move(placements)) {
    if (n_ <= 0) throw std::invalid_argument("tableau needs n >= 1");
    if (placements_.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("tableau needs one placement per label");
    int c1 = 0, c2 = 0;
    for (int label = 1; label <= n_; ++label) {
        switch (placements_[label - 1]) {
            case Placement::Col1Vertical:
                c1 += 2;
                break;
            case Placement::Col2Vertical:
                if (c1 < c2 + 2)
                    throw std::invalid_argument(
                        "domino " + std::to_string(label) +
                        " cannot go to the second column: shape would not be a Young diagram");
                c2 += 2;
                break;
            case Placement::Horizontal:
                if (c1 != c2)
                    throw std::invalid_argument("domino " + std::to_string(label) +
                                                " cannot lie horizontally: columns differ");
                ++c1;
                ++c2;
                break;
        }
    }
}

std::vector<int> TwoColumnSDT::col2_labels() const {
    std::vector<int> out;
    for (int label = 1; label <= n_; ++label)
        if (placements_[label - 1] != Placement::Col1Vertical) out.push_back(label);
    return out;
}

std::vector<int> TwoColumnSDT::col1_labels() const {
    std::vector<int> out;
    for (int label = 1; label <= n_; ++label)
        if (placements_[label - 1] == Placement::Col1Vertical) out.push_back(label);
    return out;
}

std::vector<int> TwoColumnSDT::horizontal_labels() const {
    std::vector<int> out;
    for (int label = 1; label <= n_; ++label)
        if (placements_[label - 1] == Placement::Horizontal) out.push_back(label);
    return out;
}

int TwoColumnSDT::top_horizontal() const {
    auto h = horizontal_labels();
    return h.empty() ? 0 : h.back();
}

int TwoColumnSDT::shape_k() const {
    int k = 0;
    for (Placement p : placements_) {
        if (p == Placement::Col2Vertical) k += 2;
        if (p == Placement::Horizontal) k += 1;
    }
    return k;
}

Partition TwoColumnSDT::shape() const {
    int k = shape_k();
    std::vector<int> parts(k, 2);
    parts.resize(k + (2 * n_ - 2 * k), 2);
    for (int i = k; i < static_cast<int>(parts.size()); ++i) parts[i] = 1;
    return Partition(parts);
}

std::vector<int> w_of(const TwoColumnSDT& t) {
    std::vector<int> word;
    std::vector<int> b = t.col2_labels();
    for (auto it = b.rbegin(); it != b.rend(); ++it) word.push_back(*it);
    for (int a : t.col1_labels()) word.push_back(-a);
    return word;
}

std::vector<RootId> steinberg_subspace(const TwoColumnSDT& t) {
    std::vector<int> t2 = t.col2_labels(), t1 = t.col1_labels();
    std::set<int> in2(t2.begin(), t2.end());
    std::vector<RootId> out;
    for (int i = 1; i <= t.n(); ++i)
        for (int j = i + 1; j <= t.n(); ++j) {
            bool i1 = !in2.count(i), j2 = in2.count(j) != 0;
            if (i1 && j2) out.push_back(RootId::e_minus_e(i, j));
            if (in2.count(i) && j2) out.push_back(RootId::e_plus_e(i, j));
        }
    for (int i : t2) out.push_back(RootId::two_e(i));
    std::sort(out.begin(), out.end());
    return out;
}

SymmetricLinkPattern lp_of(const TwoColumnSDT& t) {
    const int n = t.n();
    std::set<Point> free;
    for (int p = -n; p <= n; ++p)
        if (p != 0) free.insert(p);
    std::vector<Arc> arcs;
    for (int b : t.col2_labels()) {
        if (t.placement(b) == Placement::Horizontal) {
            arcs.emplace_back(-b, b);
            free.erase(-b);
            free.erase(b);
            continue;
        }
        auto it = free.lower_bound(b);
        if (it == free.begin()) throw std::logic_error("no free vertex left of a column-2 label");
        --it;
        Point partner = *it;
        arcs.emplace_back(partner, b);
        arcs.emplace_back(-b, -partner);
        for (Point p : {partner, b, -partner, -b}) free.erase(p);
    }
    return SymmetricLinkPattern(n, std::move(arcs));
}

TwoColumnSDT sdt_of(const SymmetricLinkPattern& l) {
    if (total_crossings(l) != 0 || total_bridges(l) != 0)
        throw std::domain_error("pattern is not maximal (crossings or bridges present)");
    std::vector<Placement> placements(l.half_size(), Placement::Col1Vertical);
    for (const ArcClass& c : l.classes()) {
        switch (c.kind) {
            case ArcClassKind::Central:
                placements[c.i - 1] = Placement::Horizontal;
                break;
            case ArcClassKind::PositivePair:
                placements[c.j - 1] = Placement::Col2Vertical;
                break;
            case ArcClassKind::MixedPair:
                throw std::domain_error("maximal pattern cannot contain a mixed pair");
        }
    }
    TwoColumnSDT t(l.half_size(), std::move(placements));
    if (!(lp_of(t) == l)) throw std::logic_error("tableau does not reproduce the pattern");
    return t;
}

Matrix<Rational> dense_orbit_rep(const TwoColumnSDT& t) { return x_of(lp_of(t)); }

TwoColumnSDT closure_move(const TwoColumnSDT& t, int label) {
    if (label < 1 || label > t.n()) throw std::invalid_argument("label out of range");
    int hp = t.top_horizontal();
    switch (t.placement(label)) {
        case Placement::Col1Vertical:
            throw std::invalid_argument("domino already in the first column");
        case Placement::Col2Vertical:
            if (label < hp)
                throw std::invalid_argument(
                    "vertical domino below the top horizontal cannot move");
            break;
        case Placement::Horizontal:
            if (label != hp)
                throw std::invalid_argument("only the top horizontal domino can turn vertical");
            break;
    }
    std::vector<Placement> placements = t.placements();
    placements[label - 1] = Placement::Col1Vertical;
    return TwoColumnSDT(t.n(), std::move(placements));
}

TwoColumnSDT closure_move_set(const TwoColumnSDT& t, std::vector<int> labels) {
    std::sort(labels.begin(), labels.end(), std::greater<int>());
    TwoColumnSDT out = t;
    for (int label : labels) out = closure_move(out, label);
    return out;
}

std::vector<ArcClass> external_classes_from_tableau(const TwoColumnSDT& t) {
    std::vector<ArcClass> out;
    int hp = t.top_horizontal();
    if (hp != 0) out.push_back(ArcClass::central(hp));
    SymmetricLinkPattern l = lp_of(t);
    std::vector<int> b;  // vertical column-2 labels
    for (int label : t.col2_labels())
        if (t.placement(label) == Placement::Col2Vertical) b.push_back(label);
    const int r = static_cast<int>(b.size());
    for (int idx = 0; idx < r; ++idx) {
        if (b[idx] <= hp) continue;
        bool ok = true;
        for (int s = idx + 1; s < r; ++s)
            if (b[s] - b[idx] < 2 * (s - idx)) ok = false;
        if (idx == r - 1) ok = true;
        if (!ok) continue;
        // partner of b[idx] in L_T
        for (const ArcClass& c : l.classes())
            if (c.kind == ArcClassKind::PositivePair && c.j == b[idx]) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string ClosureComponent::str() const {
    std::ostringstream os;
    if (kind == Kind::OrbitalVariety)
        os << "V[" << format_sdt(*tableau) << "]";
    else
        os << "closure-part[" << format_slp(pattern) << "]";
    os << " in O" << ambient.str();
    return os.str();
}

namespace {

Partition two_column_partition(int k, int n) {
    std::vector<int> parts;
    for (int i = 0; i < k; ++i) parts.push_back(2);
    for (int i = 0; i < 2 * n - 2 * k; ++i) parts.push_back(1);
    return Partition(parts);
}

std::vector<ClosureComponent> dedupe(std::vector<ClosureComponent> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

IntersectionDecomposition variety_closure_intersection(const TwoColumnSDT& t, int drop) {
    if (drop != 1 && drop != 2) throw std::invalid_argument("drop must be 1 or 2");
    const int k = t.shape_k(), n = t.n();
    if (k < drop) throw std::invalid_argument("shape has fewer dominoes than the drop");
    const int hp = t.top_horizontal();
    const Partition ambient = two_column_partition(k - drop, n);
    SymmetricLinkPattern l = lp_of(t);

    std::vector<ArcClass> pair_ext;
    for (const ArcClass& c : positive_external_arcs(l))
        if (c.kind == ArcClassKind::PositivePair) pair_ext.push_back(c);

    std::vector<ClosureComponent> components;
    if (drop == 1) {
        if (hp != 0) {
            TwoColumnSDT moved = closure_move(t, hp);
            components.push_back(
                {ClosureComponent::Kind::OrbitalVariety, moved, lp_of(moved), ambient});
        }
        for (const ArcClass& c : pair_ext) {
            std::set<Arc> arcs(l.arcs().begin(), l.arcs().end());
            for (const Arc& a : c.arcs()) arcs.erase(a);
            arcs.insert(Arc(-c.j, c.j));
            SymmetricLinkPattern part(n, std::vector<Arc>(arcs.begin(), arcs.end()));
            components.push_back(
                {ClosureComponent::Kind::OrbitClosurePart, std::nullopt, part, ambient});
        }
    } else {
        for (const ArcClass& c : pair_ext) {
            TwoColumnSDT moved = closure_move(t, c.j);
            components.push_back(
                {ClosureComponent::Kind::OrbitalVariety, moved, lp_of(moved), ambient});
        }
        if (hp != 0) {
            // cl(V_{T<hp>}) cap O decomposes one level further down.
            IntersectionDecomposition inner =
                variety_closure_intersection(closure_move(t, hp), 1);
            for (ClosureComponent& c : inner.components) components.push_back(std::move(c));
        }
    }
    components = dedupe(std::move(components));
    IntersectionDecomposition out{std::move(components), false, false, false};
    out.irreducible = out.components.size() == 1;
    out.contains_orbital_variety = false;
    out.is_union_of_orbital_varieties = !out.components.empty();
    for (const ClosureComponent& c : out.components) {
        if (c.kind == ClosureComponent::Kind::OrbitalVariety)
            out.contains_orbital_variety = true;
        else
            out.is_union_of_orbital_varieties = false;
    }
    return out;
}

std::vector<ClosureComponent> closure_intersection_components(const SymmetricLinkPattern& l,
                                                              int target_k) {
    const int n = l.half_size();
    RankMatrix rm = rank_matrix(l);
    std::vector<SymmetricLinkPattern> level;
    for (const SymmetricLinkPattern& cand : enumerate_slp(n, target_k))
        if (rank_matrix(cand).leq(rm)) level.push_back(cand);
    Partition ambient = two_column_partition(target_k, n);
    std::vector<ClosureComponent> out;
    for (const SymmetricLinkPattern& cand : level) {
        bool maximal = true;
        for (const SymmetricLinkPattern& other : level)
            if (!(cand == other) && leq(cand, other)) {
                maximal = false;
                break;
            }
        if (!maximal) continue;
        if (orbit_dim_formula(cand) == half_dim(target_k, n))
            out.push_back(
                {ClosureComponent::Kind::OrbitalVariety, sdt_of(cand), cand, ambient});
        else
            out.push_back({ClosureComponent::Kind::OrbitClosurePart, std::nullopt, cand, ambient});
    }
    return dedupe(std::move(out));
}

std::string to_string(Codim1Config c) {
    switch (c) {
        case Codim1Config::CentralBridge: return "i.a";
        case Codim1Config::PairBridge: return "i.b";
        case Codim1Config::CentralCross: return "ii";
        case Codim1Config::DoubleCross: return "iii.a";
        case Codim1Config::CentralPairCross: return "iii.b";
    }
    throw std::logic_error("bad codim-1 configuration");
}

namespace {

SymmetricLinkPattern replace_classes(const SymmetricLinkPattern& l,
                                     const std::vector<ArcClass>& remove,
                                     const std::vector<ArcClass>& add) {
    std::set<Arc> arcs(l.arcs().begin(), l.arcs().end());
    for (const ArcClass& c : remove)
        for (const Arc& a : c.arcs()) arcs.erase(a);
    for (const ArcClass& c : add)
        for (const Arc& a : c.arcs()) arcs.insert(a);
    return SymmetricLinkPattern(l.half_size(), std::vector<Arc>(arcs.begin(), arcs.end()));
}

}  // namespace

Codim1Analysis codim1_intersection_analysis(const SymmetricLinkPattern& l) {
    const int c = total_crossings(l), b = total_bridges(l);
    if (c + b != 1)
        throw std::domain_error("pattern is not of codimension 1 in its orbit intersection");

    Codim1Analysis out{Codim1Config::CentralBridge, {}, true};
    if (b == 1) {
        Point f = 0;
        for (Point p : positive_fixed_points(l))
            if (bridge_count(l, p) == 1) f = p;
        Arc bridge(-1, 1);
        for (const Arc& a : l.arcs())
            if (a.left < f && f < a.right) bridge = a;
        if (bridge.left == -bridge.right) {
            out.config = Codim1Config::CentralBridge;
            int j = bridge.right;
            out.maximal_above = {replace_classes(l, {ArcClass::central(j)},
                                                 {ArcClass::central(f)})};
        } else {
            out.config = Codim1Config::PairBridge;
            int j = bridge.left, k = bridge.right;  // 0 < j < f < k
            out.maximal_above = {
                replace_classes(l, {ArcClass::positive_pair(j, k)},
                                {ArcClass::positive_pair(f, k)}),
                replace_classes(l, {ArcClass::positive_pair(j, k)},
                                {ArcClass::positive_pair(j, f)})};
        }
    } else {
        // locate the unique non-negative crossing
        Arc left(-1, 1), right(-1, 1);
        bool found = false;
        for (const Arc& a : l.arcs())
            for (const Arc& bb : l.arcs())
                if (a.left < bb.left && bb.left < a.right && a.right < bb.right &&
                    bb.left >= -a.right) {
                    left = a;
                    right = bb;
                    found = true;
                }
        if (!found) throw std::logic_error("crossing count is 1 but no crossing found");
        if (left.left == -right.right && left.right == -right.left) {
            // mixed pair crossing itself in the center
            out.config = Codim1Config::CentralCross;
            int i = right.left > 0 ? right.left : left.right;
            int j = right.right;
            if (i > j) std::swap(i, j);
            out.maximal_above = {
                replace_classes(l, {ArcClass::mixed_pair(i, j)},
                                {ArcClass::positive_pair(i, j)}),
                replace_classes(l, {ArcClass::mixed_pair(i, j)},
                                {ArcClass::central(i), ArcClass::central(j)})};
        } else if (left.left == -left.right) {
            // central arc crossed by a positive pair arc: i < j < k
            out.config = Codim1Config::CentralPairCross;
            int j = left.right, i = right.left, k = right.right;
            out.maximal_above = {
                replace_classes(l, {ArcClass::central(j), ArcClass::positive_pair(i, k)},
                                {ArcClass::central(i), ArcClass::positive_pair(j, k)}),
                replace_classes(l, {ArcClass::central(j), ArcClass::positive_pair(i, k)},
                                {ArcClass::positive_pair(i, j), ArcClass::central(k)})};
        } else {
            out.config = Codim1Config::DoubleCross;
            int i = left.left, k = left.right, j = right.left, el = right.right;
            out.maximal_above = {
                replace_classes(l,
                                {ArcClass::positive_pair(i, k), ArcClass::positive_pair(j, el)},
                                {ArcClass::positive_pair(i, el), ArcClass::positive_pair(j, k)}),
                replace_classes(l,
                                {ArcClass::positive_pair(i, k), ArcClass::positive_pair(j, el)},
                                {ArcClass::positive_pair(i, j), ArcClass::positive_pair(k, el)})};
        }
    }

    if (out.maximal_above.size() == 2) {
        // the intersection of the two closures within the arc-count level
        const int k = arc_count(l), n = l.half_size();
        RankMatrix r1 = rank_matrix(out.maximal_above[0]);
        RankMatrix r2 = rank_matrix(out.maximal_above[1]);
        std::vector<SymmetricLinkPattern> common;
        for (const SymmetricLinkPattern& cand : enumerate_slp(n, k)) {
            RankMatrix rc = rank_matrix(cand);
            if (rc.leq(r1) && rc.leq(r2)) common.push_back(cand);
        }
        std::vector<SymmetricLinkPattern> maximal;
        for (const SymmetricLinkPattern& cand : common) {
            bool is_max = true;
            for (const SymmetricLinkPattern& other : common)
                if (!(cand == other) && leq(cand, other)) is_max = false;
            if (is_max) maximal.push_back(cand);
        }
        out.intersection_is_orbit_closure = maximal.size() == 1 && maximal[0] == l;
    }
    return out;
}

TwoColumnSDT parse_sdt(const std::string& text) {
    auto fail = [&](const std::string& msg) { throw ParseError(ParseErrorKind::Syntax, msg); };
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.rfind("n=", 0) != 0) fail("expected \"n=\"");
    std::size_t pos = 2, start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer after n=");
    int n = std::stoi(s.substr(start, pos - start));
    if (pos >= s.size() || s[pos] != ';') fail("expected ';' after n");
    ++pos;
    if (s.rfind("col2=[", pos) != pos) fail("expected \"col2=[\"");
    pos += 6;
    std::vector<Placement> placements(n, Placement::Col1Vertical);
    while (pos < s.size() && s[pos] != ']') {
        start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected a label in col2 list");
        int label = std::stoi(s.substr(start, pos - start));
        if (label < 1 || label > n) fail("label out of range in col2 list");
        Placement p = Placement::Col2Vertical;
        if (pos < s.size() && s[pos] == 'h') {
            p = Placement::Horizontal;
            ++pos;
        }
        placements[label - 1] = p;
        if (pos < s.size() && s[pos] == ',') ++pos;
    }
    if (pos >= s.size() || s[pos] != ']') fail("unterminated col2 list");
    ++pos;
    if (pos < s.size() && s[pos] == ';') ++pos;
    if (pos != s.size()) fail("trailing characters after tableau");
    try {
        return TwoColumnSDT(n, std::move(placements));
    } catch (const std::invalid_argument& e) {
        throw ParseError(ParseErrorKind::Syntax, e.what());
    }
}

std::string format_sdt(const TwoColumnSDT& t) {
    std::ostringstream os;
    os << "n=" << t.n() << "; col2=[";
    bool first = true;
    for (int label : t.col2_labels()) {
        if (!first) os << ",";
        os << label;
        if (t.placement(label) == Placement::Horizontal) os << "h";
        first = false;
    }
    os << "];";
    return os.str();
}

std::string sdt_json(const TwoColumnSDT& t) {
    nlohmann::json j;
    j["n"] = t.n();
    nlohmann::json arr = nlohmann::json::array();
    for (int label = 1; label <= t.n(); ++label) {
        switch (t.placement(label)) {
            case Placement::Col1Vertical:
                arr.push_back("col1");
                break;
            case Placement::Col2Vertical:
                arr.push_back("col2");
                break;
            case Placement::Horizontal:
                arr.push_back("horizontal");
                break;
        }
    }
    j["placement"] = arr;
    return j.dump(2);
}

}  // namespace slporbit
