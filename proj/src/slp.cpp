#include <slporbit/slp.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace slporbit {

std::vector<Arc> ArcClass::arcs() const {
    switch (kind) {
        case ArcClassKind::PositivePair:
            return {Arc(-j, -i), Arc(i, j)};
        case ArcClassKind::MixedPair:
            return {Arc(-j, i), Arc(-i, j)};
        case ArcClassKind::Central:
            return {Arc(-i, i)};
    }
    throw std::logic_error("bad arc class");
}

std::string ArcClass::str() const {
    std::ostringstream os;
    switch (kind) {
        case ArcClassKind::PositivePair:
            os << "(" << i << "," << j << ")";
            break;
        case ArcClassKind::MixedPair:
            os << "(" << i << ",-" << j << ")";
            break;
        case ArcClassKind::Central:
            os << "(-" << i << "," << i << ")";
            break;
    }
    return os.str();
}

LinkPattern::LinkPattern(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n_ <= 0) throw std::invalid_argument("link pattern needs n >= 1");
    std::sort(arcs_.begin(), arcs_.end());
    std::set<Point> seen;
    for (const Arc& a : arcs_) {
        for (Point p : {a.left, a.right}) {
            if (p == 0 || p < -n_ || p > n_)
                throw std::invalid_argument("arc endpoint out of range");
            if (!seen.insert(p).second) throw std::invalid_argument("duplicate arc endpoint");
        }
    }
}

bool LinkPattern::contains(const Arc& a) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), a);
}

bool LinkPattern::is_endpoint(Point p) const {
    for (const Arc& a : arcs_)
        if (a.touches(p)) return true;
    return false;
}

bool LinkPattern::is_symmetric() const {
    for (const Arc& a : arcs_)
        if (!contains(a.mirror())) return false;
    return true;
}

SymmetricLinkPattern::SymmetricLinkPattern(LinkPattern lp) : lp_(std::move(lp)) {
    if (!lp_.is_symmetric())
        throw std::invalid_argument("link pattern is not symmetric under point negation");
}

std::vector<ArcClass> SymmetricLinkPattern::classes() const {
    std::vector<ArcClass> out;
    for (const Arc& a : arcs()) {
        if (a.left == -a.right) {
            out.push_back(ArcClass::central(a.right));
        } else if (a.left > 0) {
            out.push_back(ArcClass::positive_pair(a.left, a.right));
        } else if (a.right > 0 && -a.left < a.right) {
            // <-i,j> with i < j represents the mixed pair
            out.push_back(ArcClass::mixed_pair(-a.left, a.right));
        }
        // negative arcs and <-j,i> are mirrors of the above
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool SymmetricLinkPattern::contains_class(const ArcClass& c) const {
    for (const Arc& a : c.arcs())
        if (!contains(a)) return false;
    return true;
}

int arc_count(const LinkPattern& lp) { return static_cast<int>(lp.arcs().size()); }

std::set<Point> endpoints(const LinkPattern& lp) {
    std::set<Point> s;
    for (const Arc& a : lp.arcs()) {
        s.insert(a.left);
        s.insert(a.right);
    }
    return s;
}

std::set<Point> fixed_points(const LinkPattern& lp) {
    std::set<Point> ep = endpoints(lp), s;
    for (int p = -lp.half_size(); p <= lp.half_size(); ++p) {
        if (p == 0) continue;
        if (!ep.count(p)) s.insert(p);
    }
    return s;
}

namespace {
std::set<Point> positive_part(std::set<Point> s) {
    std::set<Point> out;
    for (Point p : s)
        if (p > 0) out.insert(p);
    return out;
}
}  // namespace

std::set<Point> positive_endpoints(const LinkPattern& lp) { return positive_part(endpoints(lp)); }
std::set<Point> positive_fixed_points(const LinkPattern& lp) {
    return positive_part(fixed_points(lp));
}

int bridge_count(const SymmetricLinkPattern& l, Point f) {
    if (l.pattern().is_endpoint(f) || f == 0 || f < -l.half_size() || f > l.half_size())
        throw std::invalid_argument("bridge_count: not a fixed point");
    int count = 0;
    for (const Arc& a : l.arcs())
        if (a.left < f && f < a.right) ++count;
    return count;
}

int total_bridges(const SymmetricLinkPattern& l) {
    int count = 0;
    for (Point f : positive_fixed_points(l)) count += bridge_count(l, f);
    return count;
}

int crossing_count(const SymmetricLinkPattern& l, const Arc& a) {
    if (!l.contains(a)) throw std::invalid_argument("crossing_count: arc not in pattern");
    int count = 0;
    for (const Arc& b : l.arcs())
        if (a.left < b.left && b.left < a.right && a.right < b.right && b.left >= -a.right)
            ++count;
    return count;
}

int total_crossings(const SymmetricLinkPattern& l) {
    int count = 0;
    for (const Arc& a : l.arcs()) count += crossing_count(l, a);
    return count;
}

std::vector<Arc> external_arcs(const LinkPattern& lp) {
    std::vector<Arc> out;
    for (const Arc& a : lp.arcs()) {
        bool nested = false;
        for (const Arc& b : lp.arcs())
            if (b.left < a.left && a.right < b.right) {
                nested = true;
                break;
            }
        if (!nested) out.push_back(a);
    }
    return out;
}

std::vector<ArcClass> positive_external_arcs(const SymmetricLinkPattern& l) {
    std::vector<ArcClass> out;
    std::vector<Arc> ext = external_arcs(l.pattern());
    for (const ArcClass& c : l.classes()) {
        std::vector<Arc> carcs = c.arcs();
        if (std::find(ext.begin(), ext.end(), carcs.back()) != ext.end()) out.push_back(c);
    }
    return out;
}

int fixed_in_interval(const LinkPattern& lp, Point s, Point t) {
    if (s > t) throw std::invalid_argument("empty interval");
    int count = 0;
    for (Point f : fixed_points(lp))
        if (s <= f && f <= t) ++count;
    return count;
}

SymmetricLinkPattern project(const SymmetricLinkPattern& l) {
    int n = l.half_size();
    if (n < 2) throw std::invalid_argument("project: needs n >= 2");
    std::vector<Arc> kept;
    for (const Arc& a : l.arcs())
        if (!a.touches(n) && !a.touches(-n)) kept.push_back(a);
    return SymmetricLinkPattern(n - 1, std::move(kept));
}

namespace {

// Recursive generation: repeatedly resolve the largest unused index of {1..n}
// as fixed, central, or joined with a smaller unused index (two ways).
void enumerate_rec(std::vector<int>& free_idx, std::vector<ArcClass>& acc,
                   std::vector<std::vector<ArcClass>>& out) {
    if (free_idx.empty()) {
        out.push_back(acc);
        return;
    }
    int m = free_idx.back();
    free_idx.pop_back();
    // fixed
    enumerate_rec(free_idx, acc, out);
    // central
    acc.push_back(ArcClass::central(m));
    enumerate_rec(free_idx, acc, out);
    acc.pop_back();
    // paired with a smaller index
    for (std::size_t pos = 0; pos < free_idx.size(); ++pos) {
        int j = free_idx[pos];
        free_idx.erase(free_idx.begin() + pos);
        for (ArcClass c : {ArcClass::positive_pair(j, m), ArcClass::mixed_pair(j, m)}) {
            acc.push_back(c);
            enumerate_rec(free_idx, acc, out);
            acc.pop_back();
        }
        free_idx.insert(free_idx.begin() + pos, j);
    }
    free_idx.push_back(m);
}

}  // namespace

std::vector<SymmetricLinkPattern> enumerate_slp(int n, int k) {
    if (n <= 0) throw std::invalid_argument("enumerate_slp: n >= 1 required");
    if (k > n) throw std::invalid_argument("enumerate_slp: k <= n required");
    std::vector<int> free_idx;
    for (int i = 1; i <= n; ++i) free_idx.push_back(i);
    std::vector<std::vector<ArcClass>> raw;
    std::vector<ArcClass> acc;
    enumerate_rec(free_idx, acc, raw);

    std::vector<SymmetricLinkPattern> out;
    for (const auto& classes : raw) {
        std::vector<Arc> arcs;
        for (const ArcClass& c : classes)
            for (const Arc& a : c.arcs()) arcs.push_back(a);
        SymmetricLinkPattern l(n, std::move(arcs));
        if (k >= 0 && arc_count(l) != k) continue;
        out.push_back(std::move(l));
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long slp_count_recurrence(int n) {
    if (n < 0) throw std::invalid_argument("negative n");
    long long prev2 = 1, prev1 = 2;  // a(0), a(1)
    if (n == 0) return 1;
    if (n == 1) return 2;
    for (int i = 2; i <= n; ++i) {
        long long cur = 2 * (prev1 + (i - 1) * prev2);
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool done() {
        skip_ws();
        return pos == s.size();
    }
    int integer(ParseErrorKind kind) {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw ParseError(kind, "expected integer near position " + std::to_string(start));
        return std::stoi(s.substr(start, pos - start));
    }
};

}  // namespace

SymmetricLinkPattern parse_slp(const std::string& text, bool symmetric_complete) {
    Cursor c{text};
    if (!c.eat('n'))
        throw ParseError(ParseErrorKind::Syntax, "expected \"n=\" at start of pattern");
    if (!c.eat('=')) throw ParseError(ParseErrorKind::Syntax, "expected '=' after 'n'");
    int n = c.integer(ParseErrorKind::Syntax);
    if (n <= 0) throw ParseError(ParseErrorKind::Syntax, "n must be positive");
    if (!c.eat(';')) throw ParseError(ParseErrorKind::Syntax, "expected ';' after n");

    std::set<Arc> arcs;
    std::set<Point> used;
    while (!c.done()) {
        if (!c.eat('(')) throw ParseError(ParseErrorKind::MalformedArc, "expected '('");
        int a = c.integer(ParseErrorKind::MalformedArc);
        if (!c.eat(',')) throw ParseError(ParseErrorKind::MalformedArc, "expected ',' in arc");
        int b = c.integer(ParseErrorKind::MalformedArc);
        if (!c.eat(')')) throw ParseError(ParseErrorKind::MalformedArc, "expected ')'");
        if (a == b || a == 0 || b == 0 || std::abs(a) > n || std::abs(b) > n)
            throw ParseError(ParseErrorKind::MalformedArc,
                             "arc (" + std::to_string(a) + "," + std::to_string(b) +
                                 ") is not a pair of distinct nonzero points in range");
        for (int p : {a, b})
            if (!used.insert(p).second)
                throw ParseError(ParseErrorKind::DuplicateEndpoint,
                                 "point " + std::to_string(p) + " used twice");
        arcs.insert(Arc(std::min(a, b), std::max(a, b)));
    }
    if (symmetric_complete) {
        std::set<Arc> completed = arcs;
        for (const Arc& a : arcs) {
            Arc m = a.mirror();
            if (completed.count(m)) continue;
            for (Point p : {m.left, m.right})
                if (used.count(p))
                    throw ParseError(ParseErrorKind::DuplicateEndpoint,
                                     "mirror of arc reuses point " + std::to_string(p));
            completed.insert(m);
            used.insert(m.left);
            used.insert(m.right);
        }
        arcs = std::move(completed);
    }
    std::vector<Arc> v(arcs.begin(), arcs.end());
    for (const Arc& a : v)
        if (!arcs.count(a.mirror()))
            throw ParseError(ParseErrorKind::Asymmetry,
                             "mirror arc of (" + std::to_string(a.left) + "," +
                                 std::to_string(a.right) + ") is missing");
    return SymmetricLinkPattern(n, std::move(v));
}

std::string format_slp(const SymmetricLinkPattern& l) {
    std::ostringstream os;
    os << "n=" << l.half_size() << ";";
    bool first = true;
    for (const Arc& a : l.arcs()) {
        os << (first ? " " : "") << "(" << a.left << "," << a.right << ")";
        first = false;
    }
    return os.str();
}

}  // namespace slporbit
