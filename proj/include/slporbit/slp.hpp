#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace slporbit {

// Points live in {-n..-1, 1..n}; 0 is never a point.
using Point = int;

struct Arc {
    Point left, right;  // left < right

    Arc(Point l, Point r) : left(l), right(r) {
        if (l >= r) throw std::invalid_argument("arc ends must satisfy left < right");
    }
    friend bool operator==(const Arc& a, const Arc& b) {
        return a.left == b.left && a.right == b.right;
    }
    friend bool operator<(const Arc& a, const Arc& b) {
        return a.left != b.left ? a.left < b.left : a.right < b.right;
    }
    Arc mirror() const { return Arc(-right, -left); }
    bool touches(Point p) const { return left == p || right == p; }
};

enum class ArcClassKind { PositivePair, MixedPair, Central };

// One B-orbit-relevant unit of arcs: a positive pair (i,j)(-i,-j), a mixed
// pair (-i,j)(i,-j), or a central arc (-i,i); 1 <= i < j <= n.
struct ArcClass {
    ArcClassKind kind;
    int i = 0, j = 0;  // Central uses i only

    static ArcClass positive_pair(int i, int j) { return {ArcClassKind::PositivePair, i, j}; }
    static ArcClass mixed_pair(int i, int j) { return {ArcClassKind::MixedPair, i, j}; }
    static ArcClass central(int i) { return {ArcClassKind::Central, i, i}; }

    friend bool operator==(const ArcClass& a, const ArcClass& b) {
        return a.kind == b.kind && a.i == b.i && a.j == b.j;
    }
    friend bool operator<(const ArcClass& a, const ArcClass& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    }
    // The underlying arcs, written left to right.
    std::vector<Arc> arcs() const;
    std::string str() const;
};

// A partial matching of the 2n points, not necessarily symmetric.
class LinkPattern {
  public:
    explicit LinkPattern(int n, std::vector<Arc> arcs = {});

    int half_size() const { return n_; }
    const std::vector<Arc>& arcs() const { return arcs_; }  // sorted by (left, right)
    bool contains(const Arc& a) const;
    bool is_endpoint(Point p) const;
    bool is_symmetric() const;

    friend bool operator==(const LinkPattern& a, const LinkPattern& b) {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_;
    }
    friend bool operator<(const LinkPattern& a, const LinkPattern& b) {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.arcs_ < b.arcs_;
    }

  private:
    int n_;
    std::vector<Arc> arcs_;
};

class SymmetricLinkPattern {
  public:
    explicit SymmetricLinkPattern(LinkPattern lp);
    SymmetricLinkPattern(int n, std::vector<Arc> arcs)
        : SymmetricLinkPattern(LinkPattern(n, std::move(arcs))) {}

    const LinkPattern& pattern() const { return lp_; }
    int half_size() const { return lp_.half_size(); }
    const std::vector<Arc>& arcs() const { return lp_.arcs(); }
    bool contains(const Arc& a) const { return lp_.contains(a); }

    // Decomposition into positive pairs, mixed pairs and central arcs.
    std::vector<ArcClass> classes() const;
    bool contains_class(const ArcClass& c) const;

    friend bool operator==(const SymmetricLinkPattern& a, const SymmetricLinkPattern& b) {
        return a.lp_ == b.lp_;
    }
    friend bool operator!=(const SymmetricLinkPattern& a, const SymmetricLinkPattern& b) {
        return !(a == b);
    }
    friend bool operator<(const SymmetricLinkPattern& a, const SymmetricLinkPattern& b) {
        return a.lp_ < b.lp_;
    }

  private:
    LinkPattern lp_;
};

// --- statistics -------------------------------------------------------------

int arc_count(const LinkPattern& lp);
inline int arc_count(const SymmetricLinkPattern& l) { return arc_count(l.pattern()); }

std::set<Point> endpoints(const LinkPattern& lp);
std::set<Point> fixed_points(const LinkPattern& lp);
std::set<Point> positive_endpoints(const LinkPattern& lp);
std::set<Point> positive_fixed_points(const LinkPattern& lp);
inline std::set<Point> endpoints(const SymmetricLinkPattern& l) { return endpoints(l.pattern()); }
inline std::set<Point> fixed_points(const SymmetricLinkPattern& l) {
    return fixed_points(l.pattern());
}
inline std::set<Point> positive_endpoints(const SymmetricLinkPattern& l) {
    return positive_endpoints(l.pattern());
}
inline std::set<Point> positive_fixed_points(const SymmetricLinkPattern& l) {
    return positive_fixed_points(l.pattern());
}

// Number of arcs <i,j> with i < f < j; f must be a fixed point.
int bridge_count(const SymmetricLinkPattern& l, Point f);
// b(L): bridges summed over positive fixed points.
int total_bridges(const SymmetricLinkPattern& l);

// c_L(<i,j>) = #{ <k,l> in L : i < k < j < l and k >= -j }, the number of arcs
// that <i,j> crosses non-negatively on the right.  The displayed set in the
// source text has a strict k > -j, but k = -j does occur (the mirror partner
// of a mixed arc) and only the weak inequality is consistent with the
// dimension formula; see the tests.
int crossing_count(const SymmetricLinkPattern& l, const Arc& a);
// c(L): summed over all arcs.
int total_crossings(const SymmetricLinkPattern& l);

// Arcs not strictly nested inside any other arc.
std::vector<Arc> external_arcs(const LinkPattern& lp);
inline std::vector<Arc> external_arcs(const SymmetricLinkPattern& l) {
    return external_arcs(l.pattern());
}
// E'(L): one class representative per external arc class.
std::vector<ArcClass> positive_external_arcs(const SymmetricLinkPattern& l);

// Number of fixed points in the closed interval [s,t] (0 is not a point).
int fixed_in_interval(const LinkPattern& lp, Point s, Point t);
inline int fixed_in_interval(const SymmetricLinkPattern& l, Point s, Point t) {
    return fixed_in_interval(l.pattern(), s, t);
}

// Drop all arcs meeting -n or n; the result lives on 2(n-1) points.
SymmetricLinkPattern project(const SymmetricLinkPattern& l);

// --- enumeration ------------------------------------------------------------

// All of SLP_2n (or SLP_2n(k) when k >= 0), sorted by the canonical arc
// encoding: arc lists compared lexicographically with arcs as (left, right).
std::vector<SymmetricLinkPattern> enumerate_slp(int n, int k = -1);

// Involution-count recurrence a(n) = 2(a(n-1) + (n-1) a(n-2)), the size of
// SLP_2n; used as an independent oracle in tests.
long long slp_count_recurrence(int n);

// --- text form --------------------------------------------------------------

enum class ParseErrorKind { Syntax, MalformedArc, DuplicateEndpoint, Asymmetry };

class ParseError : public std::runtime_error {
  public:
    ParseError(ParseErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ParseErrorKind kind() const { return kind_; }

  private:
    ParseErrorKind kind_;
};

// Grammar: "n=" INT ";" ( "(" INT "," INT ")" )*     (whitespace-insensitive)
// With symmetric_complete, missing mirror arcs are synthesized.
SymmetricLinkPattern parse_slp(const std::string& text, bool symmetric_complete = false);
std::string format_slp(const SymmetricLinkPattern& l);

}  // namespace slporbit
