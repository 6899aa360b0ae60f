#include <doctest.h>

#include <slporbit/slp.hpp>

#include <set>

using namespace slporbit;

namespace {
// the running example: L = (1,2)(-1,-2)(3,-6)(-3,6)(-4,4) in SLP_12(5)
SymmetricLinkPattern running_example() {
    return parse_slp("n=6; (1,2)(-1,-2)(3,-6)(-3,6)(-4,4)");
}
}  // namespace

TEST_CASE("arc count") {
    CHECK(arc_count(SymmetricLinkPattern(3, {})) == 0);
    CHECK(arc_count(running_example()) == 5);
    CHECK(arc_count(SymmetricLinkPattern(1, {Arc(-1, 1)})) == 1);
}

TEST_CASE("endpoints and fixed points") {
    SymmetricLinkPattern l(6, {Arc(-4, 4)});
    CHECK(positive_fixed_points(l) == std::set<Point>{1, 2, 3, 5, 6});
    CHECK(positive_fixed_points(running_example()) == std::set<Point>{5});
    SymmetricLinkPattern empty2(2, {});
    CHECK(endpoints(empty2).empty());
    CHECK(fixed_points(empty2) == std::set<Point>{-2, -1, 1, 2});
}

TEST_CASE("bridges") {
    CHECK(bridge_count(running_example(), 5) == 1);
    CHECK(total_bridges(running_example()) == 1);
    SymmetricLinkPattern central2(2, {Arc(-2, 2)});
    CHECK(bridge_count(central2, 1) == 1);
    CHECK(total_bridges(SymmetricLinkPattern(2, {Arc(1, 2), Arc(-2, -1)})) == 0);
    CHECK_THROWS_AS(bridge_count(central2, 2), std::invalid_argument);
}

TEST_CASE("crossings match the worked example") {
    SymmetricLinkPattern l = running_example();
    CHECK(crossing_count(l, Arc(-6, 3)) == 1);
    CHECK(crossing_count(l, Arc(-4, 4)) == 1);
    CHECK(total_crossings(l) == 2);
    CHECK_THROWS_AS(crossing_count(l, Arc(1, 3)), std::invalid_argument);
}

TEST_CASE("the central cross counts once") {
    // The two arcs of a mixed pair cross each other with k = -j exactly on
    // the boundary of the defining inequality; the weak reading (>=) is the
    // one consistent with the dimension formula, see test_model.
    SymmetricLinkPattern l(2, {Arc(-2, 1), Arc(-1, 2)});
    CHECK(crossing_count(l, Arc(-2, 1)) == 1);
    CHECK(crossing_count(l, Arc(-1, 2)) == 0);
    CHECK(total_crossings(l) == 1);
    // strict reading would give 0 for the left arc
    int strict = 0;
    for (const Arc& b : l.arcs())
        if (-2 < b.left && b.left < 1 && 1 < b.right && b.left > -1) ++strict;
    CHECK(strict == 0);
}

TEST_CASE("special-case crossing reductions agree with the general formula") {
    for (int n = 2; n <= 4; ++n) {
        for (const SymmetricLinkPattern& l : enumerate_slp(n)) {
            for (const ArcClass& c : l.classes()) {
                switch (c.kind) {
                    case ArcClassKind::PositivePair: {
                        // c((i,j)) = #{(k,l): i<k<j<l}, c((-j,-i)) = 0
                        int expect = 0;
                        for (const Arc& b : l.arcs())
                            if (c.i < b.left && b.left < c.j && c.j < b.right) ++expect;
                        CHECK(crossing_count(l, Arc(c.i, c.j)) == expect);
                        CHECK(crossing_count(l, Arc(-c.j, -c.i)) == 0);
                        break;
                    }
                    case ArcClassKind::Central: {
                        int expect = 0;
                        for (const Arc& b : l.arcs())
                            if (-c.i < b.left && b.left < c.i && c.i < b.right) ++expect;
                        CHECK(crossing_count(l, Arc(-c.i, c.i)) == expect);
                        break;
                    }
                    case ArcClassKind::MixedPair: {
                        // c((i,-j)) counts -i <= k < i < l (the mirror arc
                        // included); c((-i,j)) counts -i < k < j < l
                        int e1 = 0, e2 = 0;
                        for (const Arc& b : l.arcs()) {
                            if (-c.i <= b.left && b.left < c.i && c.i < b.right) ++e1;
                            if (-c.i < b.left && b.left < c.j && c.j < b.right) ++e2;
                        }
                        CHECK(crossing_count(l, Arc(-c.j, c.i)) == e1);
                        CHECK(crossing_count(l, Arc(-c.i, c.j)) == e2);
                        break;
                    }
                }
            }
        }
    }
}

TEST_CASE("external arcs") {
    // L_T of the n=7 example
    SymmetricLinkPattern lt = parse_slp("n=7; (1,2)(-1,-2)(-3,3)(-4,4)(6,7)(-6,-7)");
    auto ext = positive_external_arcs(lt);
    REQUIRE(ext.size() == 2);
    CHECK(ext[0] == ArcClass::positive_pair(6, 7));
    CHECK(ext[1] == ArcClass::central(4));

    SymmetricLinkPattern nested(2, {Arc(-2, 2), Arc(-1, 1)});
    auto e2 = positive_external_arcs(nested);
    REQUIRE(e2.size() == 1);
    CHECK(e2[0] == ArcClass::central(2));

    SymmetricLinkPattern pair2(2, {Arc(1, 2), Arc(-2, -1)});
    auto e3 = positive_external_arcs(pair2);
    REQUIRE(e3.size() == 1);
    CHECK(e3[0] == ArcClass::positive_pair(1, 2));
}

TEST_CASE("projection") {
    SymmetricLinkPattern l = running_example();
    SymmetricLinkPattern p = project(l);
    CHECK(p.half_size() == 5);
    CHECK(p == SymmetricLinkPattern(5, {Arc(1, 2), Arc(-2, -1), Arc(-4, 4)}));
    CHECK(project(SymmetricLinkPattern(2, {Arc(-2, 2)})) == SymmetricLinkPattern(1, {}));
    CHECK(project(SymmetricLinkPattern(3, {Arc(1, 2), Arc(-2, -1)})) ==
          SymmetricLinkPattern(2, {Arc(1, 2), Arc(-2, -1)}));
    CHECK_THROWS_AS(project(SymmetricLinkPattern(1, {Arc(-1, 1)})), std::invalid_argument);
}

TEST_CASE("enumeration counts follow the involution recurrence") {
    CHECK(slp_count_recurrence(0) == 1);
    CHECK(slp_count_recurrence(1) == 2);
    CHECK(slp_count_recurrence(2) == 6);
    CHECK(slp_count_recurrence(3) == 20);
    CHECK(slp_count_recurrence(4) == 76);
    CHECK(slp_count_recurrence(5) == 312);
    for (int n = 1; n <= 6; ++n) {
        auto all = enumerate_slp(n);
        CHECK(static_cast<long long>(all.size()) == slp_count_recurrence(n));
        // no duplicates, all symmetric, sorted canonical order
        for (std::size_t i = 0; i < all.size(); ++i) {
            CHECK(all[i].pattern().is_symmetric());
            if (i > 0) CHECK(all[i - 1] < all[i]);
        }
    }
    CHECK(enumerate_slp(1).size() == 2);
    CHECK(enumerate_slp(3, 1).size() == 3);   // the three central arcs
    CHECK(enumerate_slp(3, 2).size() == 9);   // 3 central pairs + 6 index-pair classes
}

TEST_CASE("symmetry closure of enumeration") {
    for (const SymmetricLinkPattern& l : enumerate_slp(3))
        for (const Arc& a : l.arcs()) CHECK(l.contains(a.mirror()));
}

TEST_CASE("class decomposition counts arcs") {
    for (const SymmetricLinkPattern& l : enumerate_slp(4)) {
        int p = 0, q = 0, r = 0;
        for (const ArcClass& c : l.classes()) {
            if (c.kind == ArcClassKind::PositivePair) ++p;
            if (c.kind == ArcClassKind::MixedPair) ++q;
            if (c.kind == ArcClassKind::Central) ++r;
        }
        CHECK(arc_count(l) == 2 * p + 2 * q + r);
    }
}

TEST_CASE("parse and format") {
    SymmetricLinkPattern l = running_example();
    CHECK(parse_slp(format_slp(l)) == l);
    CHECK(format_slp(l) == "n=6; (-6,3)(-4,4)(-3,6)(-2,-1)(1,2)");
    CHECK(parse_slp("n=2;") == SymmetricLinkPattern(2, {}));
    CHECK(parse_slp("  n = 2 ; ( 1 , 2 ) (-2,-1)") ==
          SymmetricLinkPattern(2, {Arc(1, 2), Arc(-2, -1)}));
    // mirror synthesis
    CHECK(parse_slp("n=2; (1,2)", true) == SymmetricLinkPattern(2, {Arc(1, 2), Arc(-2, -1)}));

    CHECK_THROWS_WITH_AS(parse_slp("n=2; (1,2)"), "mirror arc of (1,2) is missing", ParseError);
    try {
        parse_slp("n=2; (1,2)");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseErrorKind::Asymmetry);
    }
    try {
        parse_slp("n=2; (1,1)");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseErrorKind::MalformedArc);
    }
    try {
        parse_slp("n=2; (1,2)(-1,2)(-2,-1)(2,...");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseErrorKind::DuplicateEndpoint);
    }
    try {
        parse_slp("m=2;");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseErrorKind::Syntax);
    }
    // round trip across the whole enumeration
    for (const SymmetricLinkPattern& x : enumerate_slp(3)) CHECK(parse_slp(format_slp(x)) == x);
}

TEST_CASE("fixed points in an interval") {
    SymmetricLinkPattern l = running_example();
    CHECK(fixed_in_interval(l, -5, 5) == 2);
    CHECK(fixed_in_interval(l, 1, 6) == 1);
    CHECK(fixed_in_interval(l, 1, 4) == 0);
}
