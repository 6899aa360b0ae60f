#include <doctest.h>

#include <slporbit/model.hpp>
#include <slporbit/rank_order.hpp>
#include <slporbit/slp.hpp>

#include <set>

using namespace slporbit;

TEST_CASE("matrix index map") {
    CHECK(to_matrix_index(-4, 4) == 1);
    CHECK(to_matrix_index(-1, 4) == 4);
    CHECK(to_matrix_index(1, 4) == 5);
    CHECK(to_matrix_index(4, 4) == 8);
    for (int p = -4; p <= 4; ++p) {
        if (p == 0) continue;
        CHECK(from_matrix_index(to_matrix_index(p, 4), 4) == p);
    }
}

TEST_CASE("rank matrix entries") {
    RankMatrix r = rank_matrix(SymmetricLinkPattern(1, {Arc(-1, 1)}));
    CHECK(r.at(1, 2) == 1);

    RankMatrix r2 = rank_matrix(SymmetricLinkPattern(2, {Arc(1, 2), Arc(-2, -1)}));
    CHECK(r2.at(1, 2) == 1);
    CHECK(r2.at(1, 3) == 1);
    CHECK(r2.at(1, 4) == 2);
    CHECK(r2.at(2, 4) == 1);
    CHECK(r2.at(3, 4) == 1);
    CHECK(r2.at(2, 3) == 0);

    CHECK(rank_matrix(SymmetricLinkPattern(2, {})) == RankMatrix(4));
}

TEST_CASE("symmetrize") {
    // rank matrices of symmetric patterns are antidiagonally symmetric
    for (const SymmetricLinkPattern& l : enumerate_slp(3)) {
        RankMatrix r = rank_matrix(l);
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j) CHECK(r.at(i, j) == r.at(7 - j, 7 - i));
        CHECK(symmetrize(r) == r);
    }
    // a single unmirrored arc (1,2): the min rule zeroes the (1,2)/(3,4)
    // pair and the (1,3)/(2,4) pair but keeps the self-paired (1,4) entry,
    // leaving exactly the rank matrix of the central arc (-2,2)
    RankMatrix r = rank_matrix(LinkPattern(2, {Arc(1, 2)}));
    CHECK(symmetrize(r) == rank_matrix(SymmetricLinkPattern(2, {Arc(-2, 2)})));
    CHECK(symmetrize(RankMatrix(4)) == RankMatrix(4));
}

TEST_CASE("closure order basics") {
    SymmetricLinkPattern pair2(2, {Arc(1, 2), Arc(-2, -1)});
    SymmetricLinkPattern mixed2(2, {Arc(-2, 1), Arc(-1, 2)});
    SymmetricLinkPattern central2(2, {Arc(-2, 2)});
    CHECK(leq(pair2, pair2));
    CHECK(leq(central2, mixed2));
    CHECK(leq(mixed2, pair2));
    CHECK(!leq(pair2, mixed2));
    CHECK_THROWS_AS(leq(pair2.pattern(), LinkPattern(3, {})), std::invalid_argument);
}

TEST_CASE("closure sets") {
    SymmetricLinkPattern empty1(1, {});
    CHECK(closure_set(empty1) == std::vector<SymmetricLinkPattern>{empty1});

    SymmetricLinkPattern central1(1, {Arc(-1, 1)});
    auto cs = closure_set(central1);
    CHECK(cs.size() == 2);

    // closure of the n=2 positive pair: the oracle (entrywise comparison over
    // all six patterns) gives four orbits
    SymmetricLinkPattern pair2(2, {Arc(1, 2), Arc(-2, -1)});
    auto cs2 = closure_set(pair2);
    REQUIRE(cs2.size() == 4);
    std::set<SymmetricLinkPattern> got(cs2.begin(), cs2.end());
    CHECK(got.count(SymmetricLinkPattern(2, {})) == 1);
    CHECK(got.count(SymmetricLinkPattern(2, {Arc(-2, 1), Arc(-1, 2)})) == 1);
    CHECK(got.count(SymmetricLinkPattern(2, {Arc(-2, 2)})) == 1);
    CHECK(got.count(pair2) == 1);
    // the central pair (-1,1)(-2,2) is NOT below the positive pair
    CHECK(got.count(SymmetricLinkPattern(2, {Arc(-1, 1), Arc(-2, 2)})) == 0);
}

TEST_CASE("partial order axioms, exhaustively for n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        auto all = enumerate_slp(n);
        for (const auto& a : all) CHECK(leq(a, a));
        for (const auto& a : all)
            for (const auto& b : all) {
                if (leq(a, b) && leq(b, a)) CHECK(a == b);
                for (const auto& c : all)
                    if (leq(a, b) && leq(b, c)) CHECK(leq(a, c));
            }
    }
}

TEST_CASE("semicontinuity of rank entries along the order") {
    for (const SymmetricLinkPattern& l : enumerate_slp(3)) {
        RankMatrix r = rank_matrix(l);
        for (const SymmetricLinkPattern& below : closure_set(l))
            CHECK(rank_matrix(below).leq(r));
    }
}

TEST_CASE("dimension statistic is monotone along the order at fixed arc count") {
    for (int n = 1; n <= 4; ++n)
        for (const SymmetricLinkPattern& l : enumerate_slp(n)) {
            int cb = total_crossings(l) + total_bridges(l);
            for (const SymmetricLinkPattern& below : closure_set(l))
                if (arc_count(below) == arc_count(l))
                    CHECK(total_crossings(below) + total_bridges(below) >= cb);
        }
}

TEST_CASE("covers") {
    SymmetricLinkPattern central1(1, {Arc(-1, 1)});
    auto cov = covers(central1);
    REQUIRE(cov.size() == 1);
    CHECK(cov[0] == SymmetricLinkPattern(1, {}));
}

TEST_CASE("hasse diagram") {
    HasseDiagram h = hasse(2);
    CHECK(h.nodes.size() == 6);
    // every edge joins comparable nodes with nothing between
    for (auto [lo, hi] : h.edges) {
        CHECK(leq(h.nodes[lo], h.nodes[hi]));
        CHECK(!(h.nodes[lo] == h.nodes[hi]));
    }
    // edges are exactly the covers computed per node
    int cover_total = 0;
    for (const auto& l : h.nodes) cover_total += static_cast<int>(covers(l).size());
    CHECK(static_cast<int>(h.edges.size()) == cover_total);

    HasseDiagram hk = hasse(3, 2);
    for (const auto& node : hk.nodes) CHECK(arc_count(node) == 2);
    std::string json = hasse_json(hk);
    CHECK(json.find("\"nodes\"") != std::string::npos);
    CHECK(json.find("\"edges\"") != std::string::npos);
}
