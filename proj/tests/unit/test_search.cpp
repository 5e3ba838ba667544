#include "doctest.h"
#include "pachner/isosig.hpp"
#include <set>

#include "pachner/search.hpp"

using namespace pachner;

namespace {

Triangulation ball1() { return parse_triangulation("tri 1\n0: bdry bdry bdry bdry\n"); }

Triangulation replay(const Triangulation& start, const std::vector<MoveSite>& path) {
    Triangulation cur = start;
    for (const MoveSite& s : path) cur = apply_move(cur, s).tri;
    return cur;
}

}  // namespace

TEST_CASE("start equals target") {
    const auto b = ball1();
    const SearchResult r = connect(b, b, 5, 1000);
    CHECK(r.status == SearchResult::Status::Connected);
    CHECK(r.path.empty());
}

TEST_CASE("one move away") {
    const auto b = ball1();
    const auto t = apply_move(b, MoveSite{MoveKind::M14, 0, 0, 0}).tri;
    const SearchResult r = connect(b, t, 4, 10000);
    REQUIRE(r.status == SearchResult::Status::Connected);
    CHECK(r.path.size() == 1);
    CHECK(canonical_signature(replay(b, r.path)) == canonical_signature(t));
}

TEST_CASE("walk endpoints reconnect within the walk length") {
    const auto b = ball1();
    for (uint64_t seed : {1u, 2u, 3u}) {
        const Walk w = random_walk(b, 4, seed);
        const SearchResult r = connect(b, w.tri, 4, 100000);
        REQUIRE(r.status == SearchResult::Status::Connected);
        CHECK(r.path.size() <= 4);
        CHECK(canonical_signature(replay(b, r.path)) == canonical_signature(w.tri));
    }
}

TEST_CASE("search is symmetric") {
    const auto b = ball1();
    const Walk w = random_walk(b, 3, 99u);
    const SearchResult fwd = connect(b, w.tri, 4, 100000);
    const SearchResult bwd = connect(w.tri, b, 4, 100000);
    CHECK(fwd.status == bwd.status);
    if (fwd.connected()) CHECK(fwd.path.size() == bwd.path.size());
}

TEST_CASE("budget exhaustion is reported, not crashed") {
    const auto b = ball1();
    const Walk w = random_walk(b, 4, 5u);
    if (canonical_signature(w.tri) != canonical_signature(b)) {
        const SearchResult r = connect(b, w.tri, 4, 3);
        CHECK(r.status == SearchResult::Status::BudgetExceeded);
        const SearchResult r2 = connect(b, w.tri, 0, 1000);
        CHECK(r2.status != SearchResult::Status::Connected);
    }
}

TEST_CASE("deterministic shortest paths") {
    const auto b = ball1();
    const Walk w = random_walk(b, 3, 11u);
    const SearchResult r1 = connect(b, w.tri, 4, 100000);
    const SearchResult r2 = connect(b, w.tri, 4, 100000);
    REQUIRE(r1.status == r2.status);
    CHECK(r1.path == r2.path);
    CHECK(r1.explored == r2.explored);
}

TEST_CASE("explore census") {
    const auto b = ball1();
    const Census c0 = explore(b, 0, 100);
    CHECK(c0.distance.size() == 1);
    CHECK(c0.distance.begin()->second == 0);

    const Census c1 = explore(b, 1, 1000);
    // 1 + number of distinct signatures among the 5 applicable moves.
    const auto sites = enumerate_moves(b);
    REQUIRE(sites.size() == 5);
    std::set<std::string> sigs;
    for (const MoveSite& s : sites) sigs.insert(canonical_signature(apply_move(b, s).tri));
    CHECK(c1.distance.size() == 1 + sigs.size());

    // Monotone: radius-1 census is a subset of radius-2.
    const Census c2 = explore(b, 2, 100000);
    for (const auto& [sig, d] : c1.distance) {
        REQUIRE(c2.distance.count(sig));
        CHECK(c2.distance.at(sig) == d);
    }
    CHECK(c1.complete);

    const Census cut = explore(b, 2, 3);
    CHECK(!cut.complete);
}
