#include <set>

#include "doctest.h"
#include "flip2d.hpp"
#include "pachner/isosig.hpp"
#include "pachner/moves.hpp"
#include "pachner/skeleton.hpp"

using namespace pachner;

namespace {

Triangulation ball1() { return parse_triangulation("tri 1\n0: bdry bdry bdry bdry\n"); }

Triangulation ball2() {
    return parse_triangulation("tri 2\n0: 1:0123 bdry bdry bdry\n1: 0:0123 bdry bdry bdry\n");
}

int count_kind(const std::vector<MoveSite>& v, MoveKind k, int mode = -1) {
    int n = 0;
    for (const auto& s : v)
        if (s.kind == k && (mode < 0 || s.mode == mode)) ++n;
    return n;
}

}  // namespace

TEST_CASE("moves on the single tetrahedron") {
    const auto sites = enumerate_moves(ball1());
    CHECK(count_kind(sites, MoveKind::M14) == 1);
    CHECK(count_kind(sites, MoveKind::M41) == 0);
    CHECK(count_kind(sites, MoveKind::M23) == 0);
    CHECK(count_kind(sites, MoveKind::M32) == 0);
    CHECK(count_kind(sites, MoveKind::BdryLayer, 0) == 4);
    // Both boundary faces of every boundary edge lie in the lone
    // tetrahedron, so no edge-layering site qualifies.
    CHECK(count_kind(sites, MoveKind::BdryLayer, 1) == 0);
    CHECK(sites.size() == 5);
}

TEST_CASE("moves on the two-tetrahedron ball") {
    const auto sites = enumerate_moves(ball2());
    CHECK(count_kind(sites, MoveKind::M14) == 2);
    CHECK(count_kind(sites, MoveKind::M23) == 1);
    // The shared face's three edges each meet both tetrahedra on the boundary.
    CHECK(count_kind(sites, MoveKind::BdryLayer, 1) == 3);
    CHECK(count_kind(sites, MoveKind::BdryUnlayer, 0) == 2);
}

TEST_CASE("M14 subdivides and M41 undoes it") {
    const Triangulation b = ball1();
    const auto r = apply_move(b, MoveSite{MoveKind::M14, 0, 0, 0});
    CHECK(r.tri.size() == 4);
    CHECK(r.tri.boundary_face_count() == 4);  // boundary triangulation untouched
    CHECK(validate(r.tri).verdict == ValidationReport::Verdict::BoundedManifold);

    const SkeletonSummary s = skeleton_summary(r.tri);
    CHECK(s.vertex_count == 5);
    CHECK(s.edge_count == 10);
    CHECK(s.face_count == 10);
    CHECK(s.euler_characteristic() == 1);

    // The new interior vertex has degree 4, so its M41 site is offered.
    const auto sites = enumerate_moves(r.tri);
    CHECK(count_kind(sites, MoveKind::M41) >= 1);

    const auto back = apply_move(r.tri, r.inverse);
    CHECK(back.tri.size() == 1);
    CHECK(canonical_signature(back.tri) == canonical_signature(b));
    CHECK(back.inverse.kind == MoveKind::M14);
}

TEST_CASE("M23 creates a degree-3 edge and M32 undoes it") {
    const Triangulation b = ball2();
    const auto r = apply_move(b, MoveSite{MoveKind::M23, 0, 0, 0});
    CHECK(r.tri.size() == 3);
    CHECK(validate(r.tri).verdict == ValidationReport::Verdict::BoundedManifold);
    CHECK(r.tri.boundary_face_count() == 6);

    // New internal edge of degree 3.
    const Skeleton sk = compute_skeleton(r.tri);
    bool found = false;
    for (const auto& e : sk.edges)
        if (e.internal && e.degree == 3) found = true;
    CHECK(found);

    const SkeletonSummary before = skeleton_summary(b), after = skeleton_summary(r.tri);
    CHECK(after.vertex_count == before.vertex_count);
    CHECK(after.edge_count == before.edge_count + 1);
    CHECK(after.face_count == before.face_count + 2);
    CHECK(after.tet_count == before.tet_count + 1);

    const auto back = apply_move(r.tri, r.inverse);
    CHECK(canonical_signature(back.tri) == canonical_signature(b));
}

TEST_CASE("interior moves keep the boundary complex identical") {
    const Triangulation b = ball2();
    std::vector<std::pair<int, int>> slots;
    const std::string before =
        flip2d::canonical_sig(boundary_complex(b, compute_skeleton(b), slots));
    for (const MoveSite& s : enumerate_moves(b)) {
        if (s.kind == MoveKind::BdryLayer || s.kind == MoveKind::BdryUnlayer) continue;
        const auto r = apply_move(b, s);
        const std::string after =
            flip2d::canonical_sig(boundary_complex(r.tri, compute_skeleton(r.tri), slots));
        CHECK(after == before);
    }
}

TEST_CASE("face layering performs a 1-3 flip on the boundary") {
    const Triangulation b = ball2();
    const Skeleton sk = compute_skeleton(b);
    std::vector<std::pair<int, int>> slots;
    const Surface2 bd = boundary_complex(b, sk, slots);

    const MoveSite site{MoveKind::BdryLayer, 0, 0, 1};
    const auto r = apply_move(b, site);
    CHECK(r.tri.size() == 3);
    CHECK(validate(r.tri).verdict == ValidationReport::Verdict::BoundedManifold);

    int tri2d = -1;
    for (size_t i = 0; i < slots.size(); ++i)
        if (slots[i] == std::make_pair(0, 1)) tri2d = static_cast<int>(i);
    REQUIRE(tri2d >= 0);
    std::vector<std::pair<int, int>> slots2;
    const std::string got =
        flip2d::canonical_sig(boundary_complex(r.tri, compute_skeleton(r.tri), slots2));
    CHECK(got == flip2d::canonical_sig(flip2d::flip13(bd, tri2d)));

    const auto back = apply_move(r.tri, r.inverse);
    CHECK(canonical_signature(back.tri) == canonical_signature(b));
}

TEST_CASE("edge layering performs a 2-2 flip on the boundary") {
    const Triangulation b = ball2();
    const Skeleton sk = compute_skeleton(b);
    std::vector<std::pair<int, int>> slots;
    const Surface2 bd = boundary_complex(b, sk, slots);

    MoveSite site{};
    bool have = false;
    for (const MoveSite& s : enumerate_moves(b))
        if (s.kind == MoveKind::BdryLayer && s.mode == 1 && !have) {
            site = s;
            have = true;
        }
    REQUIRE(have);

    const auto r = apply_move(b, site);
    CHECK(r.tri.size() == 3);
    CHECK(r.tri.boundary_face_count() == 6);
    CHECK(validate(r.tri).verdict == ValidationReport::Verdict::BoundedManifold);

    // Locate the flipped side in the 2D complex: the class's two boundary
    // sides sit in distinct triangles of bd.
    const EdgeClass& cls = sk.edges[sk.eclass[site.tet][site.idx]];
    const auto [t1, e1] = cls.slots.front();
    (void)e1;
    const auto [u1, v1] = cls.ends.front();
    const int f1 = cls.start_bface;
    int tri2d = -1;
    for (size_t i = 0; i < slots.size(); ++i)
        if (slots[i] == std::make_pair(t1, f1)) tri2d = static_cast<int>(i);
    REQUIRE(tri2d >= 0);
    const int w1 = 6 - f1 - u1 - v1;
    int side = 0;
    for (int q = 0, l = 0; q < 4; ++q) {
        if (q == f1) continue;
        if (q == w1) side = l;
        ++l;
    }
    std::vector<std::pair<int, int>> slots2;
    const std::string got =
        flip2d::canonical_sig(boundary_complex(r.tri, compute_skeleton(r.tri), slots2));
    CHECK(got == flip2d::canonical_sig(flip2d::flip22(bd, tri2d, side)));

    const auto back = apply_move(r.tri, r.inverse);
    CHECK(canonical_signature(back.tri) == canonical_signature(b));
}

TEST_CASE("round trips over random walks from the balls") {
    for (const Triangulation& start : {ball1(), ball2()}) {
        Triangulation cur = start;
        // Take a deterministic walk, checking the inverse at every step.
        Walk w = random_walk(start, 12, 20240601u);
        Triangulation replay = start;
        for (size_t k = 0; k < w.sequence.size(); ++k) {
            const auto r = apply_move(replay, w.sequence[k]);
            const auto undo = apply_move(r.tri, r.inverse);
            CHECK(canonical_signature(undo.tri) == canonical_signature(replay));
            CHECK(validate(r.tri).is_manifold());
            replay = r.tri;
        }
        CHECK(canonical_signature(replay) == canonical_signature(w.tri));
        (void)cur;
    }
}

TEST_CASE("walk inversion returns to the start") {
    const Triangulation start = ball2();
    const Walk w = random_walk(start, 10, 7u);
    REQUIRE(w.sequence.size() == 10);

    // Forward states; inverses[k] is applicable in states[k+1].
    std::vector<Triangulation> states{start};
    for (const MoveSite& s : w.sequence) states.push_back(apply_move(states.back(), s).tri);

    Triangulation cur = w.tri;
    for (int k = static_cast<int>(w.sequence.size()) - 1; k >= 0; --k) {
        const auto iso = are_isomorphic(states[k + 1], cur);
        REQUIRE(iso.has_value());
        cur = apply_move(cur, transport_site(w.inverses[k], *iso, cur)).tri;
    }
    CHECK(canonical_signature(cur) == canonical_signature(start));
}

TEST_CASE("walks are reproducible and step zero is the identity") {
    const Triangulation start = ball2();
    const Walk w0 = random_walk(start, 0, 99u);
    CHECK(w0.sequence.empty());
    CHECK(w0.tri == start);
    const Walk a = random_walk(start, 6, 42u), b = random_walk(start, 6, 42u);
    CHECK(a.sequence == b.sequence);
    CHECK(canonical_signature(a.tri) == canonical_signature(b.tri));
}

TEST_CASE("move deltas match the boundary-of-4-simplex combinatorics") {
    const Triangulation b2 = ball2();
    for (const MoveSite& s : enumerate_moves(b2)) {
        const auto r = apply_move(b2, s);
        const int delta = r.tri.size() - b2.size();
        switch (s.kind) {
            case MoveKind::M14: CHECK(delta == 3); break;
            case MoveKind::M41: CHECK(delta == -3); break;
            case MoveKind::M23: CHECK(delta == 1); break;
            case MoveKind::M32: CHECK(delta == -1); break;
            case MoveKind::BdryLayer: CHECK(delta == 1); break;
            case MoveKind::BdryUnlayer: CHECK(delta == -1); break;
        }
    }
}

TEST_CASE("stale sites are rejected") {
    CHECK_THROWS_AS(apply_move(ball1(), MoveSite{MoveKind::M23, 0, 0, 0}), std::logic_error);
    CHECK_THROWS_AS(apply_move(ball1(), MoveSite{MoveKind::M14, 0, 5, 0}), std::logic_error);
    CHECK_THROWS_AS(apply_move(ball2(), MoveSite{MoveKind::BdryLayer, 0, 0, 0}),
                    std::logic_error);  // that face is glued
}

TEST_CASE("move sites serialize to one line each") {
    const MoveSite s{MoveKind::BdryLayer, 1, 3, 5};
    CHECK(to_string(s) == "BDRY_LAYER 1 3 5");
    CHECK(move_site_from_string("BDRY_LAYER 1 3 5") == s);
    CHECK(move_site_from_string("M14 2") == MoveSite{MoveKind::M14, 0, 2, 0});
    CHECK_THROWS_AS(move_site_from_string("M99 1"), std::invalid_argument);
    CHECK_THROWS_AS(move_site_from_string("M14"), std::invalid_argument);
}
