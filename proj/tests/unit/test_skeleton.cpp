#include "doctest.h"
#include "oracles.hpp"
#include "pachner/skeleton.hpp"

using namespace pachner;

TEST_CASE("skeleton of a single tetrahedron") {
    const Triangulation t = parse_triangulation("tri 1\n0: bdry bdry bdry bdry\n");
    const SkeletonSummary s = skeleton_summary(t);
    CHECK(s.vertex_count == 4);
    CHECK(s.edge_count == 6);
    CHECK(s.face_count == 4);
    CHECK(s.tet_count == 1);
    CHECK(s.boundary_face_count == 4);
    CHECK(s.euler_characteristic() == 1);

    const ValidationReport r = validate(t);
    CHECK(r.verdict == ValidationReport::Verdict::BoundedManifold);
    CHECK(r.verdict_text() == "3-manifold with boundary");
    for (const auto& [v, type] : r.link_types) CHECK(type == LinkType::Disc);

    const auto b = boundary_components(t);
    REQUIRE(b.size() == 1);
    CHECK(b[0].chi == 2);
    CHECK(b[0].orientable);
    CHECK(b[0].faces.size() == 4);
    CHECK(!all_tori(b));

    CHECK(is_orientable(t));
    CHECK(oracles::orientable_by_enumeration(t));
}

TEST_CASE("skeleton of two tetrahedra glued along one face") {
    const Triangulation t = parse_triangulation(
        "tri 2\n0: 1:0123 bdry bdry bdry\n1: 0:0123 bdry bdry bdry\n");
    const SkeletonSummary s = skeleton_summary(t);
    CHECK(s.vertex_count == 5);
    CHECK(s.edge_count == 9);
    CHECK(s.face_count == 7);
    CHECK(s.tet_count == 2);
    CHECK(s.euler_characteristic() == 1);
    CHECK(s.vertex_count == oracles::vertex_classes_by_scanning(t));
    // 2*(internal faces) + boundary = 4t
    CHECK(2 * 1 + s.boundary_face_count == 8);

    const ValidationReport r = validate(t);
    CHECK(r.verdict == ValidationReport::Verdict::BoundedManifold);
    CHECK(validate(t).verdict == r.verdict);  // pure

    const auto b = boundary_components(t);
    REQUIRE(b.size() == 1);
    CHECK(b[0].chi == 2);
}

TEST_CASE("face count identity holds on assorted gluings") {
    for (const char* text : {
             "tri 1\n0: bdry bdry bdry bdry\n",
             "tri 2\n0: 1:0123 bdry bdry bdry\n1: 0:0123 bdry bdry bdry\n",
             "tri 2\n0: 1:0123 1:0123 bdry bdry\n1: 0:0123 0:0123 bdry bdry\n",
         }) {
        const Triangulation t = parse_triangulation(text);
        const SkeletonSummary s = skeleton_summary(t);
        CHECK(2 * s.face_count == 4 * s.tet_count + s.boundary_face_count);
    }
}

TEST_CASE("edge degrees on the two-tetrahedron ball") {
    const Triangulation t = parse_triangulation(
        "tri 2\n0: 1:0123 bdry bdry bdry\n1: 0:0123 bdry bdry bdry\n");
    const Skeleton sk = compute_skeleton(t);
    int deg1 = 0, deg2 = 0;
    for (const auto& e : sk.edges) {
        CHECK(e.valid);
        CHECK(!e.internal);
        if (e.degree == 1) ++deg1;
        if (e.degree == 2) ++deg2;
    }
    // Three edges on the shared face have degree 2, six outer edges degree 1.
    CHECK(deg2 == 3);
    CHECK(deg1 == 6);
}
