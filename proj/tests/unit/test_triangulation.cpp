#include <string>

#include "doctest.h"
#include "pachner/triangulation.hpp"

using namespace pachner;

TEST_CASE("single unglued tetrahedron") {
    const Triangulation t = parse_triangulation("tri 1\n0: bdry bdry bdry bdry\n");
    CHECK(t.size() == 1);
    CHECK(t.boundary_face_count() == 4);
}

TEST_CASE("two tetrahedra glued along one face by the identity") {
    const std::string text =
        "tri 2\n"
        "0: 1:0123 bdry bdry bdry\n"
        "1: 0:0123 bdry bdry bdry\n";
    const Triangulation t = parse_triangulation(text);
    CHECK(t.size() == 2);
    CHECK(t.boundary_face_count() == 6);
    CHECK(t.gluing(0, 0).tet == 1);
    CHECK(t.gluing(0, 0).target_face(0) == 0);
}

TEST_CASE("serialization is the normal form") {
    const std::string messy =
        "# a comment\n"
        "tri 2   # trailing\n"
        "\n"
        "0:  1:0123  bdry bdry bdry\n"
        "1: 0:0123 bdry bdry bdry   \n";
    const Triangulation t = parse_triangulation(messy);
    const std::string norm = serialize(t);
    CHECK(norm ==
          "tri 2\n"
          "0: 1:0123 bdry bdry bdry\n"
          "1: 0:0123 bdry bdry bdry\n");
    // parse . serialize == identity on normalized text, and normalization
    // is idempotent.
    CHECK(serialize(parse_triangulation(norm)) == norm);
    CHECK(parse_triangulation(norm) == t);
}

TEST_CASE("involution violations are rejected with a position") {
    const std::string bad =
        "tri 2\n"
        "0: bdry 1:1302 bdry bdry\n"
        "1: bdry bdry 0:1302 bdry\n";  // not the inverse of the other side
    CHECK_THROWS_AS(parse_triangulation(bad), ParseError);
    try {
        parse_triangulation(bad);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("involution") != std::string::npos);
    }
}

TEST_CASE("self-gluing of a face is rejected") {
    CHECK_THROWS_AS(parse_triangulation("tri 1\n0: 0:0123 bdry bdry bdry\n"), ParseError);
}

TEST_CASE("index out of range is rejected") {
    CHECK_THROWS_AS(parse_triangulation("tri 1\n0: 2:0123 bdry bdry bdry\n"), ParseError);
}

TEST_CASE("syntax errors carry line and column") {
    try {
        parse_triangulation("tri 1\n0: bdry bdry xyz bdry\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.col == 14);
    }
}

TEST_CASE("glue and unglue maintain the involution") {
    Triangulation t(2);
    t.glue(0, 1, 1, Perm4(0, 2, 1, 3));
    CHECK(t.gluing(1, 2).tet == 0);
    CHECK(t.gluing(1, 2).perm == Perm4(0, 2, 1, 3).inverse());
    CHECK_THROWS_AS(t.glue(0, 1, 1, Perm4()), std::logic_error);
    t.unglue(1, 2);
    CHECK(t.boundary_face_count() == 8);
}
