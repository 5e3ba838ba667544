#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pachner/triangulation.hpp"

namespace pachner {

/// Canonical signature token. Two involution-valid triangulations have equal
/// signatures iff they are simplicially isomorphic; the token is stable
/// across relabelings of tetrahedra and of vertices within tetrahedra.
///
/// Construction: for every (start tetrahedron, start labeling) pair a
/// breadth-first relabeling emits an integer stream (tetrahedron count, then
/// one record per canonical face slot: 0 boundary, 1 joins a new tetrahedron
/// with the gluing permutation normalized to the identity, 2 + 24*target +
/// perm-rank otherwise); the lexicographically least stream wins and is
/// rendered in a 64-character alphabet, 5 bits per character with a
/// continuation bit. Components are canonicalized separately, sorted, and
/// joined with '.'.
std::string canonical_signature(const Triangulation& tri);

struct Isomorphism {
    std::vector<int> tet_map;     // tetrahedron i of a -> tet_map[i] of b
    std::vector<Perm4> vert_map;  // vertex relabeling per tetrahedron of a
};

/// Witness mapping when the signatures agree; nullopt otherwise. Every
/// returned witness transports a's gluing table exactly onto b's.
std::optional<Isomorphism> are_isomorphic(const Triangulation& a, const Triangulation& b);

/// Apply a relabeling witness to a whole triangulation.
Triangulation transport(const Triangulation& a, const Isomorphism& iso, int target_size);

}  // namespace pachner
