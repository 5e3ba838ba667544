#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pachner/skeleton.hpp"
#include "pachner/triangulation.hpp"

namespace pachner {

/// The four interior Pachner moves plus the boundary layering moves that
/// realize 2-dimensional Pachner moves on the induced boundary
/// triangulation by gluing on (or removing) a single tetrahedron.
enum class MoveKind : uint8_t { M14, M41, M23, M32, BdryLayer, BdryUnlayer };

/// A concrete applicable move. The locus is referenced by a canonical
/// representative:
///   M14        tet                   the tetrahedron to subdivide
///   M41        (tet, idx=vertex)     lex-least corner of a degree-4 vertex
///   M23        (tet, idx=face)       lex-least side of an internal face
///   M32        (tet, idx=edge)       lex-least slot of a degree-3 edge
///   BdryLayer  mode 0: (tet, idx=face)  layer over one boundary face
///              mode 1: (tet, idx=edge)  layer across a boundary edge
///   BdryUnlayer mode 0/1: tet          remove the layered tetrahedron
struct MoveSite {
    MoveKind kind;
    int mode = 0;
    int tet = 0;
    int idx = 0;

    friend auto operator<=>(const MoveSite&, const MoveSite&) = default;
};

std::string to_string(const MoveSite& s);
MoveSite move_site_from_string(const std::string& line);

/// All applicable sites in deterministic order (by kind, mode, tet, idx).
std::vector<MoveSite> enumerate_moves(const Triangulation& tri);

struct MoveResult {
    Triangulation tri;
    MoveSite inverse;  // applicable in `tri`, undoes the move up to isomorphism
};

/// Apply one move. The site must come from enumerate_moves on this exact
/// triangulation; a stale or inapplicable site throws std::logic_error.
MoveResult apply_move(const Triangulation& tri, const MoveSite& site);

struct Walk {
    Triangulation tri;
    std::vector<MoveSite> sequence;
    std::vector<MoveSite> inverses;  // inverse of sequence[k], valid at step k+1
};

/// Deterministic random walk: `steps` sites chosen uniformly from
/// enumerate_moves with an mt19937_64 stream seeded as given.
Walk random_walk(const Triangulation& tri, int steps, uint64_t seed);

struct Isomorphism;  // isosig.hpp

/// Carry a site valid in one triangulation through an isomorphism witness
/// onto the isomorphic copy, renormalizing the locus representative there.
/// Reducing moves relabel tetrahedra, so replaying a recorded inverse
/// sequence requires this transport step (see random_walk's inverses).
MoveSite transport_site(const MoveSite& s, const Isomorphism& iso, const Triangulation& target);

}  // namespace pachner
