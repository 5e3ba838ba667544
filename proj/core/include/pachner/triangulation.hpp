#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pachner/perm4.hpp"

namespace pachner {

/// Target of one face slot. Face k of a tetrahedron is the face opposite
/// vertex k; the gluing permutation carries the own face index to the
/// target face index, so the target face is perm[own_face].
struct Gluing {
    int tet = -1;  // -1 marks an unglued (boundary) face
    Perm4 perm;

    bool glued() const { return tet >= 0; }
    int target_face(int own_face) const { return perm[own_face]; }

    friend bool operator==(const Gluing&, const Gluing&) = default;
};

/// Generalized triangulation of a compact 3-manifold: t tetrahedra with a
/// partial involutive face-gluing table. Non-combinatorial identifications
/// are allowed (two tetrahedra may share several faces, a tetrahedron may be
/// glued to itself along distinct faces). Values are treated as immutable
/// once built; all operations elsewhere are pure queries.
class Triangulation {
public:
    explicit Triangulation(int tet_count);

    int size() const { return static_cast<int>(glu_.size()); }

    const Gluing& gluing(int tet, int face) const { return glu_[tet][face]; }
    bool is_boundary_face(int tet, int face) const { return !glu_[tet][face].glued(); }

    int boundary_face_count() const;
    int glued_slot_count() const { return 4 * size() - boundary_face_count(); }

    /// Glue face f of tet i to face sigma[f] of tet j; installs both slots.
    /// Throws on occupied slots, bad indices, or a face glued to itself.
    void glue(int i, int f, int j, const Perm4& sigma);
    void unglue(int i, int f);

    bool operator==(const Triangulation& o) const { return glu_ == o.glu_; }

private:
    void check_slot(int tet, int face) const;
    std::vector<std::array<Gluing, 4>> glu_;
};

/// Parse error with 1-based position in the source text.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ")"),
          line(line),
          col(col) {}
    int line;
    int col;
};

/// Parse the .tri text format:
///   tri <t>
///   <i>: <g0> <g1> <g2> <g3>
/// where each gk is `bdry` or `<j>:<p0p1p2p3>` (permutation digits, image of
/// vertex v at position v). Comments run from `#` to end of line.
Triangulation parse_triangulation(std::string_view text);

/// Canonical .tri serialization: tetrahedra in index order, single spaces,
/// LF line endings, no comments. parse(serialize(T)) == T exactly, and
/// serialize(parse(text)) is the normal form of `text`.
std::string serialize(const Triangulation& tri);

}  // namespace pachner
