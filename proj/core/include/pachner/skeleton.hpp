#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pachner/surface2.hpp"
#include "pachner/triangulation.hpp"

namespace pachner {

/// Fixed numbering of the six edges of a tetrahedron.
inline constexpr std::array<std::array<int, 2>, 6> kEdgeEnds = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

constexpr int edge_index(int u, int v) {
    if (u > v) {
        int t = u;
        u = v;
        v = t;
    }
    constexpr int tbl[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return tbl[u][v];
}

/// The face of a tetrahedron containing vertex v is every face != v; the two
/// faces containing edge {u,v} are the two indices outside {u,v}.
constexpr std::array<int, 2> faces_containing_edge(int u, int v) {
    std::array<int, 2> r{-1, -1};
    int n = 0;
    for (int k = 0; k < 4; ++k)
        if (k != u && k != v) r[n++] = k;
    return r;
}

enum class LinkType { Sphere, Disc, Other };

struct LinkInfo {
    LinkType type = LinkType::Other;
    int chi = 0;
    bool closed = false;
    bool orientable = false;
    int corners = 0;
};

struct EdgeSlotRef {
    int tet;
    int edge;  // kEdgeEnds index
    friend auto operator<=>(const EdgeSlotRef&, const EdgeSlotRef&) = default;
};

/// One identification class of tetrahedron edges, with the ordered walk
/// around the edge. For boundary edges the walk runs between the two
/// boundary face-sides containing the edge.
struct EdgeClass {
    bool internal = false;
    bool valid = true;  // false iff the edge is identified with itself in reverse
    int degree = 0;
    std::vector<EdgeSlotRef> slots;           // walk order
    std::vector<std::pair<int, int>> ends;    // directed endpoints (u,v) per slot
    int start_bface = -1;                     // boundary face of slots.front()'s tet
    int end_bface = -1;                       // boundary face of slots.back()'s tet
};

/// Identified 0/1/2-skeleton of a triangulation, with enough transport data
/// to orient cells (homology) and to walk around edges (moves, layering).
struct Skeleton {
    int tet_count = 0;

    int vertex_classes = 0;
    std::vector<std::array<int, 4>> vclass;                    // corner -> class
    std::vector<std::vector<std::pair<int, int>>> vmembers;    // class -> corners

    std::vector<EdgeClass> edges;
    std::vector<std::array<int, 6>> eclass;   // (tet, edge) -> class
    std::vector<std::array<int8_t, 6>> eflip; // slot ascending order vs class orientation

    int face_classes = 0;
    std::vector<std::array<int, 4>> fclass;        // (tet, face) -> class
    std::vector<std::pair<int, int>> frep;         // class -> representative slot
    std::vector<bool> fboundary;                   // class -> boundary flag
    int internal_face_classes = 0;
    int boundary_face_count = 0;

    std::vector<LinkInfo> links;  // per vertex class
    bool edges_valid = true;

    bool vertex_internal(int vc) const { return links[vc].closed; }
    int euler_characteristic() const {
        return vertex_classes - static_cast<int>(edges.size()) + face_classes - tet_count;
    }
};

Skeleton compute_skeleton(const Triangulation& tri);

/// Elementary counts of the identified skeleton (the spec-facing summary).
struct SkeletonSummary {
    int vertex_count = 0;
    int edge_count = 0;
    int face_count = 0;
    int tet_count = 0;
    int boundary_face_count = 0;
    std::map<int, int> edge_degrees;
    std::map<int, LinkType> vertex_link_types;

    int euler_characteristic() const {
        return vertex_count - edge_count + face_count - tet_count;
    }
};

SkeletonSummary skeleton_summary(const Triangulation& tri);

struct ValidationReport {
    enum class Verdict { ClosedManifold, BoundedManifold, NotAManifold };

    bool involution_ok = true;   // holds by construction for parsed tables
    bool no_self_gluing = true;  // likewise
    bool edges_valid = true;
    std::vector<int> invalid_edges;
    bool links_ok = true;
    std::map<int, LinkType> link_types;
    Verdict verdict = Verdict::NotAManifold;

    bool is_manifold() const { return verdict != Verdict::NotAManifold; }
    std::string verdict_text() const;
};

ValidationReport validate(const Triangulation& tri);

struct BoundaryComponent {
    std::vector<std::pair<int, int>> faces;  // boundary face slots
    int chi = 0;
    bool orientable = false;
};

std::vector<BoundaryComponent> boundary_components(const Triangulation& tri);
bool all_tori(const std::vector<BoundaryComponent>& comps);

bool is_orientable(const Triangulation& tri);

/// The boundary surface as a 2-dimensional triangulation. slot_of maps each
/// 2D triangle back to its boundary face slot; corners of each triangle are
/// the face's vertex positions in ascending order.
Surface2 boundary_complex(const Triangulation& tri, const Skeleton& sk,
                          std::vector<std::pair<int, int>>& slot_of);

}  // namespace pachner
