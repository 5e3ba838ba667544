#include "pachner/homology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pachner {

namespace {

// Parity of the 3-element map sending slot face vertices (ascending) onto
// the representative slot's (ascending) through the gluing permutation.
int face_transport_sign(const Triangulation& tri, int tet, int face, int rep_tet, int rep_face) {
    if (tet == rep_tet && face == rep_face) return 1;
    const Gluing& g = tri.gluing(tet, face);
    int a[3], b[3], n = 0;
    for (int q = 0; q < 4; ++q)
        if (q != face) a[n++] = q;
    n = 0;
    for (int q = 0; q < 4; ++q)
        if (q != rep_face) b[n++] = q;
    int pi[3];
    for (int m = 0; m < 3; ++m) {
        const int img = g.perm[a[m]];
        pi[m] = img == b[0] ? 0 : img == b[1] ? 1 : 2;
    }
    int inv = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (pi[i] > pi[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

// Sign of the directed per-slot edge (u -> v) against its class orientation.
int edge_dir_sign(const Skeleton& sk, int tet, int u, int v) {
    const int e = edge_index(u, v);
    const bool ascending = u < v;
    const bool class_ascending = sk.eflip[tet][e] == 0;
    return ascending == class_ascending ? 1 : -1;
}

HomologyGroup group_from(int cells, const IntMatrix& d_in, const IntMatrix& d_out) {
    // H = ker(d_out) / im(d_in): betti = cells - rank d_out - rank d_in.
    const SmithResult s = smith_normal_form(d_in);
    HomologyGroup g;
    g.betti = cells - rank_q(d_out) - s.rank();
    for (const BigInt& f : s.factors)
        if (f > 1) g.torsion.push_back(f);
    std::sort(g.torsion.begin(), g.torsion.end());
    return g;
}

struct BoundaryCells {
    std::vector<bool> vertex, edge, face;  // class -> lies in boundary
};

BoundaryCells boundary_cells(const Skeleton& sk) {
    BoundaryCells b;
    b.vertex.assign(sk.vertex_classes, false);
    b.edge.assign(sk.edges.size(), false);
    b.face.assign(sk.face_classes, false);
    for (int fc = 0; fc < sk.face_classes; ++fc) b.face[fc] = sk.fboundary[fc];
    for (size_t e = 0; e < sk.edges.size(); ++e) b.edge[e] = !sk.edges[e].internal;
    for (int vc = 0; vc < sk.vertex_classes; ++vc) b.vertex[vc] = !sk.links[vc].closed;
    return b;
}

}  // namespace

ChainComplex chain_complex(const Triangulation& tri, const Skeleton& sk) {
    const int t = tri.size();
    ChainComplex cc;
    cc.d1 = IntMatrix(sk.vertex_classes, static_cast<int>(sk.edges.size()));
    cc.d2 = IntMatrix(static_cast<int>(sk.edges.size()), sk.face_classes);
    cc.d3 = IntMatrix(sk.face_classes, t);

    for (size_t ec = 0; ec < sk.edges.size(); ++ec) {
        const auto [t0, e0] = sk.edges[ec].slots.front();
        (void)e0;
        const auto [u, v] = sk.edges[ec].ends.front();
        cc.d1.at(sk.vclass[t0][v], static_cast<int>(ec)) += 1;
        cc.d1.at(sk.vclass[t0][u], static_cast<int>(ec)) -= 1;
    }

    for (int fc = 0; fc < sk.face_classes; ++fc) {
        const auto [i, f] = sk.frep[fc];
        int b[3], n = 0;
        for (int q = 0; q < 4; ++q)
            if (q != f) b[n++] = q;
        // d(b0,b1,b2) = (b1,b2) - (b0,b2) + (b0,b1)
        const int pairs[3][2] = {{b[1], b[2]}, {b[0], b[2]}, {b[0], b[1]}};
        const int signs[3] = {1, -1, 1};
        for (int m = 0; m < 3; ++m) {
            const int e = edge_index(pairs[m][0], pairs[m][1]);
            cc.d2.at(sk.eclass[i][e], fc) +=
                signs[m] * edge_dir_sign(sk, i, pairs[m][0], pairs[m][1]);
        }
    }

    for (int i = 0; i < t; ++i)
        for (int k = 0; k < 4; ++k) {
            const int fc = sk.fclass[i][k];
            const auto [ri, rf] = sk.frep[fc];
            const int sign = (k % 2 == 0 ? 1 : -1) * face_transport_sign(tri, i, k, ri, rf);
            cc.d3.at(fc, i) += sign;
        }
    return cc;
}

std::string HomologyGroup::str() const {
    if (betti == 0 && torsion.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    if (betti == 1) {
        os << "Z";
        first = false;
    } else if (betti > 1) {
        os << "Z^" << betti;
        first = false;
    }
    for (const BigInt& d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

std::vector<HomologyGroup> homology_groups(const Triangulation& tri) {
    const Skeleton sk = compute_skeleton(tri);
    const ChainComplex cc = chain_complex(tri, sk);
    const int c0 = sk.vertex_classes, c1 = static_cast<int>(sk.edges.size()),
              c2 = sk.face_classes, c3 = sk.tet_count;
    std::vector<HomologyGroup> h(4);
    h[0] = group_from(c0, cc.d1, IntMatrix(0, c0));
    h[1] = group_from(c1, cc.d2, cc.d1);
    h[2] = group_from(c2, cc.d3, cc.d2);
    h[3] = group_from(c3, IntMatrix(c3, 0), cc.d3);
    return h;
}

namespace {

// Quotient complex C(M)/C(dM): restrict to interior cells.
struct RelComplex {
    int c0 = 0, c1 = 0, c2 = 0, c3 = 0;
    IntMatrix d1, d2, d3;
};

RelComplex relative_complex(const Triangulation& tri, const Skeleton& sk) {
    const ChainComplex cc = chain_complex(tri, sk);
    const BoundaryCells bc = boundary_cells(sk);

    std::vector<int> vmap(sk.vertex_classes, -1), emap(sk.edges.size(), -1),
        fmap(sk.face_classes, -1);
    RelComplex rc;
    for (int i = 0; i < sk.vertex_classes; ++i)
        if (!bc.vertex[i]) vmap[i] = rc.c0++;
    for (size_t i = 0; i < sk.edges.size(); ++i)
        if (!bc.edge[i]) emap[i] = rc.c1++;
    for (int i = 0; i < sk.face_classes; ++i)
        if (!bc.face[i]) fmap[i] = rc.c2++;
    rc.c3 = sk.tet_count;

    rc.d1 = IntMatrix(rc.c0, rc.c1);
    rc.d2 = IntMatrix(rc.c1, rc.c2);
    rc.d3 = IntMatrix(rc.c2, rc.c3);
    for (size_t e = 0; e < sk.edges.size(); ++e) {
        if (emap[e] < 0) continue;
        for (int v = 0; v < sk.vertex_classes; ++v)
            if (vmap[v] >= 0) rc.d1.at(vmap[v], emap[e]) = cc.d1.at(v, static_cast<int>(e));
    }
    for (int f = 0; f < sk.face_classes; ++f) {
        if (fmap[f] < 0) continue;
        for (size_t e = 0; e < sk.edges.size(); ++e)
            if (emap[e] >= 0) rc.d2.at(emap[e], fmap[f]) = cc.d2.at(static_cast<int>(e), f);
    }
    for (int i = 0; i < sk.tet_count; ++i)
        for (int f = 0; f < sk.face_classes; ++f)
            if (fmap[f] >= 0) rc.d3.at(fmap[f], i) = cc.d3.at(f, i);
    return rc;
}

// 2-dimensional chain complex of the boundary surface, using the ambient
// edge/vertex class orientations so inclusion into C(M) is basis-to-basis.
struct BoundaryChain {
    int c0 = 0, c1 = 0, c2 = 0;
    IntMatrix d1, d2;
    std::vector<int> edge_to_ambient;  // boundary edge index -> ambient class
};

BoundaryChain boundary_chain(const Triangulation& tri, const Skeleton& sk) {
    (void)tri;
    BoundaryChain b;
    std::vector<int> vmap(sk.vertex_classes, -1), emap(sk.edges.size(), -1);
    const BoundaryCells bc = boundary_cells(sk);
    for (int i = 0; i < sk.vertex_classes; ++i)
        if (bc.vertex[i]) vmap[i] = b.c0++;
    for (size_t i = 0; i < sk.edges.size(); ++i)
        if (bc.edge[i]) {
            emap[i] = b.c1++;
            b.edge_to_ambient.push_back(static_cast<int>(i));
        }
    std::vector<std::pair<int, int>> bfaces;
    for (int i = 0; i < sk.tet_count; ++i)
        for (int f = 0; f < 4; ++f)
            if (sk.fboundary[sk.fclass[i][f]] && sk.frep[sk.fclass[i][f]] == std::make_pair(i, f))
                bfaces.push_back({i, f});
    b.c2 = static_cast<int>(bfaces.size());

    b.d1 = IntMatrix(b.c0, b.c1);
    b.d2 = IntMatrix(b.c1, b.c2);
    for (size_t e = 0; e < sk.edges.size(); ++e) {
        if (emap[e] < 0) continue;
        const auto [t0, e0] = sk.edges[e].slots.front();
        (void)e0;
        const auto [u, v] = sk.edges[e].ends.front();
        b.d1.at(vmap[sk.vclass[t0][v]], emap[e]) += 1;
        b.d1.at(vmap[sk.vclass[t0][u]], emap[e]) -= 1;
    }
    for (int fc2 = 0; fc2 < b.c2; ++fc2) {
        const auto [i, f] = bfaces[fc2];
        int bb[3], n = 0;
        for (int q = 0; q < 4; ++q)
            if (q != f) bb[n++] = q;
        const int pairs[3][2] = {{bb[1], bb[2]}, {bb[0], bb[2]}, {bb[0], bb[1]}};
        const int signs[3] = {1, -1, 1};
        for (int m = 0; m < 3; ++m) {
            const int e = edge_index(pairs[m][0], pairs[m][1]);
            b.d2.at(emap[sk.eclass[i][e]], fc2) +=
                signs[m] * edge_dir_sign(sk, i, pairs[m][0], pairs[m][1]);
        }
    }
    return b;
}

}  // namespace

std::vector<HomologyGroup> relative_homology(const Triangulation& tri) {
    const Skeleton sk = compute_skeleton(tri);
    const RelComplex rc = relative_complex(tri, sk);
    std::vector<HomologyGroup> h(4);
    h[0] = group_from(rc.c0, rc.d1, IntMatrix(0, rc.c0));
    h[1] = group_from(rc.c1, rc.d2, rc.d1);
    h[2] = group_from(rc.c2, rc.d3, rc.d2);
    h[3] = group_from(rc.c3, IntMatrix(rc.c3, 0), rc.d3);
    return h;
}

PeripheralMap peripheral_map(const Triangulation& tri) {
    const Skeleton sk = compute_skeleton(tri);
    if (sk.boundary_face_count == 0)
        throw std::invalid_argument("peripheral_map: boundary is empty");
    const ChainComplex cc = chain_complex(tri, sk);
    const BoundaryChain b = boundary_chain(tri, sk);

    PeripheralMap pm;
    pm.betti1 = static_cast<int>(sk.edges.size()) - rank_q(cc.d1) - rank_q(cc.d2);
    pm.boundary_betti1 = b.c1 - rank_q(b.d1) - rank_q(b.d2);

    // Cycles of the boundary surface, included into C_1(M).
    const auto z1 = kernel_basis(b.d1);
    IntMatrix zmat(static_cast<int>(sk.edges.size()), static_cast<int>(z1.size()));
    for (size_t k = 0; k < z1.size(); ++k)
        for (int e = 0; e < b.c1; ++e) zmat.at(b.edge_to_ambient[e], static_cast<int>(k)) = z1[k][e];

    const int rank_b1 = rank_q(cc.d2);
    pm.image_rank = rank_q(hstack(zmat, cc.d2)) - rank_b1;
    pm.surjective = pm.image_rank == pm.betti1;
    return pm;
}

ExactnessReport exactness_check(const Triangulation& tri) {
    const Skeleton sk = compute_skeleton(tri);
    ExactnessReport r;
    if (sk.boundary_face_count == 0) return r;
    const PeripheralMap pm = peripheral_map(tri);
    r.rank_h1 = pm.betti1;
    r.rank_h1_boundary = pm.boundary_betti1;
    r.image_rank = pm.image_rank;
    r.applicable = pm.boundary_betti1 > 0;

    const RelComplex rc = relative_complex(tri, sk);
    r.rank_h2_rel = rc.c2 - rank_q(rc.d3) - rank_q(rc.d2);

    for (const BoundaryComponent& c : boundary_components(tri))
        if (c.chi == 0 && c.orientable) ++r.boundary_tori;
    r.two_per_torus = r.rank_h1_boundary == 2 * r.boundary_tori;

    // Exact iff the connecting map fills the kernel and H_1(dM) surjects.
    r.exact = r.applicable && (r.rank_h1_boundary - r.image_rank == r.rank_h2_rel) &&
              (r.image_rank == r.rank_h1);
    return r;
}

std::string ExactnessReport::str() const {
    std::ostringstream os;
    if (!applicable) return "not applicable (H_1 of the boundary is trivial)";
    os << "0 -> Q^" << rank_h2_rel << " -> Q^" << rank_h1_boundary << " -> Q^" << rank_h1
       << " -> 0: " << (exact ? "exact" : "rank deficit") << " (" << rank_h2_rel << " + "
       << rank_h1 << (rank_h2_rel + rank_h1 == rank_h1_boundary ? " = " : " != ")
       << rank_h1_boundary << ")";
    return os.str();
}

}  // namespace pachner
