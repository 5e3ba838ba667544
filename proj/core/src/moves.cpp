#include "pachner/moves.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "pachner/isosig.hpp"

namespace pachner {

namespace {

[[noreturn]] void not_applicable(const char* why) {
    throw std::logic_error(std::string("apply_move: site not applicable: ") + why);
}

// Rebuilds a triangulation after removing a locus of tetrahedra and
// appending replacements. Survivors keep their relative order and are
// compacted down; new tetrahedra follow, in local-id order. Portals map
// external faces of removed tetrahedra onto faces of the replacements.
struct Portal {
    int ntet = -1;       // local id of the replacement tetrahedron
    Perm4 old_to_new;    // old tet positions -> replacement positions
};

struct Rebuild {
    std::vector<int> removed;
    int new_count = 0;
    std::map<std::pair<int, int>, Portal> portals;
    std::vector<std::tuple<int, int, int, Perm4>> internal;  // (local a, face, local b, perm)
    bool drop_unportaled = false;  // removed faces without portals become boundary

    struct Out {
        Triangulation tri;
        std::vector<int> map;  // old tet -> new index (-1 for removed)
        int base;              // index of the first replacement tetrahedron
    };

    Out run(const Triangulation& src) const {
        const int t = src.size();
        std::vector<bool> rem(t, false);
        for (int r : removed) rem[r] = true;
        std::vector<int> map(t, -1);
        int survivors = 0;
        for (int i = 0; i < t; ++i)
            if (!rem[i]) map[i] = survivors++;
        const int base = survivors;

        Triangulation out(survivors + new_count);

        struct Loc {
            int tet, face;
            Perm4 rho;
            bool ok;
        };
        auto resolve = [&](int ot, int of) -> Loc {
            if (map[ot] >= 0) return {map[ot], of, Perm4(), true};
            auto it = portals.find({ot, of});
            if (it == portals.end()) return {-1, -1, Perm4(), false};
            return {base + it->second.ntet, it->second.old_to_new[of], it->second.old_to_new,
                    true};
        };

        for (int i = 0; i < t; ++i)
            for (int f = 0; f < 4; ++f) {
                const Gluing& g = src.gluing(i, f);
                if (!g.glued()) continue;
                const int j = g.tet, gf = g.perm[f];
                if (std::make_pair(i, f) > std::make_pair(j, gf)) continue;
                const Loc a = resolve(i, f);
                const Loc b = resolve(j, gf);
                if (!a.ok && !b.ok) continue;  // interior to the removed locus
                if (!a.ok || !b.ok) {
                    if (drop_unportaled) continue;  // becomes a boundary face
                    throw std::logic_error("Rebuild: unmapped face on removed locus");
                }
                out.glue(a.tet, a.face, b.tet, b.rho * g.perm * a.rho.inverse());
            }
        for (const auto& [la, f, lb, perm] : internal) out.glue(base + la, f, base + lb, perm);
        return {std::move(out), std::move(map), base};
    }
};

// ---- M14 ----------------------------------------------------------------

MoveResult apply_m14(const Triangulation& tri, const MoveSite& s) {
    if (s.tet < 0 || s.tet >= tri.size()) not_applicable("M14 tetrahedron out of range");
    Rebuild rb;
    rb.removed = {s.tet};
    rb.new_count = 4;
    // Replacement N_k keeps the old labels except that position k becomes
    // the new interior vertex; the old face k survives as face k of N_k.
    for (int k = 0; k < 4; ++k) rb.portals[{s.tet, k}] = Portal{k, Perm4()};
    for (int k = 0; k < 4; ++k)
        for (int m = k + 1; m < 4; ++m)
            rb.internal.push_back({k, m, m, Perm4::transposition(k, m)});
    auto out = rb.run(tri);
    return {std::move(out.tri), MoveSite{MoveKind::M41, 0, out.base, 0}};
}

// ---- M41 ----------------------------------------------------------------

// The degree-4 vertex star must be glued exactly as an M14 leaves it:
// star tetrahedra pairwise glued along their center faces, centers matching.
struct Star41 {
    std::array<int, 4> tets;
    std::array<int, 4> centers;
    std::array<Perm4, 4> pi;      // star tet positions -> replacement labels
    std::array<int, 4> lambda;    // replacement face owned by each star tet
};

bool reconstruct_41(const Triangulation& tri, const Skeleton& sk, int vclass, Star41& st) {
    const auto& members = sk.vmembers[vclass];
    if (members.size() != 4) return false;
    for (int a = 0; a < 4; ++a) {
        st.tets[a] = members[a].first;
        st.centers[a] = members[a].second;
    }
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (st.tets[a] == st.tets[b]) return false;

    auto star_index = [&](int tet) {
        for (int a = 0; a < 4; ++a)
            if (st.tets[a] == tet) return a;
        return -1;
    };

    std::array<bool, 4> assigned{false, false, false, false};
    st.pi[0] = Perm4();
    assigned[0] = true;
    std::vector<int> queue{0};
    while (!queue.empty()) {
        const int a = queue.back();
        queue.pop_back();
        for (int f = 0; f < 4; ++f) {
            if (f == st.centers[a]) continue;
            const Gluing& g = tri.gluing(st.tets[a], f);
            if (!g.glued()) return false;
            const int b = star_index(g.tet);
            if (b < 0) return false;
            if (g.perm[st.centers[a]] != st.centers[b]) return false;
            // Across a star gluing the two shared outer vertices keep their
            // labels, the centers map to each other, and each side's
            // off-face vertex carries the other side's missing label.
            const Perm4 cand =
                st.pi[a] * Perm4::transposition(f, st.centers[a]) * g.perm.inverse();
            if (!assigned[b]) {
                st.pi[b] = cand;
                assigned[b] = true;
                queue.push_back(b);
            } else if (st.pi[b] != cand) {
                return false;
            }
        }
        // Each star tetrahedron must meet the other three through its three
        // center faces, one each.
        std::array<bool, 4> hit{false, false, false, false};
        for (int f = 0; f < 4; ++f) {
            if (f == st.centers[a]) continue;
            const int b = star_index(tri.gluing(st.tets[a], f).tet);
            if (b < 0 || b == a || hit[b]) return false;
            hit[b] = true;
        }
    }
    for (int a = 0; a < 4; ++a) st.lambda[a] = st.pi[a][st.centers[a]];
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (st.lambda[a] == st.lambda[b]) return false;
    return true;
}

MoveResult apply_m41(const Triangulation& tri, const Skeleton& sk, const MoveSite& s) {
    if (s.tet < 0 || s.tet >= tri.size() || s.idx < 0 || s.idx > 3)
        not_applicable("M41 corner out of range");
    const int vc = sk.vclass[s.tet][s.idx];
    if (sk.vmembers[vc].front() != std::make_pair(s.tet, s.idx))
        not_applicable("M41 site is not the canonical corner of its vertex");
    Star41 st;
    if (!reconstruct_41(tri, sk, vc, st)) not_applicable("M41 star is not a 1-4 configuration");

    Rebuild rb;
    rb.removed.assign(st.tets.begin(), st.tets.end());
    std::sort(rb.removed.begin(), rb.removed.end());
    rb.new_count = 1;
    for (int a = 0; a < 4; ++a) rb.portals[{st.tets[a], st.centers[a]}] = Portal{0, st.pi[a]};
    auto out = rb.run(tri);
    return {std::move(out.tri), MoveSite{MoveKind::M14, 0, out.base, 0}};
}

// ---- M23 ----------------------------------------------------------------

MoveResult apply_m23(const Triangulation& tri, const MoveSite& s) {
    if (s.tet < 0 || s.tet >= tri.size() || s.idx < 0 || s.idx > 3)
        not_applicable("M23 face out of range");
    const Gluing& g = tri.gluing(s.tet, s.idx);
    if (!g.glued()) not_applicable("M23 face is a boundary face");
    if (g.tet == s.tet) not_applicable("M23 needs two distinct tetrahedra");
    const int A = s.tet, f = s.idx, B = g.tet, beta = g.perm[f];
    if (std::make_pair(B, beta) < std::make_pair(A, f))
        not_applicable("M23 site is not the canonical side of its face");
    const Perm4 sigma = g.perm;

    int P[3], n = 0;
    for (int q = 0; q < 4; ++q)
        if (q != f) P[n++] = q;

    auto pos_in = [&](int local, int z) {  // position of equatorial z within N_local
        const int x = P[local];
        int e[2], m = 0;
        for (int k = 0; k < 3; ++k)
            if (P[k] != x) e[m++] = P[k];
        return z == e[0] ? 2 : 3;
    };

    Rebuild rb;
    rb.removed = {std::min(A, B), std::max(A, B)};
    rb.new_count = 3;

    // Internal gluings around the new axis (alpha at 0, beta at 1).
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            const int x = P[a], y = P[b];
            int e = -1;
            for (int k = 0; k < 3; ++k)
                if (P[k] != x && P[k] != y) e = P[k];
            int img[4];
            img[0] = 0;
            img[1] = 1;
            img[pos_in(a, e)] = pos_in(b, e);
            img[pos_in(a, y)] = pos_in(b, x);
            rb.internal.push_back({a, pos_in(a, y), b, Perm4(img[0], img[1], img[2], img[3])});
        }

    // Side faces of A and B relocate onto the new tetrahedra.
    for (int a = 0; a < 3; ++a) {
        const int p = P[a];
        int e[2], m = 0;
        for (int k = 0; k < 3; ++k)
            if (P[k] != p) e[m++] = P[k];
        {
            int img[4];
            img[f] = 0;
            img[p] = 1;
            img[e[0]] = 2;
            img[e[1]] = 3;
            rb.portals[{A, p}] = Portal{a, Perm4(img[0], img[1], img[2], img[3])};
        }
        {
            int img[4];
            img[beta] = 1;
            img[sigma[p]] = 0;
            img[sigma[e[0]]] = 2;
            img[sigma[e[1]]] = 3;
            rb.portals[{B, sigma[p]}] = Portal{a, Perm4(img[0], img[1], img[2], img[3])};
        }
    }

    auto out = rb.run(tri);
    return {std::move(out.tri), MoveSite{MoveKind::M32, 0, out.base, edge_index(0, 1)}};
}

// ---- M32 ----------------------------------------------------------------

MoveResult apply_m32(const Triangulation& tri, const Skeleton& sk, const MoveSite& s) {
    if (s.tet < 0 || s.tet >= tri.size() || s.idx < 0 || s.idx > 5)
        not_applicable("M32 edge out of range");
    const int ec = sk.eclass[s.tet][s.idx];
    const EdgeClass& cls = sk.edges[ec];
    if (!cls.internal || !cls.valid || cls.degree != 3)
        not_applicable("M32 needs an internal edge of degree 3");
    EdgeSlotRef rep = *std::min_element(cls.slots.begin(), cls.slots.end());
    if (rep.tet != s.tet || rep.edge != s.idx)
        not_applicable("M32 site is not the canonical slot of its edge");
    if (cls.slots[0].tet == cls.slots[1].tet || cls.slots[0].tet == cls.slots[2].tet ||
        cls.slots[1].tet == cls.slots[2].tet)
        not_applicable("M32 needs three distinct tetrahedra");

    // Walk data: tets in cycle order with directed axis ends.
    int T[3], U[3], V[3];
    for (int a = 0; a < 3; ++a) {
        T[a] = cls.slots[a].tet;
        U[a] = cls.ends[a].first;
        V[a] = cls.ends[a].second;
    }

    // Equatorial labels: label[a][w] for the two non-axis positions of T[a]
    // is the local index of the one tetrahedron not meeting that corner.
    int label[3][4];
    for (auto& row : label) row[0] = row[1] = row[2] = row[3] = -1;
    auto local_of = [&](int tet) {
        for (int a = 0; a < 3; ++a)
            if (T[a] == tet) return a;
        return -1;
    };
    for (int a = 0; a < 3; ++a) {
        for (int w = 0; w < 4; ++w) {
            if (w == U[a] || w == V[a]) continue;
            const Gluing& g = tri.gluing(T[a], w);  // face w contains the axis
            if (!g.glued()) not_applicable("M32 edge touches the boundary");
            const int b = local_of(g.tet);
            if (b < 0 || b == a) not_applicable("M32 star is not a 2-3 configuration");
            const int other = 6 - w - U[a] - V[a];  // remaining non-axis position
            const int third = 3 - a - b;
            if (label[a][other] >= 0 && label[a][other] != third)
                not_applicable("M32 star labels are inconsistent");
            label[a][other] = third;
            // The gluing must respect the axis direction and equator labels.
            if (!((g.perm[U[a]] == U[b] && g.perm[V[a]] == V[b])))
                not_applicable("M32 axis direction mismatch");
        }
        int seen = 0;
        for (int w = 0; w < 4; ++w)
            if (label[a][w] >= 0) ++seen;
        if (seen != 2 || label[a][U[a]] >= 0 || label[a][V[a]] >= 0)
            not_applicable("M32 star labels incomplete");
    }
    // Cross-check labels across the three axis gluings.
    for (int a = 0; a < 3; ++a)
        for (int w = 0; w < 4; ++w) {
            if (w == U[a] || w == V[a]) continue;
            const Gluing& g = tri.gluing(T[a], w);
            const int b = local_of(g.tet);
            const int other = 6 - w - U[a] - V[a];
            if (label[b][g.perm[other]] != label[a][other])
                not_applicable("M32 equator labels mismatch");
        }

    Rebuild rb;
    rb.removed = {T[0], T[1], T[2]};
    std::sort(rb.removed.begin(), rb.removed.end());
    rb.new_count = 2;
    rb.internal.push_back({0, 3, 1, Perm4()});  // A's equatorial face onto B's

    for (int a = 0; a < 3; ++a) {
        int img[4];
        img[U[a]] = 3;  // apex of A
        img[V[a]] = a;
        for (int w = 0; w < 4; ++w)
            if (w != U[a] && w != V[a]) img[w] = label[a][w];
        rb.portals[{T[a], V[a]}] = Portal{0, Perm4(img[0], img[1], img[2], img[3])};
        img[V[a]] = 3;  // apex of B
        img[U[a]] = a;
        rb.portals[{T[a], U[a]}] = Portal{1, Perm4(img[0], img[1], img[2], img[3])};
    }

    auto out = rb.run(tri);
    return {std::move(out.tri), MoveSite{MoveKind::M23, 0, out.base, 3}};
}

// ---- boundary layering ---------------------------------------------------

Triangulation with_extra_tet(const Triangulation& tri) {
    Triangulation out(tri.size() + 1);
    for (int i = 0; i < tri.size(); ++i)
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = tri.gluing(i, f);
            if (!g.glued()) continue;
            if (std::make_pair(i, f) > std::make_pair(g.tet, g.perm[f])) continue;
            out.glue(i, f, g.tet, g.perm);
        }
    return out;
}

MoveResult apply_layer_face(const Triangulation& tri, const MoveSite& s) {
    if (s.tet < 0 || s.tet >= tri.size() || s.idx < 0 || s.idx > 3)
        not_applicable("layer face out of range");
    if (!tri.is_boundary_face(s.tet, s.idx)) not_applicable("layer face is not boundary");
    Triangulation out = with_extra_tet(tri);
    const int d = tri.size();
    int img[4];
    img[0] = s.idx;
    int n = 1;
    for (int q = 0; q < 4; ++q)
        if (q != s.idx) img[n++] = q;
    out.glue(d, 0, s.tet, Perm4(img[0], img[1], img[2], img[3]));
    return {std::move(out), MoveSite{MoveKind::BdryUnlayer, 0, d, 0}};
}

MoveResult apply_layer_edge(const Triangulation& tri, const Skeleton& sk, const MoveSite& s) {
    if (s.tet < 0 || s.tet >= tri.size() || s.idx < 0 || s.idx > 5)
        not_applicable("layer edge out of range");
    const int ec = sk.eclass[s.tet][s.idx];
    const EdgeClass& cls = sk.edges[ec];
    if (cls.internal || !cls.valid) not_applicable("layer edge is not a boundary edge");
    EdgeSlotRef rep = *std::min_element(cls.slots.begin(), cls.slots.end());
    if (rep.tet != s.tet || rep.edge != s.idx)
        not_applicable("layer site is not the canonical slot of its edge");
    const int t1 = cls.slots.front().tet, t2 = cls.slots.back().tet;
    if (t1 == t2) not_applicable("layer edge needs boundary faces in distinct tetrahedra");
    const auto [u1, v1] = cls.ends.front();
    const auto [u2, v2] = cls.ends.back();
    const int f1 = cls.start_bface, f2 = cls.end_bface;
    const int x1 = 6 - f1 - u1 - v1, x2 = 6 - f2 - u2 - v2;

    Triangulation out = with_extra_tet(tri);
    const int d = tri.size();
    {
        int img[4];
        img[0] = f1;
        img[1] = x1;
        img[2] = u1;
        img[3] = v1;
        out.glue(d, 0, t1, Perm4(img[0], img[1], img[2], img[3]));
    }
    {
        int img[4];
        img[1] = f2;
        img[0] = x2;
        img[2] = u2;
        img[3] = v2;
        out.glue(d, 1, t2, Perm4(img[0], img[1], img[2], img[3]));
    }
    return {std::move(out), MoveSite{MoveKind::BdryUnlayer, 1, d, 0}};
}

MoveSite boundary_edge_site(const Triangulation& tri, int tet, int edge) {
    const Skeleton sk = compute_skeleton(tri);
    const EdgeClass& cls = sk.edges[sk.eclass[tet][edge]];
    EdgeSlotRef rep = *std::min_element(cls.slots.begin(), cls.slots.end());
    return MoveSite{MoveKind::BdryLayer, 1, rep.tet, rep.edge};
}

MoveResult apply_unlayer(const Triangulation& tri, const MoveSite& s) {
    const int d = s.tet;
    if (d < 0 || d >= tri.size()) not_applicable("unlayer tetrahedron out of range");
    std::vector<int> glued;
    for (int f = 0; f < 4; ++f)
        if (!tri.is_boundary_face(d, f)) glued.push_back(f);
    if (s.mode == 0) {
        if (glued.size() != 1) not_applicable("unlayer(face) needs exactly one glued face");
        const Gluing& g = tri.gluing(d, glued[0]);
        if (g.tet == d) not_applicable("unlayer tetrahedron glued to itself");
        Rebuild rb;
        rb.removed = {d};
        rb.drop_unportaled = true;
        auto out = rb.run(tri);
        return {std::move(out.tri),
                MoveSite{MoveKind::BdryLayer, 0, out.map[g.tet], g.perm[glued[0]]}};
    }
    if (glued.size() != 2) not_applicable("unlayer(edge) needs exactly two glued faces");
    const Gluing& g1 = tri.gluing(d, glued[0]);
    const Gluing& g2 = tri.gluing(d, glued[1]);
    if (g1.tet == d || g2.tet == d) not_applicable("unlayer tetrahedron glued to itself");
    if (g1.tet == g2.tet) not_applicable("unlayer(edge) needs two distinct target tetrahedra");
    // The buried edge is shared by the two glued faces.
    int e[2], n = 0;
    for (int q = 0; q < 4; ++q)
        if (q != glued[0] && q != glued[1]) e[n++] = q;
    Rebuild rb;
    rb.removed = {d};
    rb.drop_unportaled = true;
    auto out = rb.run(tri);
    const MoveSite inv =
        boundary_edge_site(out.tri, out.map[g1.tet], edge_index(g1.perm[e[0]], g1.perm[e[1]]));
    return {std::move(out.tri), inv};
}

uint64_t uniform_below(std::mt19937_64& rng, uint64_t n) {
    uint64_t mask = n - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    for (;;) {
        const uint64_t r = rng() & mask;
        if (r < n) return r;
    }
}

}  // namespace

std::vector<MoveSite> enumerate_moves(const Triangulation& tri) {
    const Skeleton sk = compute_skeleton(tri);
    std::vector<MoveSite> out;

    for (int i = 0; i < tri.size(); ++i) out.push_back({MoveKind::M14, 0, i, 0});

    for (int vc = 0; vc < sk.vertex_classes; ++vc) {
        Star41 st;
        if (reconstruct_41(tri, sk, vc, st)) {
            const auto [t0, c0] = sk.vmembers[vc].front();
            out.push_back({MoveKind::M41, 0, t0, c0});
        }
    }

    for (int i = 0; i < tri.size(); ++i)
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = tri.gluing(i, f);
            if (!g.glued() || g.tet == i) continue;
            if (std::make_pair(i, f) < std::make_pair(g.tet, g.perm[f]))
                out.push_back({MoveKind::M23, 0, i, f});
        }

    for (const EdgeClass& cls : sk.edges) {
        if (!cls.internal || !cls.valid || cls.degree != 3) continue;
        if (cls.slots[0].tet == cls.slots[1].tet || cls.slots[0].tet == cls.slots[2].tet ||
            cls.slots[1].tet == cls.slots[2].tet)
            continue;
        EdgeSlotRef rep = *std::min_element(cls.slots.begin(), cls.slots.end());
        // The full 2-3 pattern check lives in apply_m32; probe it.
        try {
            apply_m32(tri, sk, MoveSite{MoveKind::M32, 0, rep.tet, rep.edge});
        } catch (const std::logic_error&) {
            continue;
        }
        out.push_back({MoveKind::M32, 0, rep.tet, rep.edge});
    }

    for (int i = 0; i < tri.size(); ++i)
        for (int f = 0; f < 4; ++f)
            if (tri.is_boundary_face(i, f)) out.push_back({MoveKind::BdryLayer, 0, i, f});

    for (const EdgeClass& cls : sk.edges) {
        if (cls.internal || !cls.valid) continue;
        if (cls.slots.front().tet == cls.slots.back().tet) continue;
        EdgeSlotRef rep = *std::min_element(cls.slots.begin(), cls.slots.end());
        out.push_back({MoveKind::BdryLayer, 1, rep.tet, rep.edge});
    }

    for (int d = 0; d < tri.size(); ++d) {
        std::vector<int> glued;
        for (int f = 0; f < 4; ++f)
            if (!tri.is_boundary_face(d, f)) glued.push_back(f);
        if (glued.size() == 1 && tri.gluing(d, glued[0]).tet != d)
            out.push_back({MoveKind::BdryUnlayer, 0, d, 0});
        if (glued.size() == 2) {
            const Gluing& g1 = tri.gluing(d, glued[0]);
            const Gluing& g2 = tri.gluing(d, glued[1]);
            if (g1.tet != d && g2.tet != d && g1.tet != g2.tet)
                out.push_back({MoveKind::BdryUnlayer, 1, d, 0});
        }
    }

    std::sort(out.begin(), out.end());
    return out;
}

MoveResult apply_move(const Triangulation& tri, const MoveSite& site) {
    switch (site.kind) {
        case MoveKind::M14: return apply_m14(tri, site);
        case MoveKind::M41: return apply_m41(tri, compute_skeleton(tri), site);
        case MoveKind::M23: return apply_m23(tri, site);
        case MoveKind::M32: return apply_m32(tri, compute_skeleton(tri), site);
        case MoveKind::BdryLayer:
            return site.mode == 0 ? apply_layer_face(tri, site)
                                  : apply_layer_edge(tri, compute_skeleton(tri), site);
        case MoveKind::BdryUnlayer: return apply_unlayer(tri, site);
    }
    not_applicable("unknown move kind");
}

Walk random_walk(const Triangulation& tri, int steps, uint64_t seed) {
    if (steps < 0) throw std::invalid_argument("random_walk: negative step count");
    Walk w{tri, {}, {}};
    std::mt19937_64 rng(seed);
    for (int k = 0; k < steps; ++k) {
        const auto sites = enumerate_moves(w.tri);
        if (sites.empty()) break;
        const MoveSite s = sites[uniform_below(rng, sites.size())];
        MoveResult r = apply_move(w.tri, s);
        w.tri = std::move(r.tri);
        w.sequence.push_back(s);
        w.inverses.push_back(r.inverse);
    }
    return w;
}

namespace {
const char* kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::M14: return "M14";
        case MoveKind::M41: return "M41";
        case MoveKind::M23: return "M23";
        case MoveKind::M32: return "M32";
        case MoveKind::BdryLayer: return "BDRY_LAYER";
        case MoveKind::BdryUnlayer: return "BDRY_UNLAYER";
    }
    return "?";
}
}  // namespace

MoveSite transport_site(const MoveSite& s, const Isomorphism& iso, const Triangulation& target) {
    MoveSite out = s;
    out.tet = iso.tet_map[s.tet];
    switch (s.kind) {
        case MoveKind::M14:
        case MoveKind::BdryUnlayer: return out;
        case MoveKind::M41: {
            out.idx = iso.vert_map[s.tet][s.idx];
            const Skeleton sk = compute_skeleton(target);
            const auto& mem = sk.vmembers[sk.vclass[out.tet][out.idx]];
            return MoveSite{s.kind, s.mode, mem.front().first, mem.front().second};
        }
        case MoveKind::M23: {
            out.idx = iso.vert_map[s.tet][s.idx];
            const Gluing& g = target.gluing(out.tet, out.idx);
            const auto other = std::make_pair(g.tet, g.perm[out.idx]);
            if (other < std::make_pair(out.tet, out.idx))
                return MoveSite{s.kind, s.mode, other.first, other.second};
            return out;
        }
        case MoveKind::M32:
        case MoveKind::BdryLayer: {
            if (s.kind == MoveKind::BdryLayer && s.mode == 0) {
                out.idx = iso.vert_map[s.tet][s.idx];
                return out;
            }
            const auto [u, v] = kEdgeEnds[s.idx];
            out.idx = edge_index(iso.vert_map[s.tet][u], iso.vert_map[s.tet][v]);
            const Skeleton sk = compute_skeleton(target);
            const EdgeClass& cls = sk.edges[sk.eclass[out.tet][out.idx]];
            EdgeSlotRef rep = *std::min_element(cls.slots.begin(), cls.slots.end());
            return MoveSite{s.kind, s.mode, rep.tet, rep.edge};
        }
    }
    return out;
}

std::string to_string(const MoveSite& s) {
    std::ostringstream os;
    os << kind_name(s.kind);
    switch (s.kind) {
        case MoveKind::M14: os << ' ' << s.tet; break;
        case MoveKind::M41:
        case MoveKind::M23:
        case MoveKind::M32: os << ' ' << s.tet << ' ' << s.idx; break;
        case MoveKind::BdryLayer: os << ' ' << s.mode << ' ' << s.tet << ' ' << s.idx; break;
        case MoveKind::BdryUnlayer: os << ' ' << s.mode << ' ' << s.tet; break;
    }
    return os.str();
}

MoveSite move_site_from_string(const std::string& line) {
    std::istringstream is(line);
    std::string kind;
    is >> kind;
    MoveSite s{};
    auto need = [&](int& v) {
        if (!(is >> v)) throw std::invalid_argument("move site: missing index in '" + line + "'");
    };
    if (kind == "M14") {
        s.kind = MoveKind::M14;
        need(s.tet);
    } else if (kind == "M41" || kind == "M23" || kind == "M32") {
        s.kind = kind == "M41" ? MoveKind::M41 : kind == "M23" ? MoveKind::M23 : MoveKind::M32;
        need(s.tet);
        need(s.idx);
    } else if (kind == "BDRY_LAYER") {
        s.kind = MoveKind::BdryLayer;
        need(s.mode);
        need(s.tet);
        need(s.idx);
    } else if (kind == "BDRY_UNLAYER") {
        s.kind = MoveKind::BdryUnlayer;
        need(s.mode);
        need(s.tet);
    } else {
        throw std::invalid_argument("move site: unknown kind '" + kind + "'");
    }
    std::string rest;
    if (is >> rest) throw std::invalid_argument("move site: trailing tokens in '" + line + "'");
    return s;
}

}  // namespace pachner
