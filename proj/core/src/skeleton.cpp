#include "pachner/skeleton.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pachner {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Directed position while walking around an edge: the edge runs (u, v) in
// this tetrahedron and the walk leaves through exit_face.
struct EState {
    int tet, u, v, exit_face;
    friend bool operator==(const EState&, const EState&) = default;
};

bool step(const Triangulation& tri, const EState& s, EState& next) {
    const Gluing& g = tri.gluing(s.tet, s.exit_face);
    if (!g.glued()) return false;
    const int nu = g.perm[s.u], nv = g.perm[s.v], in = g.perm[s.exit_face];
    const auto ff = faces_containing_edge(nu, nv);
    next = EState{g.tet, nu, nv, ff[0] == in ? ff[1] : ff[0]};
    return true;
}

EState reverse_state(const EState& s) {
    const auto ff = faces_containing_edge(s.u, s.v);
    return EState{s.tet, s.u, s.v, ff[0] == s.exit_face ? ff[1] : ff[0]};
}

}  // namespace

Skeleton compute_skeleton(const Triangulation& tri) {
    const int t = tri.size();
    Skeleton sk;
    sk.tet_count = t;

    // Vertex classes.
    UnionFind vuf(4 * t);
    for (int i = 0; i < t; ++i)
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = tri.gluing(i, f);
            if (!g.glued()) continue;
            for (int v = 0; v < 4; ++v)
                if (v != f) vuf.unite(4 * i + v, 4 * g.tet + g.perm[v]);
        }
    sk.vclass.assign(t, {-1, -1, -1, -1});
    std::vector<int> vindex(4 * t, -1);
    for (int i = 0; i < t; ++i)
        for (int v = 0; v < 4; ++v) {
            int r = vuf.find(4 * i + v);
            if (vindex[r] < 0) {
                vindex[r] = sk.vertex_classes++;
                sk.vmembers.emplace_back();
            }
            sk.vclass[i][v] = vindex[r];
            sk.vmembers[vindex[r]].push_back({i, v});
        }

    // Edge classes by walking around each edge.
    sk.eclass.assign(t, {-1, -1, -1, -1, -1, -1});
    sk.eflip.assign(t, {0, 0, 0, 0, 0, 0});
    for (int i = 0; i < t; ++i)
        for (int e = 0; e < 6; ++e) {
            if (sk.eclass[i][e] >= 0) continue;
            const int id = static_cast<int>(sk.edges.size());
            EdgeClass ec;

            const auto ff = faces_containing_edge(kEdgeEnds[e][0], kEdgeEnds[e][1]);
            EState start{i, kEdgeEnds[e][0], kEdgeEnds[e][1], ff[1]};
            std::vector<EState> states{start};
            bool cycle = false;
            for (;;) {
                EState nx;
                if (!step(tri, states.back(), nx)) break;
                if (nx == start) {
                    cycle = true;
                    break;
                }
                states.push_back(nx);
            }
            if (!cycle) {
                // Walk the other way and splice, so states run from one
                // boundary side to the other.
                std::vector<EState> back{reverse_state(start)};
                for (;;) {
                    EState nx;
                    if (!step(tri, back.back(), nx)) break;
                    back.push_back(nx);
                }
                std::vector<EState> all;
                for (auto it = back.rbegin(); it != back.rend(); ++it)
                    all.push_back(reverse_state(*it));
                all.pop_back();  // reverse of reverse_state(start) == start
                all.push_back(start);
                all.insert(all.end(), states.begin() + 1, states.end());
                states = std::move(all);
                // Deterministic path direction: lex-least (tet, edge, face) end first.
                const EState& a = states.front();
                const EState& b = states.back();
                auto key = [](const EState& s, bool front) {
                    const auto ff2 = faces_containing_edge(s.u, s.v);
                    int bf = front ? (ff2[0] == s.exit_face ? ff2[1] : ff2[0]) : s.exit_face;
                    return std::array<int, 3>{s.tet, edge_index(s.u, s.v), bf};
                };
                if (key(b, false) < key(a, true)) {
                    std::vector<EState> rev;
                    for (auto it = states.rbegin(); it != states.rend(); ++it)
                        rev.push_back(reverse_state(*it));
                    states = std::move(rev);
                }
            }

            ec.internal = cycle;
            ec.degree = static_cast<int>(states.size());
            std::vector<std::pair<int, bool>> seen_slots;  // slot key, ascending?
            for (const EState& s : states) {
                const int ei = edge_index(s.u, s.v);
                ec.slots.push_back({s.tet, ei});
                ec.ends.push_back({s.u, s.v});
                const bool asc = s.u < s.v;
                const int skey = 6 * s.tet + ei;
                auto it = std::find_if(seen_slots.begin(), seen_slots.end(),
                                       [&](const auto& p) { return p.first == skey; });
                if (it != seen_slots.end()) {
                    if (it->second != asc) ec.valid = false;
                } else {
                    seen_slots.push_back({skey, asc});
                    sk.eclass[s.tet][ei] = id;
                    sk.eflip[s.tet][ei] = asc ? 0 : 1;
                }
            }
            if (!ec.internal) {
                const EState& a = states.front();
                const EState& b = states.back();
                const auto fa = faces_containing_edge(a.u, a.v);
                ec.start_bface = fa[0] == a.exit_face ? fa[1] : fa[0];
                ec.end_bface = b.exit_face;
            }
            if (!ec.valid) sk.edges_valid = false;
            sk.edges.push_back(std::move(ec));
        }

    // Face classes.
    sk.fclass.assign(t, {-1, -1, -1, -1});
    for (int i = 0; i < t; ++i)
        for (int f = 0; f < 4; ++f) {
            if (sk.fclass[i][f] >= 0) continue;
            const int id = sk.face_classes++;
            sk.fclass[i][f] = id;
            sk.frep.push_back({i, f});
            const Gluing& g = tri.gluing(i, f);
            if (g.glued()) {
                sk.fclass[g.tet][g.perm[f]] = id;
                sk.fboundary.push_back(false);
                ++sk.internal_face_classes;
            } else {
                sk.fboundary.push_back(true);
                ++sk.boundary_face_count;
            }
        }

    // Vertex links.
    sk.links.resize(sk.vertex_classes);
    {
        // One link triangle per corner; triangle index = 4*tet + vertex.
        // Link corner labels: position p != v, ascending -> local 0..2; the
        // side opposite the corner on edge (v,p) lies in face p.
        Surface2 link(4 * t);
        auto local = [](int v, int p) {
            int l = 0;
            for (int q = 0; q < 4; ++q) {
                if (q == v) continue;
                if (q == p) return l;
                ++l;
            }
            return -1;
        };
        for (int i = 0; i < t; ++i)
            for (int f = 0; f < 4; ++f) {
                const Gluing& g = tri.gluing(i, f);
                if (!g.glued()) continue;
                if (g.tet < i || (g.tet == i && g.perm[f] < f)) continue;  // each pair once
                for (int v = 0; v < 4; ++v) {
                    if (v == f) continue;
                    const int w = g.perm[v];
                    std::array<int8_t, 3> m{};
                    for (int p = 0; p < 4; ++p)
                        if (p != v) m[local(v, p)] = static_cast<int8_t>(local(w, g.perm[p]));
                    link.glue(4 * i + v, local(v, f), 4 * g.tet + w, m);
                }
            }
        const auto an = link.analyze();
        // All link triangles of one vertex class land in one 2D component
        // (and conversely), so per-class data is the component's data.
        for (int vc = 0; vc < sk.vertex_classes; ++vc) {
            const auto [i0, v0] = sk.vmembers[vc][0];
            const auto& comp = an.components[an.comp_of[4 * i0 + v0]];
            LinkInfo li;
            li.chi = comp.chi;
            li.closed = comp.closed;
            li.orientable = comp.orientable;
            li.corners = comp.triangles;
            if (comp.triangles == static_cast<int>(sk.vmembers[vc].size())) {
                if (comp.closed && comp.chi == 2)
                    li.type = LinkType::Sphere;
                else if (!comp.closed && comp.chi == 1)
                    li.type = LinkType::Disc;
                else
                    li.type = LinkType::Other;
            } else {
                li.type = LinkType::Other;  // link disconnected across the class
            }
            sk.links[vc] = li;
        }
    }

    return sk;
}

SkeletonSummary skeleton_summary(const Triangulation& tri) {
    const Skeleton sk = compute_skeleton(tri);
    SkeletonSummary s;
    s.vertex_count = sk.vertex_classes;
    s.edge_count = static_cast<int>(sk.edges.size());
    s.face_count = sk.face_classes;
    s.tet_count = sk.tet_count;
    s.boundary_face_count = sk.boundary_face_count;
    for (size_t e = 0; e < sk.edges.size(); ++e)
        s.edge_degrees[static_cast<int>(e)] = sk.edges[e].degree;
    for (int vc = 0; vc < sk.vertex_classes; ++vc)
        s.vertex_link_types[vc] = sk.links[vc].type;
    return s;
}

std::string ValidationReport::verdict_text() const {
    switch (verdict) {
        case Verdict::ClosedManifold: return "closed 3-manifold";
        case Verdict::BoundedManifold: return "3-manifold with boundary";
        default: return "not a manifold";
    }
}

ValidationReport validate(const Triangulation& tri) {
    const Skeleton sk = compute_skeleton(tri);
    ValidationReport r;
    r.edges_valid = sk.edges_valid;
    for (size_t e = 0; e < sk.edges.size(); ++e)
        if (!sk.edges[e].valid) r.invalid_edges.push_back(static_cast<int>(e));
    r.links_ok = true;
    for (int vc = 0; vc < sk.vertex_classes; ++vc) {
        r.link_types[vc] = sk.links[vc].type;
        if (sk.links[vc].type == LinkType::Other) r.links_ok = false;
    }
    if (r.edges_valid && r.links_ok)
        r.verdict = sk.boundary_face_count == 0 ? ValidationReport::Verdict::ClosedManifold
                                                : ValidationReport::Verdict::BoundedManifold;
    else
        r.verdict = ValidationReport::Verdict::NotAManifold;
    return r;
}

Surface2 boundary_complex(const Triangulation& tri, const Skeleton& sk,
                          std::vector<std::pair<int, int>>& slot_of) {
    slot_of.clear();
    std::vector<std::array<int, 4>> tri_of(tri.size(), {-1, -1, -1, -1});
    for (int i = 0; i < tri.size(); ++i)
        for (int f = 0; f < 4; ++f)
            if (tri.is_boundary_face(i, f)) {
                tri_of[i][f] = static_cast<int>(slot_of.size());
                slot_of.push_back({i, f});
            }
    Surface2 surf(static_cast<int>(slot_of.size()));

    auto local = [](int f, int p) {  // ascending rank of position p within face f
        int l = 0;
        for (int q = 0; q < 4; ++q) {
            if (q == f) continue;
            if (q == p) return l;
            ++l;
        }
        return -1;
    };

    for (const EdgeClass& ec : sk.edges) {
        if (ec.internal) continue;
        if (!ec.valid) throw std::logic_error("boundary_complex: invalid edge class");
        const auto [t1, e1] = ec.slots.front();
        const auto [t2, e2] = ec.slots.back();
        (void)e1;
        (void)e2;
        const auto [u1, v1] = ec.ends.front();
        const auto [u2, v2] = ec.ends.back();
        const int f1 = ec.start_bface, f2 = ec.end_bface;
        const int w1 = 6 - f1 - u1 - v1;  // third vertex of face f1
        const int w2 = 6 - f2 - u2 - v2;
        std::array<int8_t, 3> m{};
        m[local(f1, u1)] = static_cast<int8_t>(local(f2, u2));
        m[local(f1, v1)] = static_cast<int8_t>(local(f2, v2));
        m[local(f1, w1)] = static_cast<int8_t>(local(f2, w2));
        surf.glue(tri_of[t1][f1], local(f1, w1), tri_of[t2][f2], m);
    }
    return surf;
}

std::vector<BoundaryComponent> boundary_components(const Triangulation& tri) {
    const Skeleton sk = compute_skeleton(tri);
    std::vector<std::pair<int, int>> slot_of;
    const Surface2 surf = boundary_complex(tri, sk, slot_of);
    const auto an = surf.analyze();
    std::vector<BoundaryComponent> out(an.components.size());
    for (size_t c = 0; c < an.components.size(); ++c) {
        out[c].chi = an.components[c].chi;
        out[c].orientable = an.components[c].orientable;
    }
    for (size_t i = 0; i < slot_of.size(); ++i)
        out[an.comp_of[static_cast<int>(i)]].faces.push_back(slot_of[i]);
    return out;
}

bool all_tori(const std::vector<BoundaryComponent>& comps) {
    if (comps.empty()) return false;
    for (const auto& c : comps)
        if (c.chi != 0 || !c.orientable) return false;
    return true;
}

bool is_orientable(const Triangulation& tri) {
    // Consistent tetrahedron signs exist iff every gluing flips sign exactly
    // when its permutation is even.
    const int t = tri.size();
    std::vector<int> sign(t, 0);
    for (int root = 0; root < t; ++root) {
        if (sign[root] != 0) continue;
        sign[root] = 1;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int f = 0; f < 4; ++f) {
                const Gluing& g = tri.gluing(i, f);
                if (!g.glued()) continue;
                const int want = -g.perm.sign() * sign[i];
                if (sign[g.tet] == 0) {
                    sign[g.tet] = want;
                    stack.push_back(g.tet);
                } else if (sign[g.tet] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace pachner
