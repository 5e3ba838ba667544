#include "pachner/surface2.hpp"

#include <numeric>
#include <stdexcept>

namespace pachner {

namespace {

struct UnionFind {
    std::vector<int> parent, rank_;
    explicit UnionFind(int n) : parent(n), rank_(n, 0) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
    }
};

// Union-find with parity relative to the root; returns false on an odd cycle.
struct ParityUF {
    std::vector<int> parent;
    std::vector<int8_t> par;
    explicit ParityUF(int n) : parent(n), par(n, 0) { std::iota(parent.begin(), parent.end(), 0); }
    std::pair<int, int> find(int x) {
        if (parent[x] == x) return {x, 0};
        auto [r, p] = find(parent[x]);
        parent[x] = r;
        par[x] = static_cast<int8_t>(par[x] ^ p);
        return {r, par[x]};
    }
    bool unite(int a, int b, int parity) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return ((pa ^ pb) & 1) == parity;
        parent[rb] = ra;
        par[rb] = static_cast<int8_t>(pa ^ pb ^ parity);
        return true;
    }
};

// Boundary direction of side k in a (0,1,2)-oriented triangle.
constexpr int kSideFrom[3] = {1, 2, 0};
constexpr int kSideTo[3] = {2, 0, 1};

}  // namespace

void Surface2::glue(int t1, int s1, int t2, const std::array<int8_t, 3>& map) {
    if (t1 < 0 || t1 >= size() || t2 < 0 || t2 >= size() || s1 < 0 || s1 > 2)
        throw std::out_of_range("Surface2::glue: index out of range");
    const int s2 = map[s1];
    if (t1 == t2 && s1 == s2) throw std::logic_error("Surface2::glue: side glued to itself");
    if (sides_[t1][s1].glued() || sides_[t2][s2].glued())
        throw std::logic_error("Surface2::glue: side already glued");
    std::array<int8_t, 3> inv{};
    for (int c = 0; c < 3; ++c) inv[map[c]] = static_cast<int8_t>(c);
    sides_[t1][s1] = Side{t2, map};
    sides_[t2][s2] = Side{t1, inv};
}

Surface2::Analysis Surface2::analyze() const {
    const int n = size();
    UnionFind comps(n), corners(3 * n);
    ParityUF orient(n);
    std::vector<bool> oriented_comp(n, true);

    auto corner_id = [](int tri, int c) { return 3 * tri + c; };

    int side_classes = 0;
    std::vector<std::array<bool, 3>> seen(n, {false, false, false});
    for (int t = 0; t < n; ++t) {
        for (int s = 0; s < 3; ++s) {
            if (seen[t][s]) continue;
            const Side& g = sides_[t][s];
            if (!g.glued()) {
                seen[t][s] = true;
                ++side_classes;
                continue;
            }
            const int t2 = g.tri, s2 = g.map[s];
            seen[t][s] = true;
            seen[t2][s2] = true;
            ++side_classes;
            comps.unite(t, t2);
            for (int c = 0; c < 3; ++c)
                if (c != s) corners.unite(corner_id(t, c), corner_id(t2, g.map[c]));
            // Same orientation sign allowed iff the corner map reverses the
            // induced boundary direction of the shared side.
            const bool reverses =
                g.map[kSideFrom[s]] == kSideTo[s2] && g.map[kSideTo[s]] == kSideFrom[s2];
            if (!orient.unite(t, t2, reverses ? 0 : 1)) oriented_comp[comps.find(t)] = false;
        }
    }

    Analysis out;
    out.comp_of.assign(n, -1);
    std::vector<int> comp_index(n, -1);
    for (int t = 0; t < n; ++t) {
        int r = comps.find(t);
        if (comp_index[r] < 0) {
            comp_index[r] = static_cast<int>(out.components.size());
            out.components.push_back({});
        }
        out.comp_of[t] = comp_index[r];
        ++out.components[comp_index[r]].triangles;
    }

    // Distribute corner classes, side classes and boundary flags.
    std::vector<bool> corner_seen(3 * n, false);
    for (int t = 0; t < n; ++t) {
        Component& c = out.components[out.comp_of[t]];
        for (int s = 0; s < 3; ++s) {
            int root = corners.find(corner_id(t, s));
            if (!corner_seen[root]) {
                corner_seen[root] = true;
                c.chi += 1;  // vertex
            }
            if (!sides_[t][s].glued()) c.closed = false;
        }
    }
    std::fill(seen.begin(), seen.end(), std::array<bool, 3>{false, false, false});
    for (int t = 0; t < n; ++t)
        for (int s = 0; s < 3; ++s) {
            if (seen[t][s]) continue;
            seen[t][s] = true;
            const Side& g = sides_[t][s];
            if (g.glued()) seen[g.tri][g.map[s]] = true;
            out.components[out.comp_of[t]].chi -= 1;  // edge
        }
    for (int t = 0; t < n; ++t) out.components[out.comp_of[t]].chi += 1;  // face
    for (int t = 0; t < n; ++t)
        if (!oriented_comp[comps.find(t)]) out.components[out.comp_of[t]].orientable = false;

    for (const Component& c : out.components) out.total_chi += c.chi;
    (void)side_classes;
    return out;
}

}  // namespace pachner
