#include "pachner/isosig.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace pachner {

namespace {

constexpr char kAlphabet[] =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789+-";

struct Labeling {
    std::vector<int> canon_of;   // old tet -> canonical index (-1 outside)
    std::vector<int> order;      // canonical index -> old tet
    std::vector<Perm4> lab;      // old tet -> perm old positions -> canonical
};

// BFS relabeling of one component from (root, rho); emits the face-record
// stream used for lexicographic minimization.
std::vector<uint32_t> encode_from(const Triangulation& tri, int root, const Perm4& rho,
                                  Labeling* out) {
    std::vector<int> canon_of(tri.size(), -1);
    std::vector<Perm4> lab(tri.size());
    std::vector<int> order;

    canon_of[root] = 0;
    lab[root] = rho;
    order.push_back(root);

    std::vector<uint32_t> enc;
    enc.push_back(0);  // patched with the component size below

    for (size_t head = 0; head < order.size(); ++head) {
        const int t = order[head];
        const Perm4 inv = lab[t].inverse();
        for (int cf = 0; cf < 4; ++cf) {
            const int f = inv[cf];
            const Gluing& g = tri.gluing(t, f);
            if (!g.glued()) {
                enc.push_back(0);
                continue;
            }
            if (canon_of[g.tet] < 0) {
                canon_of[g.tet] = static_cast<int>(order.size());
                lab[g.tet] = lab[t] * g.perm.inverse();
                order.push_back(g.tet);
                enc.push_back(1);
            } else {
                const Perm4 nu = lab[g.tet] * g.perm * inv;
                enc.push_back(2 + 24u * static_cast<uint32_t>(canon_of[g.tet]) +
                              static_cast<uint32_t>(nu.index()));
            }
        }
    }
    enc[0] = static_cast<uint32_t>(order.size());
    if (out) *out = Labeling{std::move(canon_of), std::move(order), std::move(lab)};
    return enc;
}

std::string render(const std::vector<uint32_t>& enc) {
    std::string s;
    for (uint32_t v : enc) {
        do {
            uint32_t chunk = v & 31u;
            v >>= 5;
            s.push_back(kAlphabet[chunk | (v ? 32u : 0u)]);
        } while (v);
    }
    return s;
}

std::vector<int> components_of(const Triangulation& tri) {
    std::vector<int> comp(tri.size(), -1);
    int n = 0;
    for (int r = 0; r < tri.size(); ++r) {
        if (comp[r] >= 0) continue;
        comp[r] = n;
        std::vector<int> st{r};
        while (!st.empty()) {
            const int t = st.back();
            st.pop_back();
            for (int f = 0; f < 4; ++f) {
                const Gluing& g = tri.gluing(t, f);
                if (g.glued() && comp[g.tet] < 0) {
                    comp[g.tet] = n;
                    st.push_back(g.tet);
                }
            }
        }
        ++n;
    }
    return comp;
}

struct ComponentCanon {
    std::vector<uint32_t> enc;
    Labeling labeling;
};

ComponentCanon canonicalize_component(const Triangulation& tri, const std::vector<int>& comp,
                                      int c) {
    ComponentCanon best;
    for (int root = 0; root < tri.size(); ++root) {
        if (comp[root] != c) continue;
        for (int r = 0; r < Perm4::count; ++r) {
            Labeling lb;
            auto enc = encode_from(tri, root, Perm4::at(r), &lb);
            if (best.enc.empty() || enc < best.enc) {
                best.enc = std::move(enc);
                best.labeling = std::move(lb);
            }
        }
    }
    return best;
}

}  // namespace

std::string canonical_signature(const Triangulation& tri) {
    const auto comp = components_of(tri);
    const int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<std::string> parts;
    for (int c = 0; c < ncomp; ++c)
        parts.push_back(render(canonicalize_component(tri, comp, c).enc));
    std::sort(parts.begin(), parts.end());
    std::string sig;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) sig.push_back('.');
        sig += parts[i];
    }
    return sig;
}

Triangulation transport(const Triangulation& a, const Isomorphism& iso, int target_size) {
    Triangulation out(target_size);
    for (int i = 0; i < a.size(); ++i)
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = a.gluing(i, f);
            if (!g.glued()) continue;
            if (std::make_pair(i, f) > std::make_pair(g.tet, g.perm[f])) continue;
            out.glue(iso.tet_map[i], iso.vert_map[i][f], iso.tet_map[g.tet],
                     iso.vert_map[g.tet] * g.perm * iso.vert_map[i].inverse());
        }
    return out;
}

std::optional<Isomorphism> are_isomorphic(const Triangulation& a, const Triangulation& b) {
    if (a.size() != b.size()) return std::nullopt;

    const auto comp_a = components_of(a), comp_b = components_of(b);
    const int na = *std::max_element(comp_a.begin(), comp_a.end()) + 1;
    const int nb = *std::max_element(comp_b.begin(), comp_b.end()) + 1;
    if (na != nb) return std::nullopt;

    std::vector<ComponentCanon> ca, cb;
    for (int c = 0; c < na; ++c) ca.push_back(canonicalize_component(a, comp_a, c));
    for (int c = 0; c < nb; ++c) cb.push_back(canonicalize_component(b, comp_b, c));
    auto by_enc = [](const ComponentCanon& x, const ComponentCanon& y) { return x.enc < y.enc; };
    std::sort(ca.begin(), ca.end(), by_enc);
    std::sort(cb.begin(), cb.end(), by_enc);
    for (int c = 0; c < na; ++c)
        if (ca[c].enc != cb[c].enc) return std::nullopt;

    Isomorphism iso;
    iso.tet_map.assign(a.size(), -1);
    iso.vert_map.assign(a.size(), Perm4());
    for (int c = 0; c < na; ++c)
        for (size_t k = 0; k < ca[c].labeling.order.size(); ++k) {
            const int ta = ca[c].labeling.order[k];
            const int tb = cb[c].labeling.order[k];
            iso.tet_map[ta] = tb;
            iso.vert_map[ta] = cb[c].labeling.lab[tb].inverse() * ca[c].labeling.lab[ta];
        }

    // A witness must transport a's table exactly onto b's.
    if (!(transport(a, iso, b.size()) == b))
        throw std::logic_error("are_isomorphic: unsound witness");
    return iso;
}

}  // namespace pachner
