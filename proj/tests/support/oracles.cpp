#include "oracles.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace oracles {

using pachner::Gluing;
using pachner::Triangulation;

bool orientable_by_enumeration(const Triangulation& tri) {
    const int t = tri.size();
    if (t > 20) throw std::logic_error("orientable_by_enumeration: too many tetrahedra");
    for (unsigned mask = 0; mask < (1u << t); ++mask) {
        bool ok = true;
        for (int i = 0; i < t && ok; ++i)
            for (int f = 0; f < 4 && ok; ++f) {
                const Gluing& g = tri.gluing(i, f);
                if (!g.glued()) continue;
                const int si = (mask >> i) & 1 ? 1 : -1;
                const int sj = (mask >> g.tet) & 1 ? 1 : -1;
                if (sj != -g.perm.sign() * si) ok = false;
            }
        if (ok) return true;
    }
    return false;
}

int vertex_classes_by_scanning(const Triangulation& tri) {
    const int t = tri.size();
    std::vector<int> cls(4 * t);
    for (int i = 0; i < 4 * t; ++i) cls[i] = i;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < t; ++i)
            for (int f = 0; f < 4; ++f) {
                const Gluing& g = tri.gluing(i, f);
                if (!g.glued()) continue;
                for (int v = 0; v < 4; ++v) {
                    if (v == f) continue;
                    int a = 4 * i + v, b = 4 * g.tet + g.perm[v];
                    int m = std::min(cls[a], cls[b]);
                    if (cls[a] != m || cls[b] != m) {
                        cls[a] = cls[b] = m;
                        changed = true;
                    }
                }
            }
    }
    int count = 0;
    for (int i = 0; i < 4 * t; ++i)
        if (cls[i] == i) ++count;
    return count;
}

std::string fixture_path(const std::string& name) {
    return std::string(PACHNER_FIXTURE_DIR) + "/" + name;
}

Triangulation load_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name));
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::stringstream buf;
    buf << in.rdbuf();
    return pachner::parse_triangulation(buf.str());
}

}  // namespace oracles
