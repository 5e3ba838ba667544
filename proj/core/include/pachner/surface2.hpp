#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace pachner {

/// Generalized 2-dimensional triangulation: triangles with side gluings.
/// Side k of a triangle is the side opposite corner k. A side gluing carries
/// a full corner map so identifications of corners are explicit.
class Surface2 {
public:
    struct Side {
        int tri = -1;
        std::array<int8_t, 3> map{0, 1, 2};  // this triangle's corners -> target's
        bool glued() const { return tri >= 0; }
    };

    explicit Surface2(int triangles) : sides_(triangles) {}

    int size() const { return static_cast<int>(sides_.size()); }
    const Side& side(int tri, int s) const { return sides_[tri][s]; }
    bool is_boundary_side(int tri, int s) const { return !sides_[tri][s].glued(); }

    /// Glue side s1 of t1 to side map[s1] of t2. Installs both directions.
    void glue(int t1, int s1, int t2, const std::array<int8_t, 3>& map);

    struct Component {
        int triangles = 0;
        int chi = 0;
        bool closed = true;
        bool orientable = true;
    };
    struct Analysis {
        std::vector<Component> components;
        std::vector<int> comp_of;  // per triangle
        int total_chi = 0;
    };
    Analysis analyze() const;

private:
    std::vector<std::array<Side, 3>> sides_;
};

}  // namespace pachner
