#pragma once

// Fundamental-group utilities for fixture verification: a presentation read
// off the 2-skeleton, and counting homomorphisms into small permutation
// groups. Counting |Hom(pi1, G)| for a few G is a cheap, definitive way to
// tell small knot exteriors apart.

#include <string>
#include <vector>

#include "pachner/triangulation.hpp"

namespace pi1 {

struct Presentation {
    int generators = 0;
    // Each relator is a word: positive k means generator k-1, negative its inverse.
    std::vector<std::vector<int>> relators;
};

Presentation presentation_from(const pachner::Triangulation& tri);

/// Small permutation group on n symbols, listed exhaustively.
struct Group {
    int degree = 0;
    std::vector<std::vector<int>> elements;  // permutations as image tables
    int identity = 0;
    std::vector<std::vector<int>> mul;       // multiplication table
    std::vector<int> inv;
    std::string name;
};

Group symmetric_group(int n);
Group alternating_group(int n);

long long hom_count(const Presentation& p, const Group& g);

/// Standard presentations used to fingerprint fixtures.
Presentation unknot_group();          // <x | >
Presentation trefoil_group();         // <x,y | x^2 = y^3>
Presentation figure8_group();         // punctured-torus bundle, monodromy trace 3
Presentation solid_klein_group();     // <x | > (Mobius band x I)
Presentation torus_x_interval_group();// <x,y | [x,y]>
Presentation kb_group();              // <a,b | abab^-1> (Klein bottle x~ I)

}  // namespace pi1
