#pragma once

#include <string>
#include <vector>

#include "pachner/intmatrix.hpp"
#include "pachner/skeleton.hpp"
#include "pachner/triangulation.hpp"

namespace pachner {

/// Finitely generated abelian group Z^betti + sum of Z/d_i with the d_i the
/// invariant factors (each dividing the next).
struct HomologyGroup {
    int betti = 0;
    std::vector<BigInt> torsion;

    bool operator==(const HomologyGroup&) const = default;
    std::string str() const;  // "Z^b + Z/d1 + ..." ("0" when trivial)
};

/// H_0..H_3 with integer coefficients, computed on the quotient cell
/// structure of the identified skeleton.
std::vector<HomologyGroup> homology_groups(const Triangulation& tri);

/// H_k(M, boundary M; Z) via the quotient chain complex. Equals the absolute
/// homology for closed inputs.
std::vector<HomologyGroup> relative_homology(const Triangulation& tri);

/// Rank data of H_1(boundary M; Q) -> H_1(M; Q).
struct PeripheralMap {
    int image_rank = 0;
    int betti1 = 0;           // beta_1(M; Q)
    int boundary_betti1 = 0;  // dim H_1(boundary; Q)
    bool surjective = false;
};

/// Throws std::invalid_argument when the boundary is empty.
PeripheralMap peripheral_map(const Triangulation& tri);

/// Rank bookkeeping of 0 -> H_2(M,dM;Q) -> H_1(dM;Q) -> H_1(M;Q) -> 0.
struct ExactnessReport {
    bool applicable = false;  // boundary present with H_1(dM;Q) nonzero
    int rank_h2_rel = 0;
    int rank_h1_boundary = 0;
    int rank_h1 = 0;
    int image_rank = 0;
    int boundary_tori = 0;
    bool two_per_torus = false;  // dim H_1(dM;Q) == 2 per boundary torus
    bool exact = false;

    std::string str() const;
};

ExactnessReport exactness_check(const Triangulation& tri);

/// Chain boundary matrices of the identified cell structure, exposed for
/// tests: d1 (vertices x edges), d2 (edges x faces), d3 (faces x tets).
struct ChainComplex {
    IntMatrix d1, d2, d3;
};

ChainComplex chain_complex(const Triangulation& tri, const Skeleton& sk);

}  // namespace pachner
