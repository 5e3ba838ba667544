#pragma once

// Test-only oracles, kept independent of the library code paths they check.

#include <string>
#include <vector>

#include "pachner/triangulation.hpp"

namespace oracles {

/// Orientability by brute-force sign assignment: try all 2^t sign vectors
/// and accept if one is compatible with every gluing. Exponential, test-only.
bool orientable_by_enumeration(const pachner::Triangulation& tri);

/// Vertex-class count by repeated scanning over corner identifications
/// (no union-find, quadratic on purpose).
int vertex_classes_by_scanning(const pachner::Triangulation& tri);

/// Load a fixture file from the fixtures directory shipped with the repo.
pachner::Triangulation load_fixture(const std::string& name);
std::string fixture_path(const std::string& name);

}  // namespace oracles
