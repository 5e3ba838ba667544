#pragma once

#include <map>
#include <string>
#include <vector>

#include "pachner/moves.hpp"
#include "pachner/triangulation.hpp"

namespace pachner {

/// Outcome of a bounded search in the Pachner graph.
struct SearchResult {
    enum class Status { Connected, Exhausted, BudgetExceeded };

    Status status = Status::BudgetExceeded;
    std::vector<MoveSite> path;  // replayable from the start triangulation
    long long explored = 0;      // signatures visited across both searches
    int depth_reached = 0;

    bool connected() const { return status == Status::Connected; }
};

std::string to_string(SearchResult::Status s);

/// Bidirectional breadth-first search over canonical signatures. Layers are
/// expanded whole, so a reported path is shortest; among shortest paths the
/// lexicographically least move sequence is returned (move order as in
/// enumerate_moves). Deterministic for fixed budgets.
SearchResult connect(const Triangulation& start, const Triangulation& target, int max_depth,
                     long long max_states);

/// Census of the Pachner graph around a triangulation.
struct Census {
    std::map<std::string, int> distance;  // signature -> BFS distance
    bool complete = true;                 // false iff max_states cut a layer
    int radius_reached = 0;
};

Census explore(const Triangulation& start, int radius, long long max_states);

}  // namespace pachner
