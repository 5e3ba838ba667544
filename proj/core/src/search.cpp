#include "pachner/search.hpp"

#include <algorithm>
#include <optional>

#include "pachner/isosig.hpp"

namespace pachner {

namespace {

struct SideState {
    std::map<std::string, int> dist;
    std::vector<Triangulation> frontier;  // representatives of the last layer
    int radius = 0;
};

// Expand one full layer; returns false if max_states would be blown.
bool expand_layer(SideState& side, const SideState& other, bool backward, long long max_states,
                  std::optional<int>& best_meet) {
    std::vector<Triangulation> next;
    for (const Triangulation& t : side.frontier)
        for (const MoveSite& s : enumerate_moves(t)) {
            MoveResult r = apply_move(t, s);
            std::string sig = canonical_signature(r.tri);
            if (side.dist.count(sig)) continue;
            if (static_cast<long long>(side.dist.size() + other.dist.size()) + 1 > max_states)
                return false;
            side.dist.emplace(sig, side.radius + 1);
            auto it = other.dist.find(sig);
            if (it != other.dist.end()) {
                const int total = side.radius + 1 + it->second;
                if (!best_meet || total < *best_meet) best_meet = total;
            }
            next.push_back(std::move(r.tri));
        }
    (void)backward;
    side.frontier = std::move(next);
    ++side.radius;
    return true;
}

// Lexicographically least shortest path, found by depth-first search
// constrained to states whose forward/backward distances fit a length-d
// geodesic. Coverage: df + db >= d, so every step is checked against at
// least one distance map.
bool dfs_path(const Triangulation& cur, int k, int d, const std::string& target_sig,
              const SideState& fwd, const SideState& bwd, std::vector<MoveSite>& path) {
    if (k == d) return canonical_signature(cur) == target_sig;
    for (const MoveSite& s : enumerate_moves(cur)) {
        MoveResult r = apply_move(cur, s);
        const std::string sig = canonical_signature(r.tri);
        const int kf = k + 1, kb = d - k - 1;
        bool ok = true;
        if (kf <= fwd.radius) {
            auto it = fwd.dist.find(sig);
            if (it == fwd.dist.end() || it->second != kf) ok = false;
        }
        if (ok && kb <= bwd.radius) {
            auto it = bwd.dist.find(sig);
            if (it == bwd.dist.end() || it->second != kb) ok = false;
        }
        if (!ok) continue;
        path.push_back(s);
        if (dfs_path(r.tri, k + 1, d, target_sig, fwd, bwd, path)) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::string to_string(SearchResult::Status s) {
    switch (s) {
        case SearchResult::Status::Connected: return "connected";
        case SearchResult::Status::Exhausted: return "exhausted";
        case SearchResult::Status::BudgetExceeded: return "budget_exceeded";
    }
    return "?";
}

SearchResult connect(const Triangulation& start, const Triangulation& target, int max_depth,
                     long long max_states) {
    SearchResult res;
    const std::string sig_s = canonical_signature(start);
    const std::string sig_t = canonical_signature(target);
    if (sig_s == sig_t) {
        res.status = SearchResult::Status::Connected;
        res.explored = 1;
        return res;
    }

    SideState fwd, bwd;
    fwd.dist.emplace(sig_s, 0);
    fwd.frontier.push_back(start);
    bwd.dist.emplace(sig_t, 0);
    bwd.frontier.push_back(target);

    std::optional<int> best_meet;
    bool states_blown = false;
    while ((!best_meet || *best_meet > fwd.radius + bwd.radius) &&
           fwd.radius + bwd.radius < max_depth) {
        if (fwd.frontier.empty() || bwd.frontier.empty()) break;
        SideState& side = fwd.frontier.size() <= bwd.frontier.size() ? fwd : bwd;
        if (!expand_layer(side, &side == &fwd ? bwd : fwd, &side == &bwd, max_states, best_meet)) {
            states_blown = true;
            break;
        }
    }

    res.explored = static_cast<long long>(fwd.dist.size() + bwd.dist.size());
    res.depth_reached = fwd.radius + bwd.radius;

    if (best_meet && *best_meet <= fwd.radius + bwd.radius && *best_meet <= max_depth) {
        res.status = SearchResult::Status::Connected;
        std::vector<MoveSite> path;
        if (!dfs_path(start, 0, *best_meet, sig_t, fwd, bwd, path))
            throw std::logic_error("connect: failed to reconstruct a certified path");
        res.path = std::move(path);
        return res;
    }
    if (states_blown) {
        res.status = SearchResult::Status::BudgetExceeded;
        return res;
    }
    if (fwd.frontier.empty() || bwd.frontier.empty()) {
        res.status = SearchResult::Status::Exhausted;  // component fully mapped
        return res;
    }
    // Depth budget consumed; the layer sums certify there is no path of
    // length <= max_depth.
    res.status = SearchResult::Status::Exhausted;
    return res;
}

Census explore(const Triangulation& start, int radius, long long max_states) {
    Census c;
    c.distance.emplace(canonical_signature(start), 0);
    std::vector<Triangulation> frontier{start};
    for (int r = 0; r < radius; ++r) {
        std::vector<Triangulation> next;
        std::vector<std::pair<std::string, int>> added;
        bool blown = false;
        for (const Triangulation& t : frontier) {
            for (const MoveSite& s : enumerate_moves(t)) {
                MoveResult mr = apply_move(t, s);
                std::string sig = canonical_signature(mr.tri);
                if (c.distance.count(sig)) continue;
                if (static_cast<long long>(c.distance.size()) + 1 > max_states) {
                    blown = true;
                    break;
                }
                c.distance.emplace(sig, r + 1);
                added.push_back({sig, r + 1});
                next.push_back(std::move(mr.tri));
            }
            if (blown) break;
        }
        if (blown) {
            // Drop the partial layer so reported distances stay exact.
            for (const auto& [sig, d] : added) c.distance.erase(sig);
            c.complete = false;
            return c;
        }
        frontier = std::move(next);
        c.radius_reached = r + 1;
        if (frontier.empty()) break;
    }
    return c;
}

}  // namespace pachner
