#ifndef HSLAB_SEARCH_HPP
#define HSLAB_SEARCH_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <queue>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hslab/error.hpp"

namespace hslab {

enum class TieBreak { HIGH_G, LOW_G };

template <typename State>
struct SearchResult {
    int64_t cost_units = 0;
    std::vector<State> path;        // start state first, goal state last
    size_t expanded = 0;            // includes the final goal expansion
    size_t generated = 0;           // states pushed onto the fringe
};

struct SearchLimits {
    size_t max_expansions = 10'000'000;
};

/*
  A* over an implicitly generated graph with exact integer costs.
  Duplicate detection uses a closed set keyed on state identity;
  re-opening is disabled (the heuristics used here are consistent).
  Among equal-f fringe entries the tie break picks the higher (or
  lower) g; residual ties fall back to insertion order.
*/
template <typename Domain, typename Heuristic>
SearchResult<typename Domain::State>
astar(const Domain &domain, const typename Domain::State &start, Heuristic &&h,
      TieBreak tie_break = TieBreak::HIGH_G, const SearchLimits &limits = {}) {
    using State = typename Domain::State;

    struct Entry {
        int64_t f;
        int64_t g;
        uint64_t seq;
        State state;
    };
    const bool high_g = tie_break == TieBreak::HIGH_G;
    auto worse = [high_g](const Entry &a, const Entry &b) {
        if (a.f != b.f)
            return a.f > b.f;
        if (a.g != b.g)
            return high_g ? a.g < b.g : a.g > b.g;
        return a.seq > b.seq;  // FIFO among complete ties
    };

    std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> open(worse);
    std::unordered_map<State, int64_t> best_g;
    std::unordered_map<State, State> parent;
    std::unordered_set<State> closed;

    SearchResult<State> result;
    uint64_t seq = 0;
    best_g.emplace(start, 0);
    open.push(Entry{int64_t(h(start)), 0, seq++, start});
    result.generated = 1;

    while (!open.empty()) {
        Entry entry = open.top();
        open.pop();
        if (closed.count(entry.state))
            continue;  // stale duplicate
        closed.insert(entry.state);
        ++result.expanded;
        if (result.expanded > limits.max_expansions)
            throw Error(ErrorCode::RESOURCE_LIMIT,
                        "A* exceeded the expansion cap");

        if (domain.is_goal(entry.state)) {
            result.cost_units = entry.g;
            State at = entry.state;
            result.path.push_back(at);
            while (!(at == start)) {
                at = parent.at(at);
                result.path.push_back(at);
            }
            std::reverse(result.path.begin(), result.path.end());
            return result;
        }

        for (auto &[succ, cost] : domain.successors(entry.state)) {
            if (closed.count(succ))
                continue;
            int64_t tentative = entry.g + cost;
            auto it = best_g.find(succ);
            if (it != best_g.end() && it->second <= tentative)
                continue;
            best_g[succ] = tentative;
            parent.insert_or_assign(succ, entry.state);
            open.push(Entry{tentative + int64_t(h(succ)), tentative, seq++, succ});
            ++result.generated;
        }
    }
    throw Error(ErrorCode::UNSOLVABLE, "A* fringe exhausted without a goal");
}

/*
  Breadth-first distances from a source over the whole reachable space.
  Requires unit edge costs; for reversible unit-cost domains run from
  the goal state to obtain h* for every reachable state. Also serves as
  the state-space enumeration oracle.
*/
template <typename Domain>
std::unordered_map<typename Domain::State, int64_t>
bfs_cost_map(const Domain &domain, const typename Domain::State &source,
             const SearchLimits &limits = {}) {
    using State = typename Domain::State;
    std::unordered_map<State, int64_t> distance;
    std::deque<State> queue;
    distance.emplace(source, 0);
    queue.push_back(source);
    while (!queue.empty()) {
        State state = queue.front();
        queue.pop_front();
        int64_t d = distance.at(state);
        if (distance.size() > limits.max_expansions)
            throw Error(ErrorCode::RESOURCE_LIMIT, "BFS exceeded the state cap");
        for (auto &[succ, cost] : domain.successors(state)) {
            if (cost != 1)
                throw Error(ErrorCode::USAGE_ERROR,
                            "bfs_cost_map requires unit edge costs");
            if (distance.emplace(succ, d + 1).second)
                queue.push_back(succ);
        }
    }
    return distance;
}

}

#endif
